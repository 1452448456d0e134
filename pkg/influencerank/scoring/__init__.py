from influencerank.scoring.ip import IpParams, IterationTrace, RateView, ScorePair, compute_rates, delta, run_ip
from influencerank.scoring.measures import follower_count, h_index, h_index_from_counts, h_index_vector, retweet_count
from influencerank.scoring.pagerank import PageRankParams, invert_graph, weighted_pagerank
from influencerank.scoring.vector import ScoreVector
