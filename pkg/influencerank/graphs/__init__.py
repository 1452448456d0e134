from influencerank.graphs.comention import CoMentionBuilder
from influencerank.graphs.graph import GraphStats, InfluenceGraph, PairwiseCounts, graph_stats
from influencerank.graphs.retweet import RetweetBuilder, RetweetFollowerBuilder

all_builders = [CoMentionBuilder, RetweetBuilder, RetweetFollowerBuilder]


def build_comention(log, follows, min_urls=3):
    return CoMentionBuilder(min_urls).build(log, follows)


def build_retweet(log, min_urls=3):
    return RetweetBuilder(min_urls).build(log)


def build_retweet_follower(log, follows, min_urls=3):
    return RetweetFollowerBuilder(min_urls).build(log, follows)
