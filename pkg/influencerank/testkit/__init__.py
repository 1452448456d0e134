from influencerank.testkit.oracles import dense_ip_oracle, dense_pagerank_oracle
from influencerank.testkit.synth import (SynthParams, planted_contrast, random_graph, random_sparse_graph, synth_clicks,
                                         synth_trace, write_trace)
