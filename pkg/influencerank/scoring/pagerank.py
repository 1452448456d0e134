import logging
from dataclasses import dataclass

import numpy as np

from influencerank.common import timed
from influencerank.errors import EmptyNodeSet, InvalidParams
from influencerank.graphs.graph import InfluenceGraph
from influencerank.scoring.sparse import RowBlockProduct, arc_matrix, thread_pool
from influencerank.scoring.vector import ScoreVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PageRankParams:
    damping: float = 0.85
    epsilon: float = 1e-12
    max_iterations: int = 200

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise InvalidParams(f'damping must lie in (0, 1), got {self.damping}')
        if not self.epsilon >= 0:
            raise InvalidParams(f'epsilon must be non-negative, got {self.epsilon}')
        if self.max_iterations < 1:
            raise InvalidParams(f'max_iterations must be at least 1, got {self.max_iterations}')


def invert_graph(graph):
    """Reverses every arc and keeps its weight: w'_ij = w_ji."""
    return InfluenceGraph(graph.nodes, {(j, i): w for (i, j), w in graph.weights.items()})


def weighted_pagerank(graph, params=PageRankParams(), threads=1):
    """PageRank where the surfer at i moves to j with probability w_ij / sum_k w_ik.

    Expects the already inverted graph, so that influenced users point at
    their influencers. Teleport and dangling mass are spread uniformly.
    """
    n = graph.node_count
    if not n:
        raise EmptyNodeSet('PageRank needs at least one node')

    src, dst, w = graph.arrays()
    out_weight = np.bincount(src, weights=w, minlength=n)
    # column-stochastic transitions: x_new[j] += x[i] * w_ij / out_i
    transitions = arc_matrix(dst, src, w / out_weight[src] if len(w) else w, n)
    dangling = out_weight == 0

    d = params.damping
    x = np.full(n, 1.0 / n)
    with thread_pool(threads) as pool, timed(logger.info, 'running PageRank on %d nodes', n):
        product = RowBlockProduct(transitions, threads)
        for iteration in range(1, params.max_iterations + 1):
            dangling_mass = np.sum(x[dangling])
            x_new = d * (product(pool, x) + dangling_mass / n) + (1.0 - d) / n
            change = float(np.sum(np.abs(x_new - x)))
            x = x_new
            if change < params.epsilon:
                logger.info('PageRank converged after %d iterations', iteration)
                break
        else:
            logger.warning('PageRank did not converge in %d iterations (last change %.3e)',
                           params.max_iterations, change)

    return ScoreVector('pagerank', graph.nodes, x / np.sum(x))
