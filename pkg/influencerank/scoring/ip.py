"""Influence-Passivity scores.

Acceptance rate of arc (i, j): u_ij = w_ij / sum_k w_kj (over j's in-arcs).
Rejection rate of arc (j, i): v_ji = (1 - w_ji) / sum_k (1 - w_jk) (over j's out-arcs).

Each iteration first computes raw passivity from the previous influence,

    R_i = sum_{j:(j,i) in E} v_ji I_j

then raw influence from that fresh passivity,

    I_i = sum_{j:(i,j) in E} u_ij R_j

and normalizes both vectors to sum to 1.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from influencerank.common import timed
from influencerank.errors import DegenerateGraph, EmptyGraph, InvalidParams, NodeSetMismatch
from influencerank.scoring.sparse import RowBlockProduct, arc_matrix, thread_pool
from influencerank.scoring.vector import ScoreVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IpParams:
    max_iterations: int = 100
    epsilon: float = 1e-9

    def __post_init__(self):
        if self.max_iterations < 1:
            raise InvalidParams(f'max_iterations must be at least 1, got {self.max_iterations}')
        if not self.epsilon >= 0:
            raise InvalidParams(f'epsilon must be non-negative, got {self.epsilon}')


class RateView(NamedTuple):
    """Rates aligned with the graph's arc order.

    ``acceptance[k]`` is u for arc k = (i, j); ``rejection[k]`` is the
    rejection rate of the same arc read from its source, v_ij.
    """
    nodes: tuple
    src: np.ndarray
    dst: np.ndarray
    acceptance: np.ndarray
    rejection: np.ndarray

    def acceptance_of(self, i, j):
        return float(self.acceptance[self._position(i, j)])

    def rejection_of(self, j, i):
        return float(self.rejection[self._position(j, i)])

    def _position(self, i, j):
        index = {node: position for position, node in enumerate(self.nodes)}
        hits = np.flatnonzero((self.src == index[i]) & (self.dst == index[j]))
        if not len(hits):
            raise KeyError((i, j))
        return hits[0]


class ScorePair:
    def __init__(self, nodes, influence, passivity, iterations_run=0, converged=False):
        self.nodes = tuple(nodes)
        self.influence = np.asarray(influence, dtype=np.float64)
        self.passivity = np.asarray(passivity, dtype=np.float64)
        self.iterations_run = iterations_run
        self.converged = converged

    def influence_of(self, node):
        return float(self.influence[self.nodes.index(node)])

    def passivity_of(self, node):
        return float(self.passivity[self.nodes.index(node)])

    def as_vectors(self):
        return (ScoreVector('ip-influence', self.nodes, self.influence),
                ScoreVector('ip-passivity', self.nodes, self.passivity))

    def __repr__(self):
        return f'ScorePair{{nodes={len(self.nodes)}, iterations={self.iterations_run}, converged={self.converged}}}'


class IterationTrace:
    def __init__(self, deltas=()):
        self.deltas = list(deltas)

    def record(self, value):
        self.deltas.append(float(value))

    def __len__(self):
        return len(self.deltas)

    def __iter__(self):
        return iter(enumerate(self.deltas, start=1))

    def __repr__(self):
        return f'IterationTrace{{iterations={len(self.deltas)}}}'


def compute_rates(graph):
    src, dst, w = graph.arrays()
    n = graph.node_count

    # bincount accumulates in arc order, which keeps the sums reproducible
    accepted = np.bincount(dst, weights=w, minlength=n)
    acceptance = w / accepted[dst]

    rejected = 1.0 - w
    rejected_total = np.bincount(src, weights=rejected, minlength=n)
    denominator = rejected_total[src]
    rejection = np.zeros_like(w)
    # a node whose out-weights are all 1 rejects nothing
    np.divide(rejected, denominator, out=rejection, where=denominator > 0)

    return RateView(graph.nodes, src, dst, acceptance, rejection)


def delta(prev, next):
    if prev.nodes != next.nodes:
        raise NodeSetMismatch('score pairs cover different node sets')

    return float(np.sum(np.abs(next.influence - prev.influence)) + np.sum(np.abs(next.passivity - prev.passivity)))


def run_ip(graph, params=IpParams(), threads=1, callback=None):
    """Influence and passivity of every node, with the per-iteration delta trace."""
    if not graph.arc_count:
        raise EmptyGraph('the influence graph has no arcs')

    n = graph.node_count
    rates = compute_rates(graph)
    # I <- U @ R with U[i, j] = u_ij; R <- Vt @ I with Vt[i, j] = v_ji
    accept = arc_matrix(rates.src, rates.dst, rates.acceptance, n)
    reject = arc_matrix(rates.dst, rates.src, rates.rejection, n)

    scores = ScorePair(graph.nodes, np.ones(n), np.ones(n))
    trace = IterationTrace()

    with thread_pool(threads) as pool, timed(logger.info, 'running IP on %d nodes', n):
        accept_product = RowBlockProduct(accept, threads)
        reject_product = RowBlockProduct(reject, threads)
        for iteration in range(1, params.max_iterations + 1):
            raw_passivity = reject_product(pool, scores.influence)
            raw_influence = accept_product(pool, raw_passivity)

            passivity_total = np.sum(raw_passivity)
            influence_total = np.sum(raw_influence)
            if passivity_total <= 0 or influence_total <= 0:
                raise DegenerateGraph(f'scores vanished at iteration {iteration}: '
                                      'no arc carries both acceptance and rejection')

            current = ScorePair(graph.nodes, raw_influence / influence_total, raw_passivity / passivity_total,
                                iterations_run=iteration)
            change = delta(scores, current)
            trace.record(change)
            scores = current
            logger.debug('iteration %d: delta %.3e', iteration, change)

            if callback is not None:
                callback(iteration, scores)

            if change < params.epsilon:
                scores.converged = True
                break

    if scores.converged:
        logger.info('IP converged after %d iterations', scores.iterations_run)
    else:
        logger.warning('IP did not converge in %d iterations (last delta %.3e)', scores.iterations_run, trace.deltas[-1])

    return scores, trace
