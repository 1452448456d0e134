from collections import defaultdict
from types import MappingProxyType
from typing import NamedTuple

import numpy as np

from influencerank.errors import InvalidGraph

HISTOGRAM_BINS = 10


class InfluenceGraph:
    """Weighted directed graph G = (N, E, W).

    An arc (i, j) with weight w means i attempted to influence j and a
    fraction w of that attempt succeeded, so every weight lies in (0, 1].
    Nodes are kept sorted and arcs are kept in (i, j) order; everything that
    iterates over the graph relies on that order for reproducible sums.
    """

    def __init__(self, nodes, weights):
        nodes = sorted(set(nodes))
        known = set(nodes)
        checked = {}
        for (i, j), w in weights.items():
            if i == j:
                raise InvalidGraph(f'self-arc on {i!r}')
            if i not in known or j not in known:
                raise InvalidGraph(f'arc ({i!r}, {j!r}) has an endpoint outside the node set')
            w = float(w)
            if not 0.0 < w <= 1.0:
                raise InvalidGraph(f'arc ({i!r}, {j!r}) has weight {w!r} outside (0, 1]')
            checked[(i, j)] = w

        self.nodes = tuple(nodes)
        self.weights = MappingProxyType(dict(sorted(checked.items())))
        self._index = None
        self._arrays = None
        self._out = None
        self._in = None

    @property
    def arcs(self):
        return self.weights.keys()

    @property
    def node_count(self):
        return len(self.nodes)

    @property
    def arc_count(self):
        return len(self.weights)

    @property
    def index(self):
        if self._index is None:
            self._index = {node: position for position, node in enumerate(self.nodes)}
        return self._index

    def arrays(self):
        """(source positions, target positions, weights) in arc order."""
        if self._arrays is None:
            index = self.index
            count = len(self.weights)
            src = np.fromiter((index[i] for i, _ in self.weights), dtype=np.int64, count=count)
            dst = np.fromiter((index[j] for _, j in self.weights), dtype=np.int64, count=count)
            w = np.fromiter(self.weights.values(), dtype=np.float64, count=count)
            self._arrays = src, dst, w
        return self._arrays

    def out_arcs(self, node):
        if self._out is None:
            self._build_adjacency()
        return self._out.get(node, {})

    def in_arcs(self, node):
        if self._in is None:
            self._build_adjacency()
        return self._in.get(node, {})

    def _build_adjacency(self):
        out_arcs = defaultdict(dict)
        in_arcs = defaultdict(dict)
        for (i, j), w in self.weights.items():
            out_arcs[i][j] = w
            in_arcs[j][i] = w
        self._out = dict(out_arcs)
        self._in = dict(in_arcs)

    def isolated_nodes(self):
        if self._out is None:
            self._build_adjacency()
        return [node for node in self.nodes if node not in self._out and node not in self._in]

    def __eq__(self, other):
        return isinstance(other, InfluenceGraph) and self.nodes == other.nodes and dict(self.weights) == dict(other.weights)

    def __repr__(self):
        return f'InfluenceGraph{{nodes={len(self.nodes)}, arcs={len(self.weights)}}}'


class PairwiseCounts(NamedTuple):
    """URL counts behind one arc: S_ij (accepted), F_ij (ignored), P_i (posted)."""
    s: int
    f: int
    p: int


class GraphStats(NamedTuple):
    node_count: int
    arc_count: int
    mean_weight: float
    histogram: tuple

    @staticmethod
    def bin_edges():
        return np.linspace(0.0, 1.0, HISTOGRAM_BINS + 1)


def graph_stats(graph):
    if not graph.arc_count:
        return GraphStats(graph.node_count, 0, 0.0, ())

    _, _, w = graph.arrays()
    counts, _ = np.histogram(w, bins=GraphStats.bin_edges())
    return GraphStats(
        node_count=graph.node_count,
        arc_count=graph.arc_count,
        mean_weight=float(np.sum(w) / len(w)),
        histogram=tuple(int(c) for c in counts),
    )
