import numpy as np

from influencerank.common import ranking_order


class ScoreVector:
    """Non-negative value per user for one measure (``label``)."""

    def __init__(self, label, nodes, values):
        self.label = label
        self.nodes = tuple(nodes)
        self.values = np.asarray(values, dtype=np.float64)
        if self.values.shape != (len(self.nodes),):
            raise ValueError(f'{label}: {len(self.nodes)} nodes but {self.values.shape} values')
        self._index = None

    @classmethod
    def from_mapping(cls, label, mapping):
        nodes = sorted(mapping)
        return cls(label, nodes, [mapping[node] for node in nodes])

    @property
    def index(self):
        if self._index is None:
            self._index = {node: position for position, node in enumerate(self.nodes)}
        return self._index

    def __getitem__(self, node):
        return float(self.values[self.index[node]])

    def get(self, node, default=None):
        position = self.index.get(node)
        return default if position is None else float(self.values[position])

    def __contains__(self, node):
        return node in self.index

    def __len__(self):
        return len(self.nodes)

    def items(self):
        return zip(self.nodes, (float(v) for v in self.values))

    def as_dict(self):
        return dict(self.items())

    def aligned(self, nodes):
        """The vector restricted or extended to ``nodes``; missing users score 0."""
        return ScoreVector(self.label, nodes, [self.get(node, 0.0) for node in nodes])

    def ranking(self):
        """Users by value descending, ties by user id."""
        return [self.nodes[k] for k in ranking_order(self.nodes, self.values)]

    def __repr__(self):
        return f'ScoreVector{{label={self.label}, nodes={len(self.nodes)}}}'
