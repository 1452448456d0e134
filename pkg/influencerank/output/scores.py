from influencerank.common import format_score, format_weight
from influencerank.graphs.graph import GraphStats
from influencerank.output.writer import Writer


class GraphWriter(Writer):
    @staticmethod
    def name():
        return 'graph'

    def convert(self):
        graph = self.result
        lines = [f'#nodes={graph.node_count} arcs={graph.arc_count}']
        lines += [f'{i}\t{j}\t{format_weight(w)}' for (i, j), w in graph.weights.items()]
        lines += [f'{node}\t-\t-' for node in graph.isolated_nodes()]
        return lines


class StatsWriter(Writer):
    @staticmethod
    def name():
        return 'stats'

    def convert(self):
        stats = self.result
        lines = [
            f'nodes\t{stats.node_count}',
            f'arcs\t{stats.arc_count}',
            f'mean_weight\t{format_score(stats.mean_weight)}',
        ]
        edges = GraphStats.bin_edges()
        for low, high, count in zip(edges[:-1], edges[1:], stats.histogram):
            lines.append(f'bin\t{low:.1f}\t{high:.1f}\t{count}')
        return lines


class ScoresWriter(Writer):
    @staticmethod
    def name():
        return 'scores'

    def convert(self):
        scores = self.result
        lines = [f'#iterations={scores.iterations_run} converged={str(scores.converged).lower()}']
        for node, influence, passivity in zip(scores.nodes, scores.influence, scores.passivity):
            lines.append(f'{node}\t{format_score(influence)}\t{format_score(passivity)}')
        return lines


class TraceWriter(Writer):
    @staticmethod
    def name():
        return 'trace'

    def convert(self):
        return [f'{iteration}\t{format_score(value)}' for iteration, value in self.result]


class VectorWriter(Writer):
    @staticmethod
    def name():
        return 'vector'

    def convert(self):
        vector = self.result
        lines = [f'#measure={vector.label}']
        lines += [f'{node}\t{format_score(value)}' for node, value in vector.items()]
        return lines
