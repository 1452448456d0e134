from influencerank.errors import EmptyInput, UnparsableLine
from influencerank.graphs.graph import InfluenceGraph
from influencerank.ingest.parser import decode_line
from influencerank.scoring.ip import ScorePair
from influencerank.scoring.vector import ScoreVector


def numbered_records(stream, columns, expected):
    for line_number, raw in enumerate(stream, start=1):
        text = decode_line(raw)
        if text is None:
            continue
        fields = text.split('\t')
        if len(fields) != columns:
            raise UnparsableLine(line_number, text, f'expected {expected}')
        yield line_number, fields


def number(text, line_number, convert=float):
    try:
        return convert(text)
    except ValueError:
        raise UnparsableLine(line_number, text, 'not a number')


def header_text(raw):
    return raw.decode('utf-8') if isinstance(raw, bytes) else raw


def read_graph(stream):
    """Parses the graph serialization back into an InfluenceGraph."""
    nodes = set()
    weights = {}
    for line_number, (i, j, w) in numbered_records(stream, 3, 'i, j, w'):
        nodes.add(i)
        if j == '-' and w == '-':
            continue
        nodes.add(j)
        weights[(i, j)] = number(w, line_number)

    if not nodes:
        raise EmptyInput('graph file has no nodes')

    return InfluenceGraph(nodes, weights)


def read_scores(stream):
    lines = list(stream)
    iterations, converged = 0, False
    for line_number, raw in enumerate(lines, start=1):
        text = header_text(raw)
        if text.startswith('#iterations='):
            fields = dict(field.split('=', 1) for field in text[1:].split() if '=' in field)
            iterations = number(fields['iterations'], line_number, int)
            converged = fields.get('converged') == 'true'

    nodes, influence, passivity = [], [], []
    for line_number, (node, i, p) in numbered_records(lines, 3, 'user, influence, passivity'):
        nodes.append(node)
        influence.append(number(i, line_number))
        passivity.append(number(p, line_number))

    return ScorePair(nodes, influence, passivity, iterations_run=iterations, converged=converged)


def read_vector(stream):
    lines = list(stream)
    label = None
    for raw in lines:
        text = header_text(raw)
        if text.startswith('#measure='):
            label = text.rstrip('\r\n')[len('#measure='):]

    mapping = {node: number(value, line_number)
               for line_number, (node, value) in numbered_records(lines, 2, 'user, value')}
    return ScoreVector.from_mapping(label, mapping)
