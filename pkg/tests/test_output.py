import numpy as np
import pytest

from influencerank import __version__
from influencerank.analytics import PercentileCurve
from influencerank.errors import UnparsableLine
from influencerank.graphs import InfluenceGraph
from influencerank.output.manifest import Manifest, file_digest
from influencerank.output.readers import read_graph, read_scores, read_vector
from influencerank.processor import convert, find_writer, write_artifact
from influencerank.scoring import IpParams, ScoreVector, run_ip
from influencerank.testkit import random_graph


def encoded(lines):
    return [(line + '\n').encode('utf-8') for line in lines]


def test_manifest_round_trip():
    manifest = Manifest('ip', {'events': 'ab12', 'follows': 'cd34'}, {'min_urls': 3, 'graph_type': 'rt'})
    lines = manifest.lines()
    assert lines[0] == f'#manifest tool=influencerank version={__version__} command=ip'
    assert Manifest.parse(lines + ['a\tb\t0.5']) == manifest


def test_manifest_lines_are_sorted():
    manifest = Manifest('build', {'follows': 'f', 'events': 'e'}, {'z': 1, 'a': 2})
    assert manifest.lines()[1:] == ['#input events=e', '#input follows=f', '#param a=2', '#param z=1']


def test_file_without_manifest():
    assert Manifest.parse(['a\tb\t0.5']) is None


def test_graph_serialization():
    graph = InfluenceGraph(['a', 'b', 'c'], {('a', 'b'): 1 / 3})
    lines = convert(graph, 'graph')
    assert lines == ['#nodes=3 arcs=1', 'a\tb\t0.3333333333333333', 'c\t-\t-']


def test_graph_reads_back_exactly():
    graph = random_graph(30, 0.2, seed=3)
    manifest = Manifest('build', {'events': 'e'}, {})
    assert read_graph(encoded(manifest.lines() + convert(graph, 'graph'))) == graph


def test_scores_read_back_exactly():
    scores, _ = run_ip(random_graph(30, 0.2, seed=4), IpParams(max_iterations=7, epsilon=0.0))
    back = read_scores(encoded(convert(scores, 'scores')))
    assert back.nodes == scores.nodes
    assert np.array_equal(back.influence, scores.influence)
    assert np.array_equal(back.passivity, scores.passivity)
    assert back.iterations_run == 7
    assert back.converged is False


def test_vector_reads_back_exactly():
    vector = ScoreVector.from_mapping('pagerank', {'a': 0.1, 'b': 1 / 7})
    back = read_vector(encoded(convert(vector, 'vector')))
    assert back.label == 'pagerank'
    assert back.as_dict() == vector.as_dict()


def test_curve_trailer():
    curve = PercentileCurve(((1.0, 10), (10.0, 100)), 0.999, (1.0, 1.0))
    lines = convert(curve, 'curve', {'measure': 'ip-influence'})
    assert lines[0] == '#curve measure=ip-influence q=0.999'
    assert lines[2:4] == ['1\t10', '10\t100']
    assert lines[-1] == '#fit slope=1 intercept=1'


def test_correlation_rows():
    lines = convert([('a', 'b', 10, 0.5), ('a', 'c', 1, None)], 'correlation')
    assert lines[2:] == ['a\tb\t10\t0.5', 'a\tc\t1\t-']


def test_every_writer_is_registered():
    for name in ('graph', 'stats', 'scores', 'trace', 'vector', 'ranking', 'join', 'curve', 'rates', 'correlation',
                 'points'):
        assert find_writer(name).name() == name
    assert find_writer('xml') is None


def test_artifact_starts_with_its_manifest(tmp_path):
    manifest = Manifest('ip', {'events': 'e'}, {'q': 0.5})
    path = write_artifact(str(tmp_path / 'out' / 'x.tsv'), manifest, ['a\t1'])
    with open(path, 'rb') as file:
        content = file.read()
    assert content == ('\n'.join(manifest.lines() + ['a\t1']) + '\n').encode('utf-8')
    with open(path, 'rb') as file:
        assert Manifest.parse(file) == manifest
    assert len(file_digest(path)) == 64


@pytest.mark.parametrize('reader, lines', [
    (read_scores, ['#iterations=3 converged=true', 'a\t0.5\tnot-a-number']),
    (read_scores, ['a\t0.5']),
    (read_vector, ['#measure=pagerank', 'a\t0.1\t0.2']),
    (read_vector, ['#measure=pagerank', 'a\tlots']),
    (read_graph, ['a\tb\theavy']),
])
def test_malformed_rows_are_unparsable(reader, lines):
    with pytest.raises(UnparsableLine):
        reader(encoded(lines))
