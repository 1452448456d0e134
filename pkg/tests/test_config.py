import pytest

from influencerank.config import RunConfig, build_config, read_config_file, require_inputs
from influencerank.errors import ConfigInvalid, MissingInput


def write_config(tmp_path, *lines):
    path = tmp_path / 'run.conf'
    path.write_text(''.join(line + '\n' for line in lines), encoding='utf-8')
    return str(path)


def test_defaults():
    config = build_config()
    assert config.graph_type == 'rt'
    assert config.min_urls == 3
    assert config.ip.max_iterations == 100
    assert config.ip.epsilon == 1e-9
    assert config.pagerank.damping == 0.85
    assert config.analytics.q == 0.999
    assert config.analytics.bins == 50
    assert config.threads >= 1
    assert config.strict


def test_config_file_accepts_dashes_and_underscores(tmp_path):
    path = write_config(tmp_path, '# run settings', '', 'graph-type = comention', 'min_urls=5', 'strict=false')
    values = read_config_file(path)
    assert values == {'graph_type': 'comention', 'min_urls': '5', 'strict': 'false'}

    config = build_config(values)
    assert config.graph_type == 'comention'
    assert config.min_urls == 5
    assert not config.strict


def test_flags_override_the_file(tmp_path):
    values = read_config_file(write_config(tmp_path, 'min-urls=5', 'iterations=20'))
    config = build_config(values, {'min_urls': 4, 'iterations': None, 'top_k': 7})
    assert config.min_urls == 4
    assert config.ip.max_iterations == 20
    assert config.analytics.top_k == 7


def test_unknown_key(tmp_path):
    with pytest.raises(ConfigInvalid):
        read_config_file(write_config(tmp_path, 'colour=blue'))
    with pytest.raises(ConfigInvalid):
        build_config({'colour': 'blue'})


def test_line_without_value(tmp_path):
    with pytest.raises(ConfigInvalid):
        read_config_file(write_config(tmp_path, 'min-urls'))


@pytest.mark.parametrize('values', [
    {'min_urls': 'three'},
    {'min_urls': '0'},
    {'damping': '1.5'},
    {'q': '1'},
    {'epsilon': '-1'},
    {'iterations': '0'},
    {'bins': '0'},
    {'top_k': '0'},
    {'threads': '0'},
    {'graph_type': 'mentions'},
    {'strict': 'maybe'},
])
def test_invalid_values(values):
    with pytest.raises(ConfigInvalid):
        build_config(values)


def test_missing_config_file(tmp_path):
    with pytest.raises(MissingInput):
        read_config_file(str(tmp_path / 'absent.conf'))


def test_required_inputs(tmp_path):
    events = tmp_path / 'events.tsv'
    events.write_text('1\ta\tx\tM\n', encoding='utf-8')
    require_inputs(RunConfig(events=str(events)), 'events')
    with pytest.raises(MissingInput):
        require_inputs(RunConfig(events=str(events)), 'follows')
    with pytest.raises(MissingInput):
        require_inputs(RunConfig(events=str(tmp_path / 'absent.tsv')), 'events')


def test_params_leave_out_threads_and_paths():
    a = build_config({'threads': '1', 'events': 'a.tsv'})
    b = build_config({'threads': '4', 'events': 'b.tsv'})
    assert a.params() == b.params()
    assert 'threads' not in a.params()
