import os
from dataclasses import dataclass, field, replace
from typing import Optional

from influencerank.errors import ConfigInvalid, InvalidParams, MissingInput
from influencerank.scoring.ip import IpParams
from influencerank.scoring.pagerank import PageRankParams

GRAPH_TYPES = ('comention', 'rt', 'rt-follower')


@dataclass(frozen=True)
class AnalyticsOptions:
    q: float = 0.999
    bins: int = 50
    top_k: int = 10
    # top-k eligibility: users who posted at least this many distinct URLs
    min_posted: int = 10
    first_n: int = 10
    follower_top: int = 100
    follower_floor: int = 1000

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise InvalidParams(f'q must lie in (0, 1), got {self.q}')
        for name in ('bins', 'top_k', 'first_n', 'follower_top'):
            if getattr(self, name) < 1:
                raise InvalidParams(f'{name} must be at least 1, got {getattr(self, name)}')
        if self.min_posted < 0 or self.follower_floor < 0:
            raise InvalidParams('min_posted and follower_floor must be non-negative')


@dataclass(frozen=True)
class RunConfig:
    events: Optional[str] = None
    follows: Optional[str] = None
    clicks: Optional[str] = None
    graph: Optional[str] = None
    out_dir: str = 'output'
    events_format: str = 'tsv'
    graph_type: str = 'rt'
    min_urls: int = 3
    strict: bool = True
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    ip: IpParams = IpParams()
    pagerank: PageRankParams = PageRankParams()
    analytics: AnalyticsOptions = AnalyticsOptions()

    def params(self):
        """Everything that shapes the output, for manifests (paths and threads excluded)."""
        return {
            'events_format': self.events_format,
            'graph_type': self.graph_type,
            'min_urls': self.min_urls,
            'strict': self.strict,
            'iterations': self.ip.max_iterations,
            'epsilon': repr(self.ip.epsilon),
            'damping': repr(self.pagerank.damping),
            'pagerank_epsilon': repr(self.pagerank.epsilon),
            'pagerank_iterations': self.pagerank.max_iterations,
            'q': repr(self.analytics.q),
            'bins': self.analytics.bins,
            'top_k': self.analytics.top_k,
            'min_posted': self.analytics.min_posted,
            'first_n': self.analytics.first_n,
            'follower_top': self.analytics.follower_top,
            'follower_floor': self.analytics.follower_floor,
        }

    def with_graph_type(self, graph_type):
        return replace(self, graph_type=graph_type, graph=None)


def parse_bool(value):
    lowered = str(value).strip().lower()
    if lowered in ('1', 'true', 'yes', 'on', 'strict'):
        return True
    if lowered in ('0', 'false', 'no', 'off', 'lenient'):
        return False
    raise ValueError(value)


# config key -> (section, attribute, type)
KEYS = {
    'events': (None, 'events', str),
    'follows': (None, 'follows', str),
    'clicks': (None, 'clicks', str),
    'graph': (None, 'graph', str),
    'out_dir': (None, 'out_dir', str),
    'events_format': (None, 'events_format', str),
    'graph_type': (None, 'graph_type', str),
    'min_urls': (None, 'min_urls', int),
    'strict': (None, 'strict', parse_bool),
    'threads': (None, 'threads', int),
    'iterations': ('ip', 'max_iterations', int),
    'epsilon': ('ip', 'epsilon', float),
    'damping': ('pagerank', 'damping', float),
    'pagerank_epsilon': ('pagerank', 'epsilon', float),
    'pagerank_iterations': ('pagerank', 'max_iterations', int),
    'q': ('analytics', 'q', float),
    'bins': ('analytics', 'bins', int),
    'top_k': ('analytics', 'top_k', int),
    'min_posted': ('analytics', 'min_posted', int),
    'first_n': ('analytics', 'first_n', int),
    'follower_top': ('analytics', 'follower_top', int),
    'follower_floor': ('analytics', 'follower_floor', int),
}


def normalize_key(key):
    return key.strip().lower().replace('-', '_')


def read_config_file(path):
    """Flat ``key=value`` lines; ``#`` starts a comment line."""
    if not os.path.isfile(path):
        raise MissingInput(f'config file {path} does not exist')

    values = {}
    with open(path, encoding='utf-8') as file:
        for line_number, line in enumerate(file, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            key, separator, value = line.partition('=')
            if not separator:
                raise ConfigInvalid(f'{path}:{line_number}: expected key=value')
            key = normalize_key(key)
            if key not in KEYS:
                raise ConfigInvalid(f'{path}:{line_number}: unknown key {key!r}')
            values[key] = value.strip()

    return values


def build_config(file_values=None, overrides=None):
    """Defaults, then the config file, then command-line flags (``None`` means unset)."""
    merged = dict(file_values or {})
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[normalize_key(key)] = value

    top = {}
    sections = {'ip': {}, 'pagerank': {}, 'analytics': {}}
    for key, value in merged.items():
        if key not in KEYS:
            raise ConfigInvalid(f'unknown config key {key!r}')
        section, attribute, kind = KEYS[key]
        try:
            value = kind(value)
        except (TypeError, ValueError):
            raise ConfigInvalid(f'{key}: cannot read {value!r} as {kind.__name__}')
        (sections[section] if section else top)[attribute] = value

    try:
        config = RunConfig(
            ip=IpParams(**sections['ip']),
            pagerank=PageRankParams(**sections['pagerank']),
            analytics=AnalyticsOptions(**sections['analytics']),
            **top,
        )
    except InvalidParams as e:
        raise ConfigInvalid(str(e))

    validate(config)
    return config


def validate(config):
    if config.graph_type not in GRAPH_TYPES:
        raise ConfigInvalid(f'graph_type must be one of {", ".join(GRAPH_TYPES)}, got {config.graph_type!r}')
    if config.min_urls < 1:
        raise ConfigInvalid(f'min_urls must be at least 1, got {config.min_urls}')
    if config.threads < 1:
        raise ConfigInvalid(f'threads must be at least 1, got {config.threads}')


def require_inputs(config, *names):
    for name in names:
        path = getattr(config, name)
        if path is None:
            raise MissingInput(f'--{name} is required for this command')
        if not os.path.isfile(path):
            raise MissingInput(f'{name} file {path} does not exist')
