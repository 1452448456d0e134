import logging
import os
from functools import cached_property

from influencerank.analytics import (few_followers_high_influence, followers_vs_influence, many_followers_low_influence,
                                     percentile_curve, rank_correlation, rank_join, rate_report, top_k,
                                     url_attribute_average, url_click_points, url_early_influence)
from influencerank.common import timed
from influencerank.config import GRAPH_TYPES, require_inputs
from influencerank.errors import ConstantRanking, GraphError, InsufficientOverlap, InvalidParams, NoData
from influencerank.graphs import all_builders, graph_stats
from influencerank.ingest import parse_clicks, parse_events, parse_follows, url_counts
from influencerank.output import all_writers
from influencerank.output.manifest import Manifest, file_digest
from influencerank.output.readers import read_graph, read_scores, read_vector
from influencerank.scoring import (follower_count, h_index_vector, invert_graph, retweet_count, run_ip,
                                   weighted_pagerank)
from influencerank.scoring.vector import ScoreVector
from influencerank.testkit import synth_clicks, synth_trace, write_trace

logger = logging.getLogger(__name__)

MEASURES = ('ip-influence', 'ip-passivity', 'pagerank', 'hindex', 'followers', 'retweets')


def find_builder(graph_type):
    for builder in all_builders:
        if builder.name() == graph_type:
            return builder

    return None


def find_writer(format):
    for writer in all_writers:
        if writer.name() == format:
            return writer

    return None


def convert(result, format, config=None):
    writer = find_writer(format)
    if not writer:
        raise InvalidParams(f'no writer for {format!r}')

    return writer(result, config or {}).convert()


def write_artifact(path, manifest, lines):
    """Writes the manifest header and then the artifact body, ``\\n`` line endings."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(path, 'w', encoding='utf-8', newline='\n') as file:
        for line in manifest.lines() + list(lines):
            file.write(line + '\n')

    logger.info('wrote %s', path)
    return path


class Sources:
    """Parsed input files and their digests, read on first use."""

    def __init__(self, config):
        self.config = config
        self.digests = {}

    def digest(self, name):
        if name not in self.digests:
            require_inputs(self.config, name)
            self.digests[name] = file_digest(getattr(self.config, name))
        return self.digests[name]

    @cached_property
    def log(self):
        require_inputs(self.config, 'events')
        with open(self.config.events, 'rb') as file, timed(logger.info, 'reading %s', self.config.events):
            return parse_events(file, self.config.events_format, self.config.strict)

    @cached_property
    def follows(self):
        require_inputs(self.config, 'follows')
        with open(self.config.follows, 'rb') as file:
            return parse_follows(file, self.config.strict)

    @cached_property
    def clicks(self):
        require_inputs(self.config, 'clicks')
        with open(self.config.clicks, 'rb') as file:
            return parse_clicks(file, self.config.strict)


class Pipeline:
    """Inputs and results of one run, each loaded or computed at most once.

    With ``reuse`` set, score vectors are taken from existing artifacts in the
    output directory whose manifest matches what this run would write.
    """

    def __init__(self, config, reuse=False, sources=None):
        self.config = config
        self.reuse = reuse
        self.sources = sources or Sources(config)

    def for_graph_type(self, graph_type):
        if graph_type == self.config.graph_type:
            return self
        return Pipeline(self.config.with_graph_type(graph_type), self.reuse, self.sources)

    @property
    def log(self):
        return self.sources.log

    @property
    def follows(self):
        return self.sources.follows

    @property
    def clicks(self):
        return self.sources.clicks

    def inputs(self, *names):
        return {name: self.sources.digest(name) for name in names}

    def manifest(self, command, inputs):
        return Manifest(command, inputs, self.config.params())

    def path(self, name):
        return os.path.join(self.config.out_dir, name)

    def write(self, name, command, inputs, format, result, **writer_config):
        return write_artifact(self.path(name), self.manifest(command, inputs),
                              convert(result, format, writer_config))

    @property
    def builder(self):
        return find_builder(self.config.graph_type)(self.config.min_urls)

    @property
    def graph_inputs(self):
        if self.config.graph is not None:
            return self.inputs('graph')
        if self.builder.needs_follows():
            return self.inputs('events', 'follows')
        return self.inputs('events')

    def build_graph(self):
        follows = self.follows if self.builder.needs_follows() else None
        with timed(logger.info, 'building the %s graph', self.config.graph_type):
            return self.builder.build(self.log, follows)

    @cached_property
    def graph(self):
        if self.config.graph is None:
            return self.build_graph()

        require_inputs(self.config, 'graph')
        with open(self.config.graph, 'rb') as file:
            return read_graph(file)

    @cached_property
    def ip(self):
        return run_ip(self.graph, self.config.ip, self.config.threads)

    @cached_property
    def scores(self):
        cached = self.cached(f'ip-{self.config.graph_type}.tsv', 'ip', self.graph_inputs, read_scores)
        if cached is not None:
            return cached
        return self.ip[0]

    @cached_property
    def pagerank(self):
        cached = self.cached(f'pagerank-{self.config.graph_type}.tsv', 'pagerank', self.graph_inputs, read_vector)
        if cached is not None:
            return cached
        with timed(logger.info, 'running PageRank'):
            return weighted_pagerank(invert_graph(self.graph), self.config.pagerank, self.config.threads)

    @cached_property
    def hindex(self):
        cached = self.cached('hindex.tsv', 'hindex', self.inputs('events'), read_vector)
        return cached if cached is not None else h_index_vector(self.log)

    @cached_property
    def followers(self):
        cached = self.cached('followers.tsv', 'counts', self.inputs('follows'), read_vector)
        return cached if cached is not None else follower_count(self.follows)

    @cached_property
    def retweets(self):
        cached = self.cached('retweets.tsv', 'counts', self.inputs('events'), read_vector)
        return cached if cached is not None else retweet_count(self.log)

    def cached(self, name, command, inputs, reader):
        if not self.reuse:
            return None

        path = self.path(name)
        if not os.path.isfile(path):
            return None

        with open(path, 'rb') as file:
            lines = file.readlines()
        if Manifest.parse(lines) != self.manifest(command, inputs):
            logger.info('%s is stale, recomputing', path)
            return None

        logger.info('reusing %s', path)
        return reader(lines)

    def measure(self, name):
        if name == 'ip-influence':
            return self.scores.as_vectors()[0]
        if name == 'ip-passivity':
            return self.scores.as_vectors()[1]
        if name in ('pagerank', 'hindex', 'followers', 'retweets'):
            return getattr(self, name)
        raise InvalidParams(f'unknown measure {name!r}, expected one of {", ".join(MEASURES)}')

    def measure_inputs(self, name):
        if name in ('ip-influence', 'ip-passivity', 'pagerank'):
            return self.graph_inputs
        if name == 'followers':
            return self.inputs('follows')
        return self.inputs('events')

    def eligible(self):
        counts = url_counts(self.log)
        floor = self.config.analytics.min_posted
        return lambda user: counts.get(user, 0) >= floor


def cmd_build(config):
    # a prebuilt --graph is never an input to building one
    pipeline = Pipeline(config.with_graph_type(config.graph_type))
    graph = pipeline.build_graph()
    inputs = pipeline.graph_inputs
    kind = config.graph_type
    return [
        pipeline.write(f'graph-{kind}.tsv', 'build', inputs, 'graph', graph),
        pipeline.write(f'stats-{kind}.tsv', 'build', inputs, 'stats', graph_stats(graph)),
    ]


def cmd_ip(config):
    pipeline = Pipeline(config)
    scores, trace = pipeline.ip
    inputs = pipeline.graph_inputs
    kind = config.graph_type
    return [
        pipeline.write(f'ip-{kind}.tsv', 'ip', inputs, 'scores', scores),
        pipeline.write(f'trace-{kind}.tsv', 'ip', inputs, 'trace', trace),
    ]


def cmd_pagerank(config, pipeline=None):
    pipeline = pipeline or Pipeline(config)
    return [pipeline.write(f'pagerank-{config.graph_type}.tsv', 'pagerank', pipeline.graph_inputs, 'vector',
                           pipeline.pagerank)]


def cmd_hindex(config, pipeline=None):
    pipeline = pipeline or Pipeline(config)
    return [pipeline.write('hindex.tsv', 'hindex', pipeline.inputs('events'), 'vector', pipeline.hindex)]


def cmd_counts(config, pipeline=None):
    pipeline = pipeline or Pipeline(config)
    return [
        pipeline.write('followers.tsv', 'counts', pipeline.inputs('follows'), 'vector', pipeline.followers),
        pipeline.write('retweets.tsv', 'counts', pipeline.inputs('events'), 'vector', pipeline.retweets),
    ]


def cmd_baselines(config):
    pipeline = Pipeline(config)
    return cmd_pagerank(config, pipeline) + cmd_hindex(config, pipeline) + cmd_counts(config, pipeline)


def cmd_rates(config, pipeline=None):
    pipeline = pipeline or Pipeline(config)
    report = rate_report(pipeline.log, pipeline.follows)
    return [pipeline.write('rates.tsv', 'rates', pipeline.inputs('events', 'follows'), 'rates', report)]


def curve_artifact(pipeline, filename, inputs, points, measure, skip_empty):
    options = pipeline.config.analytics
    try:
        curve = percentile_curve(points, options.q, options.bins)
    except NoData as e:
        if not skip_empty:
            raise
        logger.warning('skipping the %s curve: %s', measure, e)
        return []
    return [pipeline.write(filename, 'curve', inputs, 'curve', curve, measure=measure)]


def cmd_curve(config, measures=('ip-influence',), pipeline=None, skip_empty=False):
    """Click percentile curves over URL averages, plus the early-mentioner variant for IP influence."""
    pipeline = pipeline or Pipeline(config)
    clicks = pipeline.clicks
    paths = []
    for name in measures:
        scores = pipeline.measure(name)
        inputs = {**pipeline.measure_inputs(name), **pipeline.inputs('events', 'clicks')}
        points = url_click_points(url_attribute_average(pipeline.log, scores), clicks)
        paths += curve_artifact(pipeline, f'curve-{name}.tsv', inputs, points, name, skip_empty)

    first_n = config.analytics.first_n
    influence = pipeline.measure('ip-influence')
    inputs = {**pipeline.graph_inputs, **pipeline.inputs('events', 'clicks')}
    points = url_click_points(url_early_influence(pipeline.log, influence, first_n), clicks)
    paths += curve_artifact(pipeline, 'curve-early-influence.tsv', inputs, points, f'early-{first_n}-influence',
                            skip_empty)
    return paths


def cmd_rank(config, pipeline=None):
    pipeline = pipeline or Pipeline(config)
    options = config.analytics
    influence, passivity = pipeline.measure('ip-influence'), pipeline.measure('ip-passivity')
    # every scored user takes part, with 0 followers when the snapshot lacks them
    followers = pipeline.followers.aligned(influence.nodes)
    inputs = {**pipeline.graph_inputs, **pipeline.inputs('events', 'follows')}
    eligible = pipeline.eligible()

    join = rank_join(followers, influence)
    return [
        pipeline.write('top-influence.tsv', 'rank', inputs, 'ranking', top_k(influence, options.top_k, eligible),
                       title='top-influence'),
        pipeline.write('top-passivity.tsv', 'rank', inputs, 'ranking', top_k(passivity, options.top_k, eligible),
                       title='top-passivity'),
        pipeline.write('join-followers-influence.tsv', 'rank', inputs, 'join', join, title='followers-vs-influence'),
        pipeline.write('popular-not-influential.tsv', 'rank', inputs, 'join',
                       many_followers_low_influence(join, options.follower_top, options.top_k),
                       title='many-followers-low-influence'),
        pipeline.write('influential-not-popular.tsv', 'rank', inputs, 'join',
                       few_followers_high_influence(join, options.follower_floor, options.top_k),
                       title='few-followers-high-influence'),
        pipeline.write('followers-influence-points.tsv', 'rank', inputs, 'points',
                       followers_vs_influence(pipeline.follows, influence),
                       columns=('user', 'followers', 'influence')),
    ]


def correlation_row(a, b):
    shared = sum(1 for user in a.nodes if user in b)
    try:
        return a.label, b.label, shared, rank_correlation(a, b)
    except (InsufficientOverlap, ConstantRanking) as e:
        logger.warning('no correlation for %s and %s: %s', a.label, b.label, e)
        return a.label, b.label, shared, None


def cmd_compare(config, pipeline=None):
    """Spearman correlation of IP influence against the baselines and across graph types."""
    pipeline = pipeline or Pipeline(config)
    influence = pipeline.measure('ip-influence')
    rows = [correlation_row(influence, pipeline.measure(name))
            for name in ('pagerank', 'hindex', 'followers', 'retweets')]
    inputs = {**pipeline.graph_inputs, **pipeline.inputs('events', 'follows')}

    if config.graph is None:
        per_type = {}
        for graph_type in GRAPH_TYPES:
            try:
                scores = pipeline.for_graph_type(graph_type).scores.as_vectors()[0]
            except GraphError as e:
                logger.warning('leaving the %s graph out of the comparison: %s', graph_type, e)
                continue
            per_type[graph_type] = ScoreVector(f'ip-influence@{graph_type}', scores.nodes, scores.values)

        kept = [graph_type for graph_type in GRAPH_TYPES if graph_type in per_type]
        for k, a in enumerate(kept):
            for b in kept[k + 1:]:
                rows.append(correlation_row(per_type[a], per_type[b]))

    return [pipeline.write('correlation.tsv', 'compare', inputs, 'correlation', rows)]


def cmd_report(config):
    """Every report; score vectors come from matching artifacts when present."""
    pipeline = Pipeline(config, reuse=True)
    paths = cmd_rank(config, pipeline) + cmd_rates(config, pipeline) + cmd_compare(config, pipeline)
    if config.clicks is not None:
        paths += cmd_curve(config, ('ip-influence', 'pagerank', 'hindex', 'followers', 'retweets'), pipeline,
                           skip_empty=True)
    else:
        logger.info('no clicks table given, skipping percentile curves')
    return paths


def cmd_synth(params, directory):
    """Writes a synthetic events, follows and clicks trace for end-to-end runs."""
    log, follows = synth_trace(params)
    clicks = synth_clicks(log, params.seed)
    events_path, follows_path = write_trace(log, follows, directory, clicks)
    return [events_path, follows_path, os.path.join(directory, 'clicks.tsv')]
