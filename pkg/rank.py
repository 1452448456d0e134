import functools
import logging
import sys

import click

from influencerank.config import GRAPH_TYPES, build_config, read_config_file
from influencerank.errors import InfluenceRankError
from influencerank.processor import (MEASURES, cmd_baselines, cmd_build, cmd_compare, cmd_counts, cmd_curve, cmd_hindex,
                                     cmd_ip, cmd_pagerank, cmd_rank, cmd_rates, cmd_report, cmd_synth)
from influencerank.testkit import SynthParams

LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]

run_options = [
    click.option('--config', 'config_path', type=click.Path(dir_okay=False), help='flat key=value config file'),
    click.option('--events', type=click.Path(dir_okay=False)),
    click.option('--events-format', type=click.Choice(['tsv', 'jsonl', 'auto'], case_sensitive=False)),
    click.option('--follows', type=click.Path(dir_okay=False)),
    click.option('--clicks', type=click.Path(dir_okay=False)),
    click.option('--graph', type=click.Path(dir_okay=False), help='prebuilt graph file instead of --events'),
    click.option('--graph-type', type=click.Choice(GRAPH_TYPES, case_sensitive=False)),
    click.option('--min-urls', type=int),
    click.option('--iterations', type=int),
    click.option('--epsilon', type=float),
    click.option('--damping', type=float),
    click.option('--top-k', type=int),
    click.option('--q', type=float),
    click.option('--bins', type=int),
    click.option('--first-n', type=int),
    click.option('--threads', type=int),
    click.option('--out-dir', type=click.Path(file_okay=False)),
    click.option('--strict/--lenient', default=None),
    click.option('-v', '--verbose', count=True),
]


def with_run_options(command):
    for option in reversed(run_options):
        command = option(command)
    return command


def setup_logging(verbose):
    level = LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, stream=sys.stderr, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    logging.getLogger('influencerank').setLevel(level)


def reports_errors(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except InfluenceRankError as e:
            click.echo(f'error: {e}', err=True)
            sys.exit(e.exit_code)

    return wrapper


def run(command, flags, **kwargs):
    setup_logging(flags.pop('verbose'))
    config_path = flags.pop('config_path')
    file_values = read_config_file(config_path) if config_path else {}
    config = build_config(file_values, flags)

    for path in command(config, **kwargs):
        click.echo(path)


@click.group()
def cli():
    """Influence and passivity ranking of users in a social activity trace."""


@cli.command()
@with_run_options
@reports_errors
def build(**flags):
    """Build the influence graph and its summary statistics."""
    run(cmd_build, flags)


@cli.command()
@with_run_options
@reports_errors
def ip(**flags):
    """Compute influence and passivity scores."""
    run(cmd_ip, flags)


@cli.command()
@with_run_options
@reports_errors
def pagerank(**flags):
    run(cmd_pagerank, flags)


@cli.command()
@with_run_options
@reports_errors
def hindex(**flags):
    run(cmd_hindex, flags)


@cli.command()
@with_run_options
@reports_errors
def counts(**flags):
    """Follower and retweet counts."""
    run(cmd_counts, flags)


@cli.command()
@with_run_options
@reports_errors
def baselines(**flags):
    """PageRank, H-index, follower and retweet counts."""
    run(cmd_baselines, flags)


@cli.command()
@with_run_options
@reports_errors
def rates(**flags):
    """Per-user and per-audience retweeting rates."""
    run(cmd_rates, flags)


@cli.command()
@click.option('--measure', 'measures', multiple=True, type=click.Choice(MEASURES), default=['ip-influence'])
@with_run_options
@reports_errors
def curve(measures, **flags):
    """Click percentile curves over the URL averages of a measure."""
    run(cmd_curve, flags, measures=tuple(measures))


@cli.command()
@with_run_options
@reports_errors
def rank(**flags):
    """Top-k and followers-vs-influence tables."""
    run(cmd_rank, flags)


@cli.command()
@with_run_options
@reports_errors
def compare(**flags):
    """Rank correlation between IP influence, the baselines and the graph types."""
    run(cmd_compare, flags)


@cli.command()
@with_run_options
@reports_errors
def report(**flags):
    """All reports, reusing score files from earlier runs when they match."""
    run(cmd_report, flags)


@cli.command()
@click.option('--users', type=int, default=SynthParams.users)
@click.option('--broadcasters', type=int, default=SynthParams.broadcasters)
@click.option('--follow-prob', type=float, default=SynthParams.follow_prob)
@click.option('--mention-rate', type=float, default=SynthParams.mention_rate)
@click.option('--retweet-prob', type=float, default=SynthParams.retweet_prob)
@click.option('--url-pool', type=int, default=SynthParams.url_pool)
@click.option('--seed', type=int, default=SynthParams.seed)
@click.option('--out-dir', type=click.Path(file_okay=False), default='trace')
@click.option('-v', '--verbose', count=True)
@reports_errors
def synth(out_dir, verbose, **params):
    """Write a seeded synthetic trace (events, follows, clicks)."""
    setup_logging(verbose)
    for path in cmd_synth(SynthParams(**params), out_dir):
        click.echo(path)


if __name__ == '__main__':
    cli()
