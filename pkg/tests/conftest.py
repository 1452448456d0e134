import io

import pytest

from influencerank.ingest import parse_events, parse_follows
from influencerank.testkit import SynthParams, synth_trace


def lines_stream(*lines):
    return io.BytesIO(''.join(line + '\n' for line in lines).encode('utf-8'))


def events_of(*lines):
    return parse_events(lines_stream(*lines))


def follows_of(*pairs):
    return parse_follows(lines_stream(*(f'{followee}\t{follower}' for followee, follower in pairs)))


@pytest.fixture
def comention_trace():
    """i posts a, b, c; follower j repeats a later and posts d."""
    log = events_of(
        '1\ti\ta\tM',
        '2\ti\tb\tM',
        '3\ti\tc\tM',
        '5\tj\ta\tM',
        '6\tj\td\tM',
    )
    return log, follows_of(('i', 'j'))


@pytest.fixture
def retweet_trace():
    """i posts three URLs, j retweets one of them and k only posts."""
    log = events_of(
        '1\ti\tu1\tM',
        '2\ti\tu2\tM',
        '3\ti\tu3\tM',
        '4\tk\tu9\tM',
        '5\tj\tu1\tRT\ti',
    )
    return log, follows_of(('i', 'j'), ('i', 'k'))


@pytest.fixture(scope='session')
def small_synth():
    return synth_trace(SynthParams(users=40, broadcasters=4, follow_prob=0.1, mention_rate=3.0,
                                   retweet_prob=0.3, url_pool=80, seed=7))
