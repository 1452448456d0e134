"""Passivity evidence: how much of what users receive they pass on.

Receptions come from the single follower snapshot: every event (mention or
retweet) a followee posts counts as one URL received by each follower.
Every retweet event credited to a followee counts once against those
receptions.
"""
from collections import Counter, defaultdict
from typing import NamedTuple, Optional

import numpy as np

RATE_HISTOGRAM_BINS = 20


class RateSummary(NamedTuple):
    count: int
    mean: Optional[float]
    median: Optional[float]
    histogram: tuple


class RateReport(NamedTuple):
    user_retweeting_rate: dict
    audience_retweeting_rate: dict
    user_summary: RateSummary
    audience_summary: RateSummary


class Receptions:
    def __init__(self, log, follows):
        self.follows = follows
        self.posts = Counter(event.user for event in log.events)

        # retweet events per (retweeter, credited user)
        self.retweets_by = defaultdict(Counter)
        self.retweets_of = defaultdict(Counter)
        for event in log.events:
            if event.is_retweet:
                self.retweets_by[event.user][event.source] += 1
                self.retweets_of[event.source][event.user] += 1

    def user_rate(self, user):
        followees = self.follows.followees_of(user)
        received = sum(self.posts.get(followee, 0) for followee in followees)
        if not received:
            return None

        retweeted = sum(count for source, count in self.retweets_by.get(user, {}).items() if source in followees)
        return retweeted / received

    def audience_rate(self, user):
        followers = self.follows.followers_of(user)
        reached = self.posts.get(user, 0) * len(followers)
        if not reached:
            return None

        retweeted = sum(count for retweeter, count in self.retweets_of.get(user, {}).items() if retweeter in followers)
        return retweeted / reached


def user_retweeting_rate(log, follows, user):
    return Receptions(log, follows).user_rate(user)


def audience_retweeting_rate(log, follows, user):
    return Receptions(log, follows).audience_rate(user)


def summarize(rates):
    values = np.array([rates[user] for user in sorted(rates)], dtype=np.float64)
    if not len(values):
        return RateSummary(0, None, None, ())

    counts, _ = np.histogram(values, bins=RATE_HISTOGRAM_BINS, range=(0.0, 1.0))
    return RateSummary(len(values), float(np.mean(values)), float(np.median(values)), tuple(int(c) for c in counts))


def rate_report(log, follows):
    receptions = Receptions(log, follows)
    users = sorted(set(log.users) | set(follows.users))

    user_rates = {}
    audience_rates = {}
    for user in users:
        rate = receptions.user_rate(user)
        if rate is not None:
            user_rates[user] = rate
        rate = receptions.audience_rate(user)
        if rate is not None:
            audience_rates[user] = rate

    return RateReport(user_rates, audience_rates, summarize(user_rates), summarize(audience_rates))
