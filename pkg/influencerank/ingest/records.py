from collections import defaultdict
from enum import Enum
from types import MappingProxyType
from typing import NamedTuple, Optional


class EventKind(Enum):
    mention = 'M'
    retweet = 'RT'


class TweetEvent(NamedTuple):
    time: int
    user: str
    url: str
    kind: EventKind = EventKind.mention
    source: Optional[str] = None

    @property
    def is_retweet(self):
        return self.kind is EventKind.retweet

    def sort_key(self):
        return self.time, self.user, self.url, self.kind.value, self.source or ''

    def __repr__(self):
        if self.is_retweet:
            return f'TweetEvent{{t={self.time}, user={self.user}, url={self.url}, RT from {self.source}}}'
        return f'TweetEvent{{t={self.time}, user={self.user}, url={self.url}}}'


class ActivityLog:
    """Events sorted by time."""

    def __init__(self, events, skipped_lines=0):
        self.events = tuple(sorted(events, key=TweetEvent.sort_key))
        self.skipped_lines = skipped_lines
        self._users = sorted({event.user for event in self.events})

    @property
    def users(self):
        return list(self._users)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __eq__(self, other):
        return isinstance(other, ActivityLog) and self.events == other.events

    def __repr__(self):
        return f'ActivityLog{{events={len(self.events)}, users={len(self._index)}}}'


class FollowEdgeList:
    """Set of (followee, follower) pairs."""

    def __init__(self, edges, skipped_lines=0):
        self.edges = frozenset(edges)
        self.skipped_lines = skipped_lines

        followers = defaultdict(set)
        followees = defaultdict(set)
        for followee, follower in self.edges:
            followers[followee].add(follower)
            followees[follower].add(followee)
        self._followers = MappingProxyType({user: frozenset(users) for user, users in followers.items()})
        self._followees = MappingProxyType({user: frozenset(users) for user, users in followees.items()})

    @property
    def users(self):
        return sorted(set(self._followers) | set(self._followees))

    def followers_of(self, user):
        return self._followers.get(user, frozenset())

    def followees_of(self, user):
        return self._followees.get(user, frozenset())

    def follows(self, follower, followee):
        return (followee, follower) in self.edges

    def __contains__(self, pair):
        return pair in self.edges

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __eq__(self, other):
        return isinstance(other, FollowEdgeList) and self.edges == other.edges

    def __repr__(self):
        return f'FollowEdgeList{{edges={len(self.edges)}}}'


class ClickTable:
    def __init__(self, clicks, skipped_lines=0):
        self.clicks = MappingProxyType(dict(clicks))
        self.skipped_lines = skipped_lines

    def get(self, url, default=None):
        return self.clicks.get(url, default)

    def __getitem__(self, url):
        return self.clicks[url]

    def __contains__(self, url):
        return url in self.clicks

    def __len__(self):
        return len(self.clicks)

    def __repr__(self):
        return f'ClickTable{{urls={len(self.clicks)}}}'
