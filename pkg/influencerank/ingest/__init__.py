from influencerank.ingest.clicks import parse_clicks
from influencerank.ingest.events import all_event_parsers, parse_events, serialize_events, url_counts
from influencerank.ingest.follows import parse_follows
from influencerank.ingest.records import ActivityLog, ClickTable, EventKind, FollowEdgeList, TweetEvent
