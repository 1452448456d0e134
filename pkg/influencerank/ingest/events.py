import json
from collections import defaultdict

from influencerank.errors import EmptyInput, InvalidParams, UnparsableLine
from influencerank.ingest.parser import Parser, bad_line, decode_line
from influencerank.ingest.records import ActivityLog, EventKind, TweetEvent


class EventsParser(Parser):
    def assemble(self, records, skipped_lines):
        return ActivityLog(records, skipped_lines=skipped_lines)


class EventsTsvParser(EventsParser):
    """``time<TAB>user<TAB>url<TAB>M`` or ``time<TAB>user<TAB>url<TAB>RT<TAB>source``"""

    @staticmethod
    def name():
        return 'tsv'

    def parse_line(self, line):
        fields = line.split('\t')
        if len(fields) == 4 and fields[3] == EventKind.mention.value:
            source = None
        elif len(fields) == 5 and fields[3] == EventKind.retweet.value:
            source = fields[4]
        else:
            raise bad_line(line, 'expected time, user, url, M or time, user, url, RT, source')

        return make_event(line, fields[0], fields[1], fields[2], fields[3], source)


class EventsJsonParser(EventsParser):
    """One JSON object per line: ``{"time": .., "user": .., "url": .., "kind": "M"|"RT", "source": ..}``"""

    @staticmethod
    def name():
        return 'jsonl'

    def parse_line(self, line):
        try:
            record = json.loads(line)
        except ValueError:
            raise bad_line(line, 'not a JSON object')

        if not isinstance(record, dict):
            raise bad_line(line, 'not a JSON object')

        try:
            return make_event(line, record['time'], record['user'], record['url'],
                              record.get('kind', EventKind.mention.value), record.get('source'))
        except KeyError as e:
            raise bad_line(line, f'missing key {e}')


def make_event(line, time, user, url, kind, source):
    try:
        if isinstance(time, bool) or isinstance(time, float):
            raise ValueError(time)
        time = int(time)
    except (TypeError, ValueError):
        raise bad_line(line, 'time is not a base-10 integer')

    user, url = str(user), str(url)
    if not user:
        raise bad_line(line, 'empty user')
    if not url:
        raise bad_line(line, 'empty url')

    try:
        kind = EventKind(kind)
    except ValueError:
        raise bad_line(line, f'unknown event kind {kind!r}')

    if kind is EventKind.retweet:
        if not source:
            raise bad_line(line, 'retweet without a source')
        source = str(source)
        if source == user:
            raise bad_line(line, 'retweet credits its own author')
    else:
        source = None

    return TweetEvent(time=time, user=user, url=url, kind=kind, source=source)


all_event_parsers = [EventsTsvParser, EventsJsonParser]


def find_event_parser(format):
    for parser in all_event_parsers:
        if parser.name() == format:
            return parser

    return None


def sniff_event_parser(lines):
    for raw in lines:
        try:
            text = decode_line(raw)
        except UnparsableLine:
            continue
        if text is None:
            continue

        for parser in all_event_parsers:
            if parser().test(text):
                return parser

        return None

    return None


def parse_events(stream, format='tsv', strict=True):
    """Reads an activity trace.

    ``format`` is the name of an events parser, or ``auto`` to pick the parser
    that accepts the first record line.
    """
    if format == 'auto':
        stream = list(stream)
        parser_class = sniff_event_parser(stream)
        if parser_class is None:
            if not any(decode_line_quiet(raw) for raw in stream):
                raise EmptyInput('events: no records in input')
            parser_class = EventsTsvParser
    else:
        parser_class = find_event_parser(format)
        if parser_class is None:
            raise InvalidParams(f'unknown events format {format!r}')

    return parser_class(strict=strict).parse(stream)


def decode_line_quiet(raw):
    try:
        return decode_line(raw)
    except UnparsableLine:
        return raw


def serialize_events(log):
    lines = []
    for event in log.events:
        fields = [str(event.time), event.user, event.url, event.kind.value]
        if event.is_retweet:
            fields.append(event.source)
        lines.append('\t'.join(fields) + '\n')

    return ''.join(lines).encode('utf-8')


def url_counts(log):
    """Distinct URLs per user; a retweet counts as a mention by the retweeter."""
    urls = defaultdict(set)
    for event in log.events:
        urls[event.user].add(event.url)

    return {user: len(user_urls) for user, user_urls in urls.items()}
