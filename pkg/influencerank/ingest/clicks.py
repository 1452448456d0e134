from influencerank.errors import NegativeCount
from influencerank.ingest.parser import Parser, bad_line
from influencerank.ingest.records import ClickTable


class ClicksParser(Parser):
    """``url<TAB>count`` per line"""

    @staticmethod
    def name():
        return 'clicks'

    def parse_line(self, line):
        fields = line.split('\t')
        if len(fields) != 2 or not fields[0]:
            raise bad_line(line, 'expected url, count')

        url, count = fields
        try:
            count = int(count)
        except ValueError:
            raise bad_line(line, 'count is not an integer')

        if count < 0:
            raise NegativeCount(None, line, 'negative click count')

        return url, count

    def assemble(self, records, skipped_lines):
        clicks = {}
        for url, count in records:
            # totals are cumulative, so a repeated URL keeps its largest count
            clicks[url] = max(count, clicks.get(url, 0))

        return ClickTable(clicks, skipped_lines=skipped_lines)


def parse_clicks(stream, strict=True):
    return ClicksParser(strict=strict).parse(stream)
