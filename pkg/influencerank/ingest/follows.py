from influencerank.ingest.parser import Parser, bad_line
from influencerank.ingest.records import FollowEdgeList


class FollowsParser(Parser):
    """``followee<TAB>follower`` per line"""

    @staticmethod
    def name():
        return 'follows'

    def parse_line(self, line):
        fields = line.split('\t')
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise bad_line(line, 'expected followee, follower')

        followee, follower = fields
        if followee == follower:
            raise bad_line(line, 'user follows itself')

        return followee, follower

    def assemble(self, records, skipped_lines):
        return FollowEdgeList(records, skipped_lines=skipped_lines)


def parse_follows(stream, strict=True):
    return FollowsParser(strict=strict).parse(stream)
