class InfluenceRankError(Exception):
    exit_code = 1


class IngestError(InfluenceRankError):
    exit_code = 10


class UnparsableLine(IngestError):
    exit_code = 11

    def __init__(self, line_number, text, reason):
        super().__init__(f'line {line_number}: {reason}: {text!r}')
        self.line_number = line_number
        self.text = text
        self.reason = reason


class EmptyInput(IngestError):
    exit_code = 12


class NegativeCount(UnparsableLine):
    exit_code = 13


class GraphError(InfluenceRankError):
    exit_code = 20


class InvalidGraph(GraphError):
    exit_code = 21


class EmptyGraph(GraphError):
    exit_code = 22


class DegenerateGraph(GraphError):
    exit_code = 23


class EmptyNodeSet(GraphError):
    exit_code = 24


class NodeSetMismatch(InfluenceRankError):
    exit_code = 30


class AnalyticsError(InfluenceRankError):
    exit_code = 40


class NoData(AnalyticsError):
    exit_code = 41


class InsufficientOverlap(AnalyticsError):
    exit_code = 42


class ConstantRanking(AnalyticsError):
    exit_code = 43


class TooLarge(InfluenceRankError):
    exit_code = 50


class InvalidParams(InfluenceRankError):
    exit_code = 51


class ConfigInvalid(InfluenceRankError):
    exit_code = 60


class MissingInput(InfluenceRankError):
    exit_code = 61
