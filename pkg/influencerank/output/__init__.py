from influencerank.output.reports import CorrelationWriter, CurveWriter, JoinWriter, PointsWriter, RankingWriter, RatesWriter
from influencerank.output.scores import GraphWriter, ScoresWriter, StatsWriter, TraceWriter, VectorWriter

all_writers = [GraphWriter, StatsWriter, ScoresWriter, TraceWriter, VectorWriter,
               RankingWriter, JoinWriter, CurveWriter, RatesWriter, CorrelationWriter, PointsWriter]
