from influencerank.common import format_score
from influencerank.output.writer import Writer


class RankingWriter(Writer):
    @staticmethod
    def name():
        return 'ranking'

    def convert(self):
        report = self.result
        lines = [f'#report={self.config.get("title", "top-k")} measure={report.labels[0]}', '#rank\tuser\tvalue']
        lines += [f'{row.rank}\t{row.user}\t{format_score(row.value)}' for row in report.rows]
        return lines


class JoinWriter(Writer):
    @staticmethod
    def name():
        return 'join'

    def convert(self):
        report = self.result
        a, b = report.labels
        lines = [f'#report={self.config.get("title", "rank-join")} a={a} b={b}', f'#user\trank_by_{a}\trank_by_{b}']
        lines += [f'{row.user}\t{row.rank_a}\t{row.rank_b}' for row in report.rows]
        return lines


class CurveWriter(Writer):
    @staticmethod
    def name():
        return 'curve'

    def convert(self):
        curve = self.result
        slope, intercept = curve.fit
        lines = [f'#curve measure={self.config.get("measure", "-")} q={curve.q}', '#bin_center\tpercentile']
        lines += [f'{format_score(center)}\t{percentile}' for center, percentile in curve.bins]
        lines.append(f'#fit slope={format_score(slope)} intercept={format_score(intercept)}')
        return lines


class RatesWriter(Writer):
    @staticmethod
    def name():
        return 'rates'

    def convert(self):
        report = self.result
        lines = ['#report=retweeting-rates']
        for label, summary in (('user', report.user_summary), ('audience', report.audience_summary)):
            mean = '-' if summary.mean is None else format_score(summary.mean)
            median = '-' if summary.median is None else format_score(summary.median)
            lines.append(f'#summary {label} count={summary.count} mean={mean} median={median}')
            lines.append(f'#histogram {label} ' + ' '.join(str(count) for count in summary.histogram))

        lines.append('#user\tuser_retweeting_rate\taudience_retweeting_rate')
        users = sorted(set(report.user_retweeting_rate) | set(report.audience_retweeting_rate))
        for user in users:
            user_rate = report.user_retweeting_rate.get(user)
            audience_rate = report.audience_retweeting_rate.get(user)
            lines.append('\t'.join([
                user,
                '-' if user_rate is None else format_score(user_rate),
                '-' if audience_rate is None else format_score(audience_rate),
            ]))
        return lines


class CorrelationWriter(Writer):
    @staticmethod
    def name():
        return 'correlation'

    def convert(self):
        lines = ['#report=correlation', '#a\tb\tshared_users\tspearman']
        for a, b, shared, rho in self.result:
            lines.append(f'{a}\t{b}\t{shared}\t{"-" if rho is None else format_score(rho)}')
        return lines


class PointsWriter(Writer):
    @staticmethod
    def name():
        return 'points'

    def convert(self):
        columns = self.config.get('columns', ('user', 'x', 'y'))
        lines = ['#' + '\t'.join(columns)]
        for point in self.result:
            lines.append('\t'.join(format_score(value) if isinstance(value, float) else str(value) for value in point))
        return lines
