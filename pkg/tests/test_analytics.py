import numpy as np
import pytest

from conftest import events_of, follows_of
from influencerank.analytics import (audience_retweeting_rate, few_followers_high_influence, followers_vs_influence,
                                     many_followers_low_influence, percentile_curve, rank_correlation, rank_join,
                                     rate_report, top_k, url_attribute_average, url_click_points,
                                     url_early_influence, user_retweeting_rate)
from influencerank.analytics.curves import nearest_rank
from influencerank.errors import ConstantRanking, InsufficientOverlap, InvalidParams, NoData
from influencerank.scoring import ScoreVector, h_index_vector
from influencerank.testkit.oracles import (naive_audience_rate, naive_percentile, naive_spearman, naive_url_average,
                                          naive_user_rate)


def vector(label='x', **values):
    return ScoreVector.from_mapping(label, values)


def test_user_rate_of_one_in_318():
    lines = [f'{k}\tf\turl{k}\tM' for k in range(318)] + ['1000\tu\turl7\tRT\tf']
    log = events_of(*lines)
    follows = follows_of(('f', 'u'))
    assert user_retweeting_rate(log, follows, 'u') == pytest.approx(1 / 318)


def test_user_rate_without_retweets_is_zero():
    log = events_of(*[f'{k}\tf\turl{k}\tM' for k in range(10)])
    assert user_retweeting_rate(log, follows_of(('f', 'u')), 'u') == 0.0


def test_user_rate_of_someone_following_nobody_is_undefined():
    log = events_of('1\tf\tx\tM')
    assert user_retweeting_rate(log, follows_of(('f', 'u')), 'f') is None


def test_audience_rate():
    log = events_of('1\ti\tx\tM', '2\ti\ty\tM', '3\ti\tz\tM', '4\ta\tx\tRT\ti')
    follows = follows_of(('i', 'a'), ('i', 'b'))
    assert audience_retweeting_rate(log, follows, 'i') == pytest.approx(1 / 6)


def test_audience_rate_without_followers_is_undefined():
    log = events_of('1\ti\tx\tM')
    assert audience_retweeting_rate(log, follows_of(('a', 'i')), 'i') is None


def test_audience_rates_match_brute_force(small_synth):
    log, follows = small_synth
    report = rate_report(log, follows)
    for user in follows.users:
        expected = naive_audience_rate(log, follows, user)
        if expected is None:
            assert user not in report.audience_retweeting_rate
        else:
            assert report.audience_retweeting_rate[user] == pytest.approx(expected, abs=1e-15)


def test_repeated_retweets_count_as_separate_events():
    log = events_of('1\tf\tx\tM', '2\tf\tx\tM', '3\tu\tx\tRT\tf', '4\tu\tx\tRT\tf')
    assert user_retweeting_rate(log, follows_of(('f', 'u')), 'u') == 1.0

    log = events_of('1\ti\tx\tM', '2\ti\ty\tM', '3\ta\tx\tRT\ti', '4\ta\tx\tRT\ti')
    follows = follows_of(('i', 'a'), ('i', 'b'))
    assert audience_retweeting_rate(log, follows, 'i') == 0.5


def test_user_rates_match_brute_force(small_synth):
    log, follows = small_synth
    report = rate_report(log, follows)
    checked = 0
    for user in follows.users:
        expected = naive_user_rate(log, follows, user)
        if expected is None:
            assert user not in report.user_retweeting_rate
        else:
            assert report.user_retweeting_rate[user] == pytest.approx(expected, abs=1e-15)
            checked += 1
    assert checked > 0


def test_rates_lie_in_unit_interval(small_synth):
    report = rate_report(*small_synth)
    assert report.user_retweeting_rate
    for rates in (report.user_retweeting_rate, report.audience_retweeting_rate):
        assert all(0.0 <= rate <= 1.0 for rate in rates.values())
    assert report.user_summary.count == len(report.user_retweeting_rate)
    assert sum(report.user_summary.histogram) == report.user_summary.count
    assert report.user_summary.mean == pytest.approx(np.mean(list(report.user_retweeting_rate.values())))


def test_url_average():
    log = events_of('1\ta\tx\tM', '2\tb\tx\tM', '3\tc\ty\tM', '4\tc\ty\tM')
    averages = url_attribute_average(log, vector(a=0.1, b=0.3, c=0.4))
    assert averages['x'] == pytest.approx(0.2)
    assert averages['y'] == pytest.approx(0.4)


def test_url_average_skips_unscored_users():
    log = events_of('1\ta\tx\tM', '2\tz\tx\tM', '3\tz\ty\tM')
    averages = url_attribute_average(log, vector(a=0.5))
    assert averages == {'x': 0.5}


def test_url_average_matches_naive_join(small_synth):
    log, _ = small_synth
    scores = h_index_vector(log)
    expected = naive_url_average(log, scores.as_dict())
    averages = url_attribute_average(log, scores)
    assert averages.keys() == expected.keys()
    for url, value in expected.items():
        assert averages[url] == pytest.approx(value, abs=1e-12)


def test_early_influence_uses_the_first_mentioners():
    log = events_of('1\ta\tx\tM', '2\tb\tx\tM', '3\tc\tx\tM', '4\ta\tx\tM')
    scores = vector(a=1.0, b=3.0, c=100.0)
    assert url_early_influence(log, scores, first_n=2) == {'x': 2.0}
    with pytest.raises(InvalidParams):
        url_early_influence(log, scores, first_n=0)


def test_click_points_drop_urls_without_clicks():
    assert url_click_points({'x': 0.5, 'y': 0.25}, {'x': 10}) == [(0.5, 10)]


def test_nearest_rank_single_bin():
    curve = percentile_curve([(1.0, clicks) for clicks in range(1, 1001)], q=0.999)
    assert curve.bins == ((1.0, 1000),)
    assert curve.fit[0] == 0.0


def test_nearest_rank_at_an_exact_multiple():
    # q * n = 2 lands on a boundary: the value after it is taken
    assert nearest_rank([40, 10, 30, 20], 0.5) == 30
    assert nearest_rank([40, 10, 30, 20], 0.49) == 20
    assert nearest_rank(list(range(1, 1001)), 0.999) == 1000


def test_constant_clicks_give_a_flat_curve():
    points = [(x, 42) for x in np.logspace(-3, 0, 200)]
    curve = percentile_curve(points, q=0.9, bin_count=10)
    assert len(curve.bins) == 10
    assert all(percentile == 42 for _, percentile in curve.bins)
    assert curve.fit[0] == pytest.approx(0.0, abs=1e-12)
    assert curve.fit[1] == pytest.approx(np.log10(42))


def test_percentile_matches_sort_oracle():
    rng = np.random.default_rng(21)
    for q in (0.5, 0.9, 0.999):
        for size in (1, 2, 7, 100, 1001):
            values = rng.integers(0, 10_000, size=size)
            assert nearest_rank(values, q) == naive_percentile(values.tolist(), q)


def test_two_bin_curve_matches_sort_oracle():
    low = [(0.01, clicks) for clicks in (5, 1, 9, 3)]
    high = [(1.0, clicks) for clicks in (100, 40, 70)]
    curve = percentile_curve(low + high, q=0.5, bin_count=2)
    assert [percentile for _, percentile in curve.bins] == [naive_percentile([5, 1, 9, 3], 0.5),
                                                            naive_percentile([100, 40, 70], 0.5)]


def test_scaling_clicks_scales_percentiles():
    rng = np.random.default_rng(5)
    points = [(float(x), int(c)) for x, c in zip(rng.random(500) + 0.01, rng.integers(0, 1000, 500))]
    scaled = [(x, 7 * c) for x, c in points]
    base = percentile_curve(points, q=0.99, bin_count=20)
    times_seven = percentile_curve(scaled, q=0.99, bin_count=20)
    assert [center for center, _ in base.bins] == [center for center, _ in times_seven.bins]
    assert [7 * p for _, p in base.bins] == [p for _, p in times_seven.bins]


def test_curve_needs_positive_points():
    with pytest.raises(NoData):
        percentile_curve([(0.0, 3), (-1.0, 5)])


def test_correlation_with_itself_and_its_reverse():
    rng = np.random.default_rng(6)
    values = {f'u{k}': float(v) for k, v in enumerate(rng.permutation(50))}
    a = ScoreVector.from_mapping('a', values)
    reverse = ScoreVector.from_mapping('b', {user: 100.0 - value for user, value in values.items()})
    assert rank_correlation(a, a) == 1.0
    assert rank_correlation(a, reverse) == -1.0


def test_correlation_matches_naive_spearman():
    rng = np.random.default_rng(7)
    a = {f'u{k}': float(v) for k, v in enumerate(rng.integers(0, 10, 60))}
    b = {f'u{k}': float(v) for k, v in enumerate(rng.integers(0, 10, 70)) if k % 3}
    expected = naive_spearman(a, b)
    assert rank_correlation(ScoreVector.from_mapping('a', a), ScoreVector.from_mapping('b', b)) == pytest.approx(
        expected, abs=1e-12)


def test_correlation_ignores_increasing_transforms():
    rng = np.random.default_rng(8)
    a = {f'u{k}': float(v) for k, v in enumerate(rng.integers(0, 20, 40))}
    b = {f'u{k}': float(v) for k, v in enumerate(rng.integers(0, 20, 40))}
    transformed = {user: 3 * value + 5 for user, value in b.items()}
    va = ScoreVector.from_mapping('a', a)
    assert rank_correlation(va, ScoreVector.from_mapping('b', b)) == rank_correlation(
        va, ScoreVector.from_mapping('b', transformed))


def test_correlation_errors():
    with pytest.raises(InsufficientOverlap):
        rank_correlation(vector(a=1.0, b=2.0), vector(b=1.0, c=2.0))
    with pytest.raises(ConstantRanking):
        rank_correlation(vector(a=1.0, b=1.0), vector(a=1.0, b=2.0))


def test_top_k():
    report = top_k(vector(a=3.0, b=1.0, c=2.0), 2)
    assert [(row.user, row.rank) for row in report.rows] == [('a', 1), ('c', 2)]


def test_top_k_breaks_ties_by_user():
    report = top_k(vector(b=1.0, a=1.0), 2)
    assert [row.user for row in report.rows] == ['a', 'b']


def test_top_k_predicate_filters_before_ranking():
    report = top_k(vector(a=3.0, b=1.0, c=2.0), 2, predicate=lambda user: user != 'a')
    assert [(row.user, row.rank) for row in report.rows] == [('c', 1), ('b', 2)]


def test_top_k_is_a_prefix_of_the_ranking():
    rng = np.random.default_rng(9)
    scores = ScoreVector.from_mapping('x', {f'u{k}': float(v) for k, v in enumerate(rng.integers(0, 5, 30))})
    full = scores.ranking()
    assert [row.user for row in top_k(scores, 10).rows] == full[:10]


def test_rank_join_matches_double_sort():
    rng = np.random.default_rng(10)
    a = {f'u{k}': float(v) for k, v in enumerate(rng.permutation(25))}
    b = {f'u{k}': float(v) for k, v in enumerate(rng.permutation(25))}
    join = rank_join(ScoreVector.from_mapping('a', a), ScoreVector.from_mapping('b', b))

    by_a = sorted(a, key=lambda user: (-a[user], user))
    by_b = sorted(b, key=lambda user: (-b[user], user))
    assert [row.user for row in join.rows] == by_a
    for row in join.rows:
        assert row.rank_a == by_a.index(row.user) + 1
        assert row.rank_b == by_b.index(row.user) + 1
    assert sorted(row.rank_b for row in join.rows) == list(range(1, 26))


def test_popularity_contrast_tables():
    followers = vector('followers', a=100.0, b=90.0, c=5.0, d=1.0)
    influence = vector('ip-influence', a=0.1, b=0.4, c=0.3, d=0.2)
    join = rank_join(followers, influence)

    popular = many_followers_low_influence(join, follower_top=2, k=1)
    assert [row.user for row in popular.rows] == ['a']

    obscure = few_followers_high_influence(join, follower_floor=2, k=2)
    assert [(row.user, row.rank_b) for row in obscure.rows] == [('c', 2), ('d', 3)]


def test_followers_vs_influence():
    follows = follows_of(('a', 'b'), ('a', 'c'))
    rows = followers_vs_influence(follows, vector(a=0.7, b=0.3))
    assert rows == [('a', 2, 0.7), ('b', 0, 0.3)]
