from influencerank.analytics.curves import (PercentileCurve, percentile_curve, url_attribute_average, url_click_points,
                                           url_early_influence)
from influencerank.analytics.ranking import (RankReport, few_followers_high_influence, followers_vs_influence,
                                            many_followers_low_influence, rank_correlation, rank_join, top_k)
from influencerank.analytics.rates import RateReport, audience_retweeting_rate, rate_report, user_retweeting_rate
