#include "ndoppe/simulate.hpp"

#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "oracles.hpp"

using namespace ndoppe;

TEST_CASE("determinism and serial/parallel equivalence") {
    NdoppeDistribution d({1.0, 1.0}, 0.5);
    const SimConfig cfg{7u, 100'000};
    const auto a = sample_ndoppe(d, cfg);
    const auto b = sample_ndoppe(d, cfg);
    CHECK(a == b);
    CHECK(a == sample_ndoppe_serial(d, cfg));

    CompoundModel m(d, 2.0);
    const auto s1 = sample_aggregate(m, cfg);
    CHECK(s1 == sample_aggregate(m, cfg));
    CHECK(s1 == sample_aggregate_serial(m, cfg));

    const auto other = sample_ndoppe(d, SimConfig{8u, 100'000});
    CHECK(a != other);
    CHECK_THROWS_AS(sample_ndoppe(d, SimConfig{1u, 0}), std::invalid_argument);
}

TEST_CASE("geometric sample moments") {
    NdoppeDistribution geo({1.0}, 0.5);
    const std::size_t n = 1'000'000;
    const auto draws = sample_ndoppe(geo, SimConfig{11u, n});
    const auto s = summarize(draws);
    // mean 1, variance 2, 4 standard errors
    CHECK(std::fabs(s.mean - 1.0) < 4.0 * std::sqrt(2.0 / static_cast<double>(n)));

    // empirical pmf at 0, 1, 2 within 4 binomial SEs
    double counts[3] = {0, 0, 0};
    for (int v : draws)
        if (v < 3) counts[v] += 1.0;
    for (int x = 0; x < 3; ++x) {
        const double p = geo.pmf(x);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
        CHECK(std::fabs(counts[x] / static_cast<double>(n) - p) < 4.0 * se);
    }
}

TEST_CASE("mixture sample moments") {
    NdoppeDistribution d({1.0, 2.0, 0.5}, 0.35);
    const std::size_t n = 1'000'000;
    const auto s = summarize(sample_ndoppe(d, SimConfig{13u, n}));
    const double se_mean = std::sqrt(d.variance() / static_cast<double>(n));
    CHECK(std::fabs(s.mean - d.mean()) < 4.0 * se_mean);
    CHECK(std::fabs(s.zero_share - d.pmf(0)) <
          4.0 * std::sqrt(d.pmf(0) * (1.0 - d.pmf(0)) / static_cast<double>(n)));
}

TEST_CASE("aggregate claims: atom share dominates for near-degenerate counts") {
    CompoundModel m(NdoppeDistribution({1.0}, 0.99), 1.0);
    const auto s = summarize(sample_aggregate(m, SimConfig{17u, 10'000}));
    CHECK(s.zero_share >= 0.95);
}

TEST_CASE("aggregate claims match closed-form moments") {
    NdoppeDistribution d({1.0, 1.0}, 0.5);
    CompoundModel m(d, 2.0);
    const std::size_t n = 1'000'000;
    const auto s = summarize(sample_aggregate(m, SimConfig{19u, n}));

    const double se_mean = std::sqrt(m.variance() / static_cast<double>(n));
    CHECK(std::fabs(s.mean - m.mean()) < 4.0 * se_mean);

    const double se_var =
        std::sqrt((s.fourth_central - s.variance * s.variance) / static_cast<double>(n));
    CHECK(std::fabs(s.variance - m.variance()) < 4.0 * se_var);

    const double atom = m.atom();
    CHECK(std::fabs(s.zero_share - atom) <
          4.0 * std::sqrt(atom * (1.0 - atom) / static_cast<double>(n)));
}

TEST_CASE("aggregate sampling for Poisson and integer-r negbin primaries") {
    CompoundModel po(PoissonDistribution(1.5), 1.0);
    const std::size_t n = 400'000;
    const auto s = summarize(sample_aggregate(po, SimConfig{23u, n}));
    CHECK(std::fabs(s.mean - po.mean()) <
          4.0 * std::sqrt(po.variance() / static_cast<double>(n)));
    CHECK(std::fabs(s.zero_share - std::exp(-1.5)) <
          4.0 * std::sqrt(std::exp(-1.5) * (1.0 - std::exp(-1.5)) / static_cast<double>(n)));

    CompoundModel nb(NegBinomialDistribution(3.0, 0.35), 2.0);
    const auto snb = summarize(sample_aggregate(nb, SimConfig{29u, n}));
    CHECK(std::fabs(snb.mean - nb.mean()) <
          4.0 * std::sqrt(nb.variance() / static_cast<double>(n)));

    CHECK_THROWS_AS(sample_aggregate(CompoundModel(NegBinomialDistribution(2.5, 0.3), 1.0),
                                     SimConfig{1u, 16}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_aggregate(CompoundModel(DiscreteLindleyPrimary{0.5}, 1.0),
                                     SimConfig{1u, 16}),
                    std::invalid_argument);
}

TEST_CASE("min/max order-statistic cdfs against simulation") {
    NdoppeDistribution d({1.0, 1.0}, 0.5);
    const int group = 5;
    const std::size_t groups = 200'000;  // 10^6 draws in groups of 5
    const auto draws = sample_ndoppe(d, SimConfig{31u, group * groups});
    const int x_probe = 2;
    double min_le = 0.0, max_le = 0.0;
    for (std::size_t g = 0; g < groups; ++g) {
        int mn = draws[g * group], mx = draws[g * group];
        for (int j = 1; j < group; ++j) {
            mn = std::min(mn, draws[g * group + j]);
            mx = std::max(mx, draws[g * group + j]);
        }
        if (mn <= x_probe) min_le += 1.0;
        if (mx <= x_probe) max_le += 1.0;
    }
    const double n = static_cast<double>(groups);
    const double f_min = d.min_cdf(x_probe, group);
    const double f_max = d.max_cdf(x_probe, group);
    CHECK(std::fabs(min_le / n - f_min) < 4.0 * std::sqrt(f_min * (1.0 - f_min) / n));
    CHECK(std::fabs(max_le / n - f_max) < 4.0 * std::sqrt(f_max * (1.0 - f_max) / n));
}

TEST_CASE("stop-loss premium against a large simulation") {
    CompoundModel m(PoissonDistribution(1.0), 1.0);
    const std::size_t n = 10'000'000;
    const auto draws = sample_aggregate(m, SimConfig{37u, n});
    const double d = 1.0;
    double sum = 0.0, sumsq = 0.0;
    for (double v : draws) {
        const double exc = v > d ? v - d : 0.0;
        sum += exc;
        sumsq += exc * exc;
    }
    const double est = sum / static_cast<double>(n);
    const double var = sumsq / static_cast<double>(n) - est * est;
    const double se = std::sqrt(var / static_cast<double>(n));
    CHECK(std::fabs(m.stop_loss_premium(d) - est) < 4.0 * se);
}
