#include "ndoppe/baselines.hpp"

#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "ndoppe/distribution.hpp"
#include "oracles.hpp"

using ndoppe::NegBinomialDistribution;
using ndoppe::PoissonDistribution;

TEST_CASE("poisson pmf") {
    PoissonDistribution d(1.0);
    CHECK(d.pmf(0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    double s = 0.0;
    for (int x = 0; x <= 60; ++x) s += d.pmf(x);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(PoissonDistribution(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PoissonDistribution(-1.0), std::invalid_argument);
}

TEST_CASE("poisson at the table-1 rate reproduces the published zero cell") {
    // alpha = 18594/119853, the sample mean of the first bundled table.
    // The published cell was produced with a rate rounded to ~1e-4, so
    // agreement is to 0.1% rather than to +-0.5 counts.
    PoissonDistribution d(18594.0 / 119853.0);
    CHECK(119853.0 * d.pmf(0) == doctest::Approx(102627.9).epsilon(1e-3));
    CHECK(d.pmf(0) == doctest::Approx(std::exp(-18594.0 / 119853.0)).epsilon(1e-15));
}

TEST_CASE("negbin pmf") {
    NegBinomialDistribution geo(1.0, 0.3);  // r=1: geometric with success 0.7
    for (int x = 0; x <= 20; ++x)
        CHECK(geo.pmf(x) == doctest::Approx(0.7 * std::pow(0.3, x)).epsilon(1e-13));

    NegBinomialDistribution d(2.0, 0.5);
    CHECK(d.pmf(1) == doctest::Approx(0.25).epsilon(1e-14));

    double s = 0.0;
    NegBinomialDistribution frac(2.7, 0.42);
    for (int x = 0; x <= 200; ++x) s += frac.pmf(x);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(NegBinomialDistribution(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(NegBinomialDistribution(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NegBinomialDistribution(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("integer-r negbin equals the one-hot NDOPPE component") {
    oracles::SweepRng rng(19);
    for (int i = 0; i < 30; ++i) {
        const int r = rng.uniform_int(1, 6);
        const double p = rng.uniform(0.05, 0.95);
        std::vector<double> onehot(r, 0.0);
        onehot.back() = 1.0;  // a = e_{r-1}
        ndoppe::NdoppeDistribution mix(onehot, 1.0 - p);
        NegBinomialDistribution nb(static_cast<double>(r), p);
        for (int x = 0; x <= 60; ++x)
            CHECK(nb.pmf(x) == doctest::Approx(mix.pmf(x)).epsilon(1e-12));
    }
}

TEST_CASE("negbin moments") {
    NegBinomialDistribution d(2.5, 0.4);
    auto pmf = [&d](int x) { return d.pmf(x); };
    CHECK(d.mean() == doctest::Approx(oracles::moment_by_summation(pmf, 1)).epsilon(1e-10));
    const double m2 = oracles::moment_by_summation(pmf, 2);
    CHECK(d.variance() == doctest::Approx(m2 - d.mean() * d.mean()).epsilon(1e-9));
}
