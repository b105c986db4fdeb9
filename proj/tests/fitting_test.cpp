#include "ndoppe/fitting.hpp"

#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "ndoppe/fixtures.hpp"
#include "oracles.hpp"

using namespace ndoppe;

namespace {

CountDataset fixture_data(const char* name) {
    const auto* fx = find_fixture(name);
    REQUIRE(fx != nullptr);
    return fx->dataset();
}

}  // namespace

TEST_CASE("CountDataset validation") {
    CHECK_THROWS_AS(CountDataset({}), std::invalid_argument);
    CHECK_THROWS_AS(CountDataset({{0, 2}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CountDataset({{0, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(CountDataset({{-1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(CountDataset({{0, 0}, {1, 0}}), std::invalid_argument);  // n = 0

    CountDataset d({{2, 5}, {0, 1}, {1, 0}});  // unsorted input is fine
    CHECK(d.cells()[0].count == 0);
    CHECK(d.cells()[1].count == 1);
    CHECK(d.total() == 6);
    CHECK(d.sample_mean() == doctest::Approx(10.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("geometric closed-form MLE") {
    CountDataset d({{0, 1}, {1, 1}});
    const auto fit = fit_ndoppe(d, {1.0});
    CHECK(fit.params.at("theta") == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    oracles::SweepRng rng(23);
    for (int i = 0; i < 20; ++i) {
        std::vector<CountCell> cells;
        for (int x = 0; x <= 8; ++x) cells.push_back({x, rng.uniform_int(0, 50)});
        cells[0].frequency += 1;
        cells[1].frequency += 1;
        CountDataset data(cells);
        const double xbar = data.sample_mean();
        const auto f = fit_ndoppe(data, {1.0});
        CHECK(f.params.at("theta") == doctest::Approx(1.0 / (1.0 + xbar)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate data is rejected") {
    CountDataset zeros({{0, 3}});
    CHECK_THROWS(fit_poisson(zeros));
    CHECK_THROWS(fit_ndoppe(zeros, {1.0, 1.0}));
    CHECK_THROWS(fit_negbin(zeros));
}

TEST_CASE("table-1 NDOPPE fitted column") {
    const auto fit = fit_ndoppe(fixture_data("table1"), {1.0, 1.0});
    const double expected[] = {103519.4, 14339.05, 1765.495, 203.7906,
                               22.58254, 2.432916, 0.2567596};
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(fit.fitted[i] == doctest::Approx(expected[i]).epsilon(2e-3));
    CHECK(fit.nll == doctest::Approx(54630.26).epsilon(5e-4));
    CHECK(fit.chi_sq == doctest::Approx(57.37906).epsilon(1e-2));
}

TEST_CASE("table-5 NDOPPE nll") {
    const auto fit = fit_ndoppe(fixture_data("table5"), {1.0, 3.35});
    CHECK(fit.nll == doctest::Approx(36104.22).epsilon(5e-4));
    CHECK(fit.chi_sq == doctest::Approx(10.87023).epsilon(1e-2));
}

TEST_CASE("table-6 and table-8 NDOPPE nll") {
    CHECK(fit_ndoppe(fixture_data("table6"), {1.0, 1.0}).nll ==
          doctest::Approx(10224.71).epsilon(5e-4));
    CHECK(fit_ndoppe(fixture_data("table8"), {1.0, 1.0}).nll ==
          doctest::Approx(145879.5).epsilon(5e-4));
}

TEST_CASE("poisson fits") {
    const auto t1 = fit_poisson(fixture_data("table1"));
    CHECK(t1.params.at("alpha") == doctest::Approx(18594.0 / 119853.0).epsilon(1e-15));
    CHECK(t1.nll == doctest::Approx(55108.46).epsilon(5e-4));
    CHECK(t1.chi_sq == doctest::Approx(4218.796).epsilon(1e-2));

    const auto t4 = fit_poisson(fixture_data("table4"));
    CHECK(std::fabs(t4.fitted[0] - 3668.600) < 1.0);
}

TEST_CASE("negbin fit: free r") {
    // free-(r, p) maximum likelihood yields a strictly better likelihood
    // than any fixed-r fit on the same data
    const auto data = fixture_data("table2");
    const auto fit = fit_negbin(data);
    CHECK(fit.nll == doctest::Approx(171152.4).epsilon(5e-4));
    const auto fixed = fit_negbin(data, 2.0);
    CHECK(fit.nll <= fixed.nll + 1e-9);
    // local optimality in r
    const double r_hat = fit.params.at("r");
    for (double bump : {0.99, 1.01}) {
        const auto nearby = fit_negbin(data, r_hat * bump);
        CHECK(fit.nll <= nearby.nll + 1e-9);
    }
}

TEST_CASE("negbin fit: published columns use r = 2") {
    const auto t2 = fit_negbin(fixture_data("table2"), 2.0);
    CHECK(t2.nll == doctest::Approx(171152.4).epsilon(5e-4));
    const auto t3 = fit_negbin(fixture_data("table3"), 2.0);
    CHECK(t3.fitted[0] == doctest::Approx(7718.056).epsilon(5e-3));
    // the published cell reflects a p rounded to ~6e-6, hence ~1.4
    // counts of slack on a 1e5 cell
    const auto t1 = fit_negbin(fixture_data("table1"), 2.0);
    CHECK(t1.fitted[0] == doctest::Approx(103217.2).epsilon(1e-4));
}

TEST_CASE("negbin fit flags the Poisson limit") {
    // equi-dispersed synthetic data: Poisson-like, r runs away
    std::vector<CountCell> cells = {{0, 3679}, {1, 3679}, {2, 1839}, {3, 613}, {4, 153}, {5, 31}};
    CountDataset data(cells);
    const auto fit = fit_negbin(data);
    CHECK(!fit.warnings.empty());
    const auto poisson = fit_poisson(data);
    CHECK(fit.nll == doctest::Approx(poisson.nll).epsilon(1e-4));
}

TEST_CASE("chi-square cell scheme") {
    CountDataset d({{0, 10}, {1, 5}, {2, 1}});
    CHECK(chi_square(d, {10.0, 5.0, 1.0}) == doctest::Approx(0.0));
    // no pooling: each listed cell contributes (O-E)^2/E
    const double by_hand = 0.0625 / 9.75 + 0.25 / 5.5 + 0.0625 / 0.75;
    CHECK(chi_square(d, {9.75, 5.5, 0.75}) == doctest::Approx(by_hand).epsilon(1e-13));
    CHECK_THROWS_AS(chi_square(d, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("negative log-likelihood") {
    CountDataset single({{0, 5}});
    NdoppeDistribution geo({1.0}, 0.5);
    CHECK(neg_log_likelihood(single, geo) == doctest::Approx(-5.0 * std::log(0.5)).epsilon(1e-14));
}

TEST_CASE("MOM = MLE: score vanishes at theta_hat on every fixture") {
    for (const auto& fx : fixtures()) {
        const CountDataset data = fx.dataset();
        const auto fit = fit_ndoppe(data, fx.coeffs);
        const double score = ndoppe_score(data, fx.coeffs, fit.params.at("theta"));
        CHECK(std::fabs(score) < 1e-8);
    }
}

TEST_CASE("theta_hat is a local NLL optimum on every fixture") {
    for (const auto& fx : fixtures()) {
        const CountDataset data = fx.dataset();
        const auto fit = fit_ndoppe(data, fx.coeffs);
        const double theta = fit.params.at("theta");
        for (double delta : {1e-4, 1e-3, -1e-4, -1e-3}) {
            NdoppeDistribution d(fx.coeffs, theta + delta);
            CHECK(fit.nll <= neg_log_likelihood(data, d) + 1e-9);
        }
    }
}

TEST_CASE("fitted counts sum to at most n and approach n on full support") {
    for (const auto& fx : fixtures()) {
        const CountDataset data = fx.dataset();
        const auto fit = fit_ndoppe(data, fx.coeffs);
        double s = 0.0;
        for (double v : fit.fitted) s += v;
        CHECK(s <= static_cast<double>(data.total()) * (1.0 + 1e-12));
    }
    // extending the cells toward the full support drives the sum to n
    const auto fit = fit_ndoppe(fixture_data("table4"), {1.0, 1.0});
    NdoppeDistribution d({1.0, 1.0}, fit.params.at("theta"));
    double mass = 0.0;
    for (int x = 0; x <= d.quantile(1.0 - 1e-12); ++x) mass += d.pmf(x);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}
