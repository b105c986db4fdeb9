#ifndef NDOPPE_FITTING_HPP
#define NDOPPE_FITTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ndoppe/baselines.hpp"
#include "ndoppe/distribution.hpp"

namespace ndoppe {

// A claim-count frequency table.  Cells are kept in strictly increasing
// count order; zero-frequency cells are legitimate (they still enter the
// chi-square sum).
struct CountCell {
    int count = 0;
    std::int64_t frequency = 0;
};

class CountDataset {
  public:
    explicit CountDataset(std::vector<CountCell> cells);

    const std::vector<CountCell>& cells() const { return cells_; }
    std::int64_t total() const { return total_; }
    double sample_mean() const;

  private:
    std::vector<CountCell> cells_;
    std::int64_t total_ = 0;
};

struct FitResult {
    std::string model;                      // "ndoppe", "poisson", "negbin"
    std::map<std::string, double> params;   // named estimates
    std::vector<double> coeffs;             // NDOPPE coefficient config, when applicable
    std::vector<double> fitted;             // n * p_hat(x) per dataset cell
    double nll = 0.0;                       // -sum O_x ln p_hat(x)
    double chi_sq = 0.0;                    // Pearson, over the listed cells, no pooling
    std::vector<std::string> warnings;
};

// Pearson chi-square over exactly the dataset's cells: sum (O-E)^2/E
// with E = fitted expected counts.  No minimum-count pooling and no tail
// cell; that is the scheme the bundled reference tables follow.
double chi_square(const CountDataset& data, const std::vector<double>& fitted);

double neg_log_likelihood(const CountDataset& data, const NdoppeDistribution& d);
double neg_log_likelihood(const CountDataset& data, const PoissonDistribution& d);
double neg_log_likelihood(const CountDataset& data, const NegBinomialDistribution& d);

// Maximum-likelihood fits.
//
// For the NDOPPE family the ML and moment estimators of theta coincide:
// theta_hat solves mean(theta) = sample mean, a strictly decreasing
// equation solved here by bisection to machine precision (residual
// |mean - xbar| <= 1e-12 max(1, xbar)).
FitResult fit_ndoppe(const CountDataset& data, const std::vector<double>& coeffs);

// alpha_hat = sample mean.
FitResult fit_poisson(const CountDataset& data);

// Profile likelihood: p_hat(r) = xbar/(r + xbar) analytically, r by
// golden-section search on ln r in [-10, 10].  A warning is attached
// when r_hat sticks at the search bound (data consistent with the
// Poisson limit).  Passing fixed_r skips the search and fits p alone;
// the bundled reference tables were produced with fixed_r = 2.
FitResult fit_negbin(const CountDataset& data, std::optional<double> fixed_r = std::nullopt);

// Score of the NDOPPE log-likelihood at theta, evaluated directly as
// n h'(theta)/h(theta) - sum x_i / (1-theta); used to verify the
// MOM = MLE property at the fitted point.
double ndoppe_score(const CountDataset& data, const std::vector<double>& coeffs, double theta);

}  // namespace ndoppe

#endif
