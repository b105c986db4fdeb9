#ifndef NDOPPE_DISTRIBUTION_HPP
#define NDOPPE_DISTRIBUTION_HPP

#include <complex>
#include <vector>

namespace ndoppe {

// Count distribution built as a finite mixture of negative binomial
// components NB(k+1, theta), k = 0..r, with mixture weights driven by a
// vector of non-negative polynomial coefficients a_0..a_r:
//
//   w_k  propto  a_k * k! / theta^(k+1)
//   pmf(x) = sum_k w_k * C(x+k, x) * (1-theta)^x * theta^(k+1)
//
// a = {1} is the geometric distribution; a = {1, 1} is the natural
// discrete Lindley distribution.  The family is over-dispersed for every
// theta in (0, 1).
class NdoppeDistribution {
  public:
    NdoppeDistribution(std::vector<double> coefficients, double theta);

    const std::vector<double>& coefficients() const { return coeffs_; }
    double theta() const { return theta_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Normalized mixture weights w_0..w_r (sum to 1).
    const std::vector<double>& weights() const { return weights_; }
    // Normalizing constant h(theta) = 1 / sum_k a_k k! theta^-(k+1).
    double h() const;
    double log_h() const { return log_h_; }

    double pmf(int x) const;
    // p(0..x_max) via the forward recursion
    //   p(x+1) = (1-theta)/(1+x) * S(x+1)/S(x) * p(x),
    //   S(x) = sum_k a_k (x+k)!,
    // with the factorial-sum ratio evaluated incrementally.
    std::vector<double> pmf_recursive(int x_max) const;

    double cdf(int x) const;              // P(X <= x)
    double survival(int t) const;         // P(X >= t)
    double hazard(int t) const;           // pmf(t) / survival(t)
    int quantile(double q) const;         // smallest x with cdf(x) >= q

    double mean() const;
    double variance() const;
    double raw_moment(int j) const;        // E[X^j], j = 1..4
    double factorial_moment(int m) const;  // E[X(X-1)...(X-m+1)], m >= 1
    double index_of_dispersion() const;    // variance / mean, always >= 1

    double mgf(double t) const;   // t < -ln(1-theta)
    double pgf(double s) const;   // |s| < 1/(1-theta)
    std::complex<double> cf(double t) const;
    double cgf(double t) const;   // ln mgf(t)

    // Order-statistic cdfs for an iid sample of size n.
    double min_cdf(int x, int n) const;
    double max_cdf(int x, int n) const;

  private:
    std::vector<double> coeffs_;
    double theta_;
    std::vector<double> weights_;
    std::vector<double> log_weights_;
    double log_h_;
};

// Stress-strength reliability R = P(stress <= strength) for independent
// variates.  The sum over strength values is truncated once the
// remaining strength mass drops below 1e-12, so the result carries at
// most that much truncation error.
double stress_strength(const NdoppeDistribution& strength, const NdoppeDistribution& stress);

}  // namespace ndoppe

#endif
