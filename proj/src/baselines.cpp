#include "ndoppe/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ndoppe {

PoissonDistribution::PoissonDistribution(double alpha) : alpha_(alpha) {
    if (!(alpha_ > 0.0))
        throw std::invalid_argument("PoissonDistribution: alpha must be > 0, got " +
                                    std::to_string(alpha));
}

double PoissonDistribution::log_pmf(int x) const {
    if (x < 0) throw std::domain_error("poisson pmf: x must be >= 0");
    return -alpha_ + x * std::log(alpha_) - std::lgamma(x + 1.0);
}

double PoissonDistribution::pmf(int x) const { return std::exp(log_pmf(x)); }

NegBinomialDistribution::NegBinomialDistribution(double r, double p_fail) : r_(r), p_(p_fail) {
    if (!(r_ > 0.0))
        throw std::invalid_argument("NegBinomialDistribution: r must be > 0");
    if (!(p_ > 0.0) || !(p_ < 1.0))
        throw std::invalid_argument("NegBinomialDistribution: p must lie in (0, 1), got " +
                                    std::to_string(p_fail));
}

double NegBinomialDistribution::log_pmf(int x) const {
    if (x < 0) throw std::domain_error("negbin pmf: x must be >= 0");
    return std::lgamma(x + r_) - std::lgamma(r_) - std::lgamma(x + 1.0) + r_ * std::log1p(-p_) +
           x * std::log(p_);
}

double NegBinomialDistribution::pmf(int x) const { return std::exp(log_pmf(x)); }

}  // namespace ndoppe
