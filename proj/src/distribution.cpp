#include "ndoppe/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ndoppe/specfun.hpp"

namespace ndoppe {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Stirling numbers of the second kind, S(j, m) for j <= 4: converts
// factorial moments into raw moments.
constexpr double kStirling[5][5] = {
    {0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0},
    {0, 1, 1, 0, 0},
    {0, 1, 3, 1, 0},
    {0, 1, 7, 6, 1},
};

}  // namespace

NdoppeDistribution::NdoppeDistribution(std::vector<double> coefficients, double theta)
    : coeffs_(std::move(coefficients)), theta_(theta) {
    if (coeffs_.empty())
        throw std::invalid_argument("NdoppeDistribution: coefficient vector must be non-empty");
    bool any_positive = false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (std::isnan(coeffs_[k]) || coeffs_[k] < 0.0)
            throw std::invalid_argument("NdoppeDistribution: coefficient a[" + std::to_string(k) +
                                        "] = " + std::to_string(coeffs_[k]) + " is negative");
        if (coeffs_[k] > 0.0) any_positive = true;
    }
    if (!any_positive)
        throw std::invalid_argument("NdoppeDistribution: at least one coefficient must be > 0");
    if (!(theta_ > 0.0) || !(theta_ < 1.0))
        throw std::invalid_argument("NdoppeDistribution: theta must lie in (0, 1), got " +
                                    std::to_string(theta_));

    // w_k propto a_k k! / theta^(k+1), normalized in log space.
    const double log_theta = std::log(theta_);
    log_weights_.resize(coeffs_.size());
    double max_lw = kNegInf;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        log_weights_[k] = coeffs_[k] > 0.0
                              ? std::log(coeffs_[k]) + std::lgamma(k + 1.0) - (k + 1.0) * log_theta
                              : kNegInf;
        max_lw = std::max(max_lw, log_weights_[k]);
    }
    double norm = 0.0;
    weights_.resize(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        weights_[k] = std::exp(log_weights_[k] - max_lw);
        norm += weights_[k];
    }
    const double log_norm = max_lw + std::log(norm);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        weights_[k] /= norm;
        log_weights_[k] -= log_norm;
    }
    log_h_ = -log_norm;  // D(theta) = sum of the unnormalized terms
}

double NdoppeDistribution::h() const { return std::exp(log_h_); }

double NdoppeDistribution::pmf(int x) const {
    if (x < 0) throw std::domain_error("pmf: x must be >= 0");
    // For the usual small orders the binomial factor C(x+k, x) is an
    // exact product, and pow keeps (1-theta)^x at a few ulps whatever
    // its magnitude, so this route stays accurate in relative terms far
    // into the tail.  The log-space fallback only matters when the
    // factors leave double range.
    const double tb_x = std::pow(1.0 - theta_, static_cast<double>(x));
    if (tb_x > 0.0) {
        double s = 0.0;
        double binom = 1.0;  // C(x+k, x) = prod_{j=1..k} (x+j)/j
        double th_pow = theta_;
        bool in_range = true;
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            if (k > 0) {
                binom *= (x + static_cast<double>(k)) / static_cast<double>(k);
                th_pow *= theta_;
                if (!std::isfinite(binom)) {
                    in_range = false;
                    break;
                }
            }
            s += weights_[k] * binom * tb_x * th_pow;
        }
        if (in_range) return s;
    }
    const double log_thetabar = std::log1p(-theta_);
    const double log_theta = std::log(theta_);
    const double lg_x1 = std::lgamma(x + 1.0);
    double max_lp = kNegInf;
    std::vector<double> lp(weights_.size(), kNegInf);
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] == 0.0) continue;
        lp[k] = log_weights_[k] + std::lgamma(x + k + 1.0) - lg_x1 - std::lgamma(k + 1.0) +
                x * log_thetabar + (k + 1.0) * log_theta;
        max_lp = std::max(max_lp, lp[k]);
    }
    if (max_lp == kNegInf) return 0.0;
    double s = 0.0;
    for (const double v : lp)
        if (v != kNegInf) s += std::exp(v - max_lp);
    return std::exp(max_lp) * s;
}

std::vector<double> NdoppeDistribution::pmf_recursive(int x_max) const {
    if (x_max < 0) throw std::domain_error("pmf_recursive: x_max must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(x_max) + 1);
    out[0] = pmf(0);
    const double thetabar = 1.0 - theta_;
    const std::size_t r = coeffs_.size() - 1;
    for (int x = 0; x < x_max; ++x) {
        // S(x) = sum_k a_k (x+k)! = x! * sum_k a_k prod_{j=1..k}(x+j);
        // the common x! cancels in S(x+1)/S(x), leaving
        //   (x+1) * sum_k a_k prod_{j=2..k+1}(x+j) / sum_k a_k prod_{j=1..k}(x+j)
        // which stays within double range for moderate r.
        double num = 0.0, den = 0.0;
        double pn = 1.0, pd = 1.0;
        for (std::size_t k = 0; k <= r; ++k) {
            if (k > 0) {
                pd *= x + static_cast<double>(k);
                pn *= x + static_cast<double>(k) + 1.0;
            }
            num += coeffs_[k] * pn;
            den += coeffs_[k] * pd;
        }
        if (!std::isfinite(num) || !std::isfinite(den)) {
            // fall back to log-space factorial sums for extreme orders
            double ln = kNegInf, ld = kNegInf;
            for (std::size_t k = 0; k <= r; ++k) {
                if (coeffs_[k] == 0.0) continue;
                const double la = std::log(coeffs_[k]);
                ln = std::max(ln, la + std::lgamma(x + k + 2.0));
                ld = std::max(ld, la + std::lgamma(x + k + 1.0));
            }
            double sn = 0.0, sd = 0.0;
            for (std::size_t k = 0; k <= r; ++k) {
                if (coeffs_[k] == 0.0) continue;
                const double la = std::log(coeffs_[k]);
                sn += std::exp(la + std::lgamma(x + k + 2.0) - ln);
                sd += std::exp(la + std::lgamma(x + k + 1.0) - ld);
            }
            out[x + 1] = thetabar / (x + 1.0) * std::exp(ln - ld) * (sn / sd) * out[x];
            continue;
        }
        out[x + 1] = thetabar * (num / den) * out[x];
    }
    return out;
}

double NdoppeDistribution::cdf(int x) const {
    if (x < 0) throw std::domain_error("cdf: x must be >= 0");
    // NB(k+1, theta) cdf = I_theta(k+1, x+1); mix over components.
    double s = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] == 0.0) continue;
        s += weights_[k] * specfun::reg_inc_beta(theta_, k + 1.0, x + 1.0);
    }
    return std::min(s, 1.0);
}

double NdoppeDistribution::survival(int t) const {
    if (t < 0) throw std::domain_error("survival: t must be >= 0");
    if (t == 0) return 1.0;
    // P(X >= t) = 1 - cdf(t-1); evaluate as the complementary beta mix
    // directly to keep precision in the far tail.
    double s = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] == 0.0) continue;
        s += weights_[k] * specfun::reg_inc_beta(1.0 - theta_, static_cast<double>(t), k + 1.0);
    }
    return std::min(s, 1.0);
}

double NdoppeDistribution::hazard(int t) const {
    const double surv = survival(t);
    if (surv <= 0.0)
        throw std::runtime_error("hazard: survival underflowed to 0 at t = " + std::to_string(t));
    return pmf(t) / surv;
}

int NdoppeDistribution::quantile(double q) const {
    if (!(q >= 0.0 && q < 1.0))
        throw std::domain_error("quantile: q must lie in [0, 1)");
    constexpr int kScanCap = 20'000'000;
    double acc = 0.0;
    double p = pmf(0);
    const double thetabar = 1.0 - theta_;
    const std::size_t r = coeffs_.size() - 1;
    for (int x = 0; x < kScanCap; ++x) {
        acc += p;
        if (acc >= q) return x;
        double num = 0.0, den = 0.0, pn = 1.0, pd = 1.0;
        for (std::size_t k = 0; k <= r; ++k) {
            if (k > 0) {
                pd *= x + static_cast<double>(k);
                pn *= x + static_cast<double>(k) + 1.0;
            }
            num += coeffs_[k] * pn;
            den += coeffs_[k] * pd;
        }
        p *= thetabar * num / den;
    }
    throw std::runtime_error("quantile: scan cap exceeded");
}

double NdoppeDistribution::factorial_moment(int m) const {
    if (m < 1) throw std::domain_error("factorial_moment: m must be >= 1");
    const double ratio = (1.0 - theta_) / theta_;
    double s = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] == 0.0) continue;
        double rising = 1.0;  // (k+1)(k+2)...(k+m)
        for (int j = 1; j <= m; ++j) rising *= k + static_cast<double>(j);
        s += weights_[k] * rising;
    }
    return s * std::pow(ratio, m);
}

double NdoppeDistribution::raw_moment(int j) const {
    if (j < 1 || j > 4) throw std::domain_error("raw_moment: j must lie in 1..4");
    double s = 0.0;
    for (int m = 1; m <= j; ++m) s += kStirling[j][m] * factorial_moment(m);
    return s;
}

double NdoppeDistribution::mean() const { return factorial_moment(1); }

double NdoppeDistribution::variance() const {
    const double mu = mean();
    return factorial_moment(2) + mu - mu * mu;
}

double NdoppeDistribution::index_of_dispersion() const { return variance() / mean(); }

double NdoppeDistribution::mgf(double t) const {
    const double radius = -std::log1p(-theta_);
    if (!(t < radius))
        throw std::domain_error("mgf: t must be < -ln(1-theta) = " + std::to_string(radius));
    const double et = std::exp(t);
    double s = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] == 0.0) continue;
        s += weights_[k] * std::pow(theta_ / (1.0 - (1.0 - theta_) * et), k + 1.0);
    }
    return s;
}

double NdoppeDistribution::pgf(double s) const {
    const double radius = 1.0 / (1.0 - theta_);
    if (!(std::fabs(s) < radius))
        throw std::domain_error("pgf: |s| must be < 1/(1-theta) = " + std::to_string(radius));
    double acc = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] == 0.0) continue;
        acc += weights_[k] * std::pow(theta_ / (1.0 - (1.0 - theta_) * s), k + 1.0);
    }
    return acc;
}

std::complex<double> NdoppeDistribution::cf(double t) const {
    const std::complex<double> eit = std::exp(std::complex<double>(0.0, t));
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] == 0.0) continue;
        s += weights_[k] * std::pow(theta_ / (1.0 - (1.0 - theta_) * eit), k + 1.0);
    }
    return s;
}

double NdoppeDistribution::cgf(double t) const { return std::log(mgf(t)); }

double NdoppeDistribution::min_cdf(int x, int n) const {
    if (n < 1) throw std::domain_error("min_cdf: sample size must be >= 1");
    return 1.0 - std::pow(1.0 - cdf(x), n);
}

double NdoppeDistribution::max_cdf(int x, int n) const {
    if (n < 1) throw std::domain_error("max_cdf: sample size must be >= 1");
    return std::pow(cdf(x), n);
}

double stress_strength(const NdoppeDistribution& strength, const NdoppeDistribution& stress) {
    constexpr double kTailTol = 1e-12;
    constexpr int kScanCap = 20'000'000;
    // R = sum_y F_stress(y) pmf_strength(y), truncated once the strength
    // tail mass falls below kTailTol.
    double r = 0.0;
    double strength_mass = 0.0;
    double stress_cdf = 0.0;

    double p_strength = strength.pmf(0);
    double p_stress = stress.pmf(0);
    const double tb_strength = 1.0 - strength.theta();
    const double tb_stress = 1.0 - stress.theta();
    const auto& a_strength = strength.coefficients();
    const auto& a_stress = stress.coefficients();

    auto step_ratio = [](const std::vector<double>& a, int x) {
        double num = 0.0, den = 0.0, pn = 1.0, pd = 1.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k > 0) {
                pd *= x + static_cast<double>(k);
                pn *= x + static_cast<double>(k) + 1.0;
            }
            num += a[k] * pn;
            den += a[k] * pd;
        }
        return num / den;
    };

    for (int y = 0; y < kScanCap; ++y) {
        stress_cdf = std::min(stress_cdf + p_stress, 1.0);
        r += stress_cdf * p_strength;
        strength_mass += p_strength;
        if (1.0 - strength_mass < kTailTol) return std::min(r, 1.0);
        p_strength *= tb_strength * step_ratio(a_strength, y);
        p_stress *= tb_stress * step_ratio(a_stress, y);
    }
    throw std::runtime_error("stress_strength: strength tail mass did not reach the "
                             "truncation tolerance within the scan cap");
}

}  // namespace ndoppe
