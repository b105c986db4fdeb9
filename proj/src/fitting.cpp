#include "ndoppe/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ndoppe {

namespace {

constexpr double kThetaEps = 1e-12;

template <typename Dist>
std::vector<double> fitted_counts(const CountDataset& data, const Dist& d) {
    std::vector<double> out;
    out.reserve(data.cells().size());
    for (const auto& cell : data.cells())
        out.push_back(static_cast<double>(data.total()) * d.pmf(cell.count));
    return out;
}

template <typename Dist>
double nll_impl(const CountDataset& data, const Dist& d) {
    double s = 0.0;
    for (const auto& cell : data.cells()) {
        if (cell.frequency == 0) continue;
        s -= static_cast<double>(cell.frequency) * d.log_pmf(cell.count);
    }
    return s;
}

double ndoppe_nll(const CountDataset& data, const NdoppeDistribution& d) {
    double s = 0.0;
    for (const auto& cell : data.cells()) {
        if (cell.frequency == 0) continue;
        s -= static_cast<double>(cell.frequency) * std::log(d.pmf(cell.count));
    }
    return s;
}

double negbin_profile_nll(const CountDataset& data, double r, double xbar) {
    const double p = xbar / (r + xbar);
    return nll_impl(data, NegBinomialDistribution(r, p));
}

}  // namespace

CountDataset::CountDataset(std::vector<CountCell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("CountDataset: no cells");
    std::sort(cells_.begin(), cells_.end(),
              [](const CountCell& a, const CountCell& b) { return a.count < b.count; });
    int prev = -1;
    for (const auto& c : cells_) {
        if (c.count < 0) throw std::invalid_argument("CountDataset: negative count value");
        if (c.count == prev)
            throw std::invalid_argument("CountDataset: duplicate count value " +
                                        std::to_string(c.count));
        if (c.frequency < 0)
            throw std::invalid_argument("CountDataset: negative frequency at count " +
                                        std::to_string(c.count));
        prev = c.count;
        total_ += c.frequency;
    }
    if (total_ < 1) throw std::invalid_argument("CountDataset: total frequency must be >= 1");
}

double CountDataset::sample_mean() const {
    double s = 0.0;
    for (const auto& c : cells_) s += static_cast<double>(c.count) * static_cast<double>(c.frequency);
    return s / static_cast<double>(total_);
}

double chi_square(const CountDataset& data, const std::vector<double>& fitted) {
    if (fitted.size() != data.cells().size())
        throw std::invalid_argument("chi_square: fitted counts do not match dataset cells");
    double s = 0.0;
    for (std::size_t i = 0; i < fitted.size(); ++i) {
        const double e = fitted[i];
        if (!(e > 0.0)) throw std::invalid_argument("chi_square: nonpositive expected count");
        const double d = static_cast<double>(data.cells()[i].frequency) - e;
        s += d * d / e;
    }
    return s;
}

double neg_log_likelihood(const CountDataset& data, const NdoppeDistribution& d) {
    return ndoppe_nll(data, d);
}
double neg_log_likelihood(const CountDataset& data, const PoissonDistribution& d) {
    return nll_impl(data, d);
}
double neg_log_likelihood(const CountDataset& data, const NegBinomialDistribution& d) {
    return nll_impl(data, d);
}

FitResult fit_ndoppe(const CountDataset& data, const std::vector<double>& coeffs) {
    const double xbar = data.sample_mean();
    if (!(xbar > 0.0))
        throw std::invalid_argument("fit_ndoppe: sample mean must be > 0 (all-zero data)");

    auto mean_at = [&coeffs](double th) { return NdoppeDistribution(coeffs, th).mean(); };

    double lo = kThetaEps, hi = 1.0 - kThetaEps;
    if (mean_at(lo) < xbar)
        throw std::runtime_error("fit_ndoppe: sample mean exceeds the family's attainable mean");
    // mean(theta) is strictly decreasing: mean(lo) > xbar > mean(hi) ~ 0.
    // Bisect down to a few ulps so the score residual is at noise level.
    for (int it = 0; it < 300 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi;
         ++it) {
        const double mid = 0.5 * (lo + hi);
        (mean_at(mid) > xbar ? lo : hi) = mid;
    }
    const double theta = 0.5 * (lo + hi);
    NdoppeDistribution d(coeffs, theta);
    if (std::fabs(d.mean() - xbar) > 1e-12 * std::max(1.0, xbar))
        throw std::runtime_error("fit_ndoppe: moment equation residual above tolerance");

    FitResult res;
    res.model = "ndoppe";
    res.params["theta"] = theta;
    res.coeffs = coeffs;
    res.fitted = fitted_counts(data, d);
    res.nll = ndoppe_nll(data, d);
    res.chi_sq = chi_square(data, res.fitted);
    return res;
}

FitResult fit_poisson(const CountDataset& data) {
    const double xbar = data.sample_mean();
    PoissonDistribution d(xbar);  // rejects xbar = 0
    FitResult res;
    res.model = "poisson";
    res.params["alpha"] = xbar;
    res.fitted = fitted_counts(data, d);
    res.nll = nll_impl(data, d);
    res.chi_sq = chi_square(data, res.fitted);
    return res;
}

FitResult fit_negbin(const CountDataset& data, std::optional<double> fixed_r) {
    const double xbar = data.sample_mean();
    if (!(xbar > 0.0))
        throw std::invalid_argument("fit_negbin: sample mean must be > 0 (all-zero data)");

    FitResult res;
    res.model = "negbin";
    double r_hat;
    if (fixed_r) {
        if (!(*fixed_r > 0.0)) throw std::invalid_argument("fit_negbin: fixed r must be > 0");
        r_hat = *fixed_r;
    } else {
        // golden-section minimization of the profile NLL on ln r
        constexpr double kInvPhi = 0.6180339887498949;
        double a = -10.0, b = 10.0;
        double c = b - kInvPhi * (b - a);
        double d2 = a + kInvPhi * (b - a);
        double fc = negbin_profile_nll(data, std::exp(c), xbar);
        double fd = negbin_profile_nll(data, std::exp(d2), xbar);
        double f_last = std::numeric_limits<double>::infinity();
        while (b - a > 1e-12) {
            if (fc < fd) {
                b = d2;
                d2 = c;
                fd = fc;
                c = b - kInvPhi * (b - a);
                fc = negbin_profile_nll(data, std::exp(c), xbar);
            } else {
                a = c;
                c = d2;
                fc = fd;
                d2 = a + kInvPhi * (b - a);
                fd = negbin_profile_nll(data, std::exp(d2), xbar);
            }
            const double f_best = std::min(fc, fd);
            if (std::fabs(f_last - f_best) < 1e-10 && b - a < 1e-6) break;
            f_last = f_best;
        }
        const double log_r = 0.5 * (a + b);
        r_hat = std::exp(log_r);
        if (log_r > 10.0 - 1e-3 || log_r < -10.0 + 1e-3)
            res.warnings.push_back(
                "negbin: r estimate at the search bound; data may be equi-dispersed "
                "(Poisson limit)");
    }
    const double p_hat = xbar / (r_hat + xbar);
    NegBinomialDistribution d(r_hat, p_hat);
    res.params["r"] = r_hat;
    res.params["p"] = p_hat;
    res.fitted = fitted_counts(data, d);
    res.nll = nll_impl(data, d);
    res.chi_sq = chi_square(data, res.fitted);
    return res;
}

double ndoppe_score(const CountDataset& data, const std::vector<double>& coeffs, double theta) {
    // h'(theta)/h(theta) = sum_k a_k k! (k+1) theta^-(k+2) / D(theta)
    NdoppeDistribution d(coeffs, theta);
    double hratio = 0.0;
    const auto& w = d.weights();
    for (std::size_t k = 0; k < w.size(); ++k) hratio += w[k] * (k + 1.0) / theta;
    double sum_x = 0.0;
    for (const auto& c : data.cells())
        sum_x += static_cast<double>(c.count) * static_cast<double>(c.frequency);
    const double n = static_cast<double>(data.total());
    return n * hratio - sum_x / (1.0 - theta);
}

}  // namespace ndoppe
