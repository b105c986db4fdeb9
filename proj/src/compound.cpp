#include "ndoppe/compound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ndoppe/quadrature.hpp"
#include "ndoppe/specfun.hpp"

namespace ndoppe {

namespace {

void check_unit_interval(double v, const char* name) {
    if (!(v > 0.0) || !(v < 1.0))
        throw std::invalid_argument(std::string("CompoundModel: ") + name +
                                    " must lie in (0, 1), got " + std::to_string(v));
}

// x > 0 density of the compound NDOPPE model,
//   f(x) = gamma (1-th) e^{-gamma x} sum_k a_k G(k+2) 1F1(k+2; 2; gamma (1-th) x) / D(th)
// evaluated per mixture component through log-scaled 1F1 so the
// e^{-gamma x} * 1F1 product never overflows or cancels.
double ndoppe_density(const NdoppeDistribution& d, double gamma, double x) {
    const double th = d.theta();
    const double thetabar = 1.0 - th;
    const double z = gamma * thetabar * x;
    const double base = std::log(gamma) + std::log(thetabar) - gamma * x;
    const double log_th = std::log(th);
    double s = 0.0;
    const auto& w = d.weights();
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0.0) continue;
        const double lf = base + std::log1p(static_cast<double>(k)) + (k + 1.0) * log_th +
                          specfun::log_hyp1f1(k + 2.0, 2.0, z);
        s += w[k] * std::exp(lf);
    }
    return s;
}

double negbin_density(const NegBinomialDistribution& nb, double gamma, double x) {
    const double r = nb.r();
    const double p = nb.p_fail();
    const double lf = std::log(gamma) + std::log(r) + r * std::log1p(-p) + std::log(p) -
                      gamma * x + specfun::log_hyp1f1(1.0 + r, 2.0, gamma * p * x);
    return std::exp(lf);
}

double poisson_density(const PoissonDistribution& po, double gamma, double x) {
    const double a = po.alpha();
    // sqrt(ga/x) I_1(2 sqrt(gax)) -> ga as x -> 0
    if (x == 0.0) return gamma * a * std::exp(-a);
    const double lf = 0.5 * std::log(gamma * a / x) + specfun::log_bessel_i1(2.0 * std::sqrt(gamma * a * x)) -
                      (a + gamma * x);
    return std::exp(lf);
}

double dlindley_density(const DiscreteLindleyPrimary& dl, double gamma, double x) {
    const double lam = dl.lambda;
    const double L = std::log(lam);
    const double poly = (1.0 - lam) + (lam * lam * gamma * x + lam * (3.0 - gamma * x) - 2.0) * L;
    return gamma * lam * poly / (1.0 - L) * std::exp(-gamma * (1.0 - lam) * x);
}

// Compound dxgamma-I.  The constant coefficient is (1-p) - (2-3p) ln p
// + (1-4p) (ln p)^2 / 2; with a leading 1 instead of (1-p) the total
// mass comes out above 1, so the (1-p) form is the one used here (it is
// also what the survival-discretized xgamma pmf yields when convolved
// with the exponential).
double dxgamma1_density(const DxGammaIPrimary& dx, double gamma, double x) {
    const double p = dx.p;
    const double L = std::log(p);
    const double u = gamma * p * x;
    const double c0 = (1.0 - p) - (2.0 - 3.0 * p) * L + 0.5 * (1.0 - 4.0 * p) * L * L;
    const double c1 = L * (p - 1.0) + 0.5 * (3.0 - 5.0 * p) * L * L;
    const double c2 = 0.5 * (1.0 - p) * L * L;
    return gamma * p / (1.0 - L) * (c0 + c1 * u + c2 * u * u) *
           std::exp(-gamma * (1.0 - p) * x);
}

double dxgamma2_density(const DxGammaIIPrimary& dx, double gamma, double x) {
    const double p = dx.p;
    const double L = std::log(p);
    const double u = gamma * p * x;
    const double norm = 2.0 * (1.0 - p) * (1.0 - p) - p * (1.0 + p) * L;
    return 2.0 * std::pow(1.0 - p, 3) * gamma * p / norm *
           (1.0 - 0.5 * L - 1.5 * L * u - 0.5 * L * u * u) *
           std::exp(-gamma * (1.0 - p) * x);
}

}  // namespace

CompoundModel::CompoundModel(Primary primary, double gamma)
    : primary_(std::move(primary)), gamma_(gamma) {
    if (!(gamma_ > 0.0))
        throw std::invalid_argument("CompoundModel: claim rate gamma must be > 0, got " +
                                    std::to_string(gamma));
    if (const auto* dl = std::get_if<DiscreteLindleyPrimary>(&primary_))
        check_unit_interval(dl->lambda, "lambda");
    if (const auto* dx = std::get_if<DxGammaIPrimary>(&primary_)) check_unit_interval(dx->p, "p");
    if (const auto* dx = std::get_if<DxGammaIIPrimary>(&primary_)) check_unit_interval(dx->p, "p");
}

std::string CompoundModel::primary_name() const {
    struct Visitor {
        std::string operator()(const NdoppeDistribution&) const { return "ndoppe"; }
        std::string operator()(const PoissonDistribution&) const { return "poisson"; }
        std::string operator()(const NegBinomialDistribution&) const { return "negbin"; }
        std::string operator()(const DiscreteLindleyPrimary&) const { return "dlindley"; }
        std::string operator()(const DxGammaIPrimary&) const { return "dxgamma1"; }
        std::string operator()(const DxGammaIIPrimary&) const { return "dxgamma2"; }
    };
    return std::visit(Visitor{}, primary_);
}

double CompoundModel::atom() const {
    struct Visitor {
        double operator()(const NdoppeDistribution& d) const { return d.pmf(0); }
        double operator()(const PoissonDistribution& po) const { return std::exp(-po.alpha()); }
        double operator()(const NegBinomialDistribution& nb) const {
            return std::pow(1.0 - nb.p_fail(), nb.r());
        }
        double operator()(const DiscreteLindleyPrimary& dl) const {
            const double L = std::log(dl.lambda);
            return (1.0 - dl.lambda + (2.0 * dl.lambda - 1.0) * L) / (1.0 - L);
        }
        double operator()(const DxGammaIPrimary& dx) const {
            const double L = std::log(dx.p);
            return (1.0 - L - dx.p * (1.0 - 2.0 * L + 0.5 * L * L)) / (1.0 - L);
        }
        double operator()(const DxGammaIIPrimary& dx) const {
            const double L = std::log(dx.p);
            return 2.0 * std::pow(1.0 - dx.p, 3) /
                   (2.0 * (1.0 - dx.p) * (1.0 - dx.p) - dx.p * (1.0 + dx.p) * L);
        }
    };
    return std::visit(Visitor{}, primary_);
}

double CompoundModel::density(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("CompoundModel::density: requires x >= 0");
    struct Visitor {
        double gamma;
        double x;
        double operator()(const NdoppeDistribution& d) const { return ndoppe_density(d, gamma, x); }
        double operator()(const PoissonDistribution& po) const { return poisson_density(po, gamma, x); }
        double operator()(const NegBinomialDistribution& nb) const { return negbin_density(nb, gamma, x); }
        double operator()(const DiscreteLindleyPrimary& dl) const { return dlindley_density(dl, gamma, x); }
        double operator()(const DxGammaIPrimary& dx) const { return dxgamma1_density(dx, gamma, x); }
        double operator()(const DxGammaIIPrimary& dx) const { return dxgamma2_density(dx, gamma, x); }
    };
    return std::visit(Visitor{gamma_, x}, primary_);
}

double CompoundModel::pdf(double x) const {
    if (x < 0.0) throw std::domain_error("CompoundModel::pdf: requires x >= 0");
    return x == 0.0 ? atom() : density(x);
}

double CompoundModel::tail_rate() const {
    struct Visitor {
        double gamma;
        double operator()(const NdoppeDistribution& d) const { return gamma * d.theta(); }
        double operator()(const PoissonDistribution&) const { return gamma; }
        double operator()(const NegBinomialDistribution& nb) const {
            return gamma * (1.0 - nb.p_fail());
        }
        double operator()(const DiscreteLindleyPrimary& dl) const { return gamma * (1.0 - dl.lambda); }
        double operator()(const DxGammaIPrimary& dx) const { return gamma * (1.0 - dx.p); }
        double operator()(const DxGammaIIPrimary& dx) const { return gamma * (1.0 - dx.p); }
    };
    return std::visit(Visitor{gamma_}, primary_);
}

double CompoundModel::cdf(double x) const {
    if (x < 0.0) throw std::domain_error("CompoundModel::cdf: requires x >= 0");
    if (x == 0.0) return atom();
    const double integral =
        quad::adaptive_simpson([this](double u) { return density(u); }, 0.0, x, 1e-10);
    return std::min(atom() + integral, 1.0);
}

double CompoundModel::survival(double x) const { return 1.0 - cdf(x); }

double CompoundModel::mean() const {
    struct Visitor {
        double gamma;
        double operator()(const NdoppeDistribution& d) const {
            // (thetabar/theta) sum_k a_k G(k+2)/th^(k+1) / (gamma D)
            //  = E(N)/gamma with E(N) the mixture mean.
            return d.mean() / gamma;
        }
        double operator()(const PoissonDistribution& po) const { return po.alpha() / gamma; }
        double operator()(const NegBinomialDistribution& nb) const {
            const double p = nb.p_fail();
            return nb.r() * p / (gamma * (1.0 - p));
        }
        double operator()(const DiscreteLindleyPrimary& dl) const {
            const double lam = dl.lambda;
            const double L = std::log(lam);
            return lam * (1.0 - lam + (lam - 2.0) * L) /
                   (gamma * (1.0 - lam) * (1.0 - lam) * (1.0 - L));
        }
        double operator()(const DxGammaIPrimary&) const {
            throw std::runtime_error(
                "CompoundModel::mean: not available for the dxgamma-I primary");
        }
        double operator()(const DxGammaIIPrimary&) const {
            throw std::runtime_error(
                "CompoundModel::mean: not available for the dxgamma-II primary");
        }
    };
    return std::visit(Visitor{gamma_}, primary_);
}

double CompoundModel::variance() const {
    struct Visitor {
        double gamma;
        double operator()(const NdoppeDistribution& d) const {
            // Printed closed form: (1/g^2) [ mu_(2) - mu_(1)(mu_(1) - 2) ]
            // with mu_(m) the m-th factorial moment of N; identical to
            // (E(N) + Var(N))/g^2.
            const double m1 = d.factorial_moment(1);
            const double m2 = d.factorial_moment(2);
            return (m2 - m1 * (m1 - 2.0)) / (gamma * gamma);
        }
        double operator()(const PoissonDistribution& po) const {
            return 2.0 * po.alpha() / (gamma * gamma);
        }
        double operator()(const NegBinomialDistribution& nb) const {
            const double p = nb.p_fail();
            const double q = 1.0 - p;
            return nb.r() * p * (2.0 - p) / (gamma * gamma * q * q);
        }
        double operator()(const DiscreteLindleyPrimary& dl) const {
            const double lam = dl.lambda;
            const double L = std::log(lam);
            const double q = 1.0 - lam;
            const double bracket = q * q * (1.0 - L) * (1.0 - lam + (lam - 2.0) * L) + q * q -
                                   (3.0 - 4.0 * lam + lam * lam) * L +
                                   (2.0 - 3.0 * lam) * L * L;
            return lam * bracket / (gamma * gamma * q * q * q * q * (1.0 - L) * (1.0 - L));
        }
        double operator()(const DxGammaIPrimary&) const {
            throw std::runtime_error(
                "CompoundModel::variance: not available for the dxgamma-I primary");
        }
        double operator()(const DxGammaIIPrimary&) const {
            throw std::runtime_error(
                "CompoundModel::variance: not available for the dxgamma-II primary");
        }
    };
    return std::visit(Visitor{gamma_}, primary_);
}

double CompoundModel::mgf(double t) const {
    struct Visitor {
        double gamma;
        double t;
        double operator()(const NdoppeDistribution& d) const {
            const double radius = gamma * d.theta();
            if (!(t < radius))
                throw std::domain_error("compound mgf: requires t < gamma*theta = " +
                                        std::to_string(radius));
            // M_N(ln M_X(t)) with M_X(t) = (1 - t/gamma)^-1.
            const double mx = 1.0 / (1.0 - t / gamma);
            return d.pgf(mx);
        }
        double operator()(const PoissonDistribution& po) const {
            if (!(t < gamma))
                throw std::domain_error("compound mgf: requires t < gamma = " +
                                        std::to_string(gamma));
            const double mx = 1.0 / (1.0 - t / gamma);
            return std::exp(po.alpha() * (mx - 1.0));
        }
        double operator()(const NegBinomialDistribution& nb) const {
            const double radius = gamma * (1.0 - nb.p_fail());
            if (!(t < radius))
                throw std::domain_error("compound mgf: requires t < gamma*(1-p) = " +
                                        std::to_string(radius));
            const double mx = 1.0 / (1.0 - t / gamma);
            return std::pow(1.0 - nb.p_fail(), nb.r()) *
                   std::pow(1.0 - nb.p_fail() * mx, -nb.r());
        }
        double operator()(const DiscreteLindleyPrimary&) const {
            throw std::runtime_error("compound mgf: not available for the dlindley primary");
        }
        double operator()(const DxGammaIPrimary&) const {
            throw std::runtime_error("compound mgf: not available for the dxgamma-I primary");
        }
        double operator()(const DxGammaIIPrimary&) const {
            throw std::runtime_error("compound mgf: not available for the dxgamma-II primary");
        }
    };
    return std::visit(Visitor{gamma_, t}, primary_);
}

double CompoundModel::stop_loss_premium(double retention) const {
    if (!(retention >= 0.0))
        throw std::domain_error("stop_loss_premium: retention must be >= 0");
    const double scale = 1.0 / tail_rate();
    // E[(S-d)+] = integral_d^inf P(S > x) dx; the survival factor is the
    // atom-plus-density cdf complement, itself a quadrature.
    const double a0 = atom();
    auto upper_mass = [this, a0](double x) {
        if (x <= 0.0) return 1.0 - a0;
        const double integral =
            quad::adaptive_simpson([this](double u) { return density(u); }, 0.0, x, 1e-10);
        return std::max(1.0 - a0 - integral, 0.0);
    };
    return quad::integrate_to_infinity(upper_mass, retention, scale, 1e-7);
}

}  // namespace ndoppe
