#ifndef NDOPPE_COMPOUND_HPP
#define NDOPPE_COMPOUND_HPP

#include <string>
#include <variant>

#include "ndoppe/baselines.hpp"
#include "ndoppe/distribution.hpp"

namespace ndoppe {

// Claim-count (primary) laws for which only the compound density is
// implemented; their count pmfs live in other packages.
struct DiscreteLindleyPrimary {
    double lambda;  // in (0, 1)
};
struct DxGammaIPrimary {
    double p;  // in (0, 1)
};
struct DxGammaIIPrimary {
    double p;  // in (0, 1)
};

using Primary = std::variant<NdoppeDistribution, PoissonDistribution, NegBinomialDistribution,
                             DiscreteLindleyPrimary, DxGammaIPrimary, DxGammaIIPrimary>;

// Aggregate claim S = sum_{i=1}^{N} X_i with N drawn from the primary
// law and iid exponential(gamma) claim sizes.  The distribution of S is
// mixed: an atom P(S = 0) = P(N = 0) plus a continuous density on
// (0, inf), available in closed form for each supported primary.
class CompoundModel {
  public:
    CompoundModel(Primary primary, double gamma);

    const Primary& primary() const { return primary_; }
    double claim_rate() const { return gamma_; }
    std::string primary_name() const;

    double atom() const;  // P(S = 0)
    // Continuous part of the law on (0, inf); density(0) evaluates the
    // x -> 0+ limit (all six closed forms extend continuously).
    double density(double x) const;
    // Two-branch evaluation: pdf(0) returns the atom mass, pdf(x > 0)
    // the density.
    double pdf(double x) const;

    double cdf(double x) const;       // atom + integral of the density
    double survival(double x) const;  // 1 - cdf(x)

    // Closed-form moments.  Available for NDOPPE, Poisson, NegBin and
    // discrete Lindley primaries; the dxgamma moments depend on
    // constants that are not part of this package.
    double mean() const;
    double variance() const;

    // M_S(t) = M_N(ln M_X(t)); NDOPPE, Poisson and NegBin primaries only,
    // for t below the model's convergence radius (gamma*theta, gamma and
    // gamma*(1-p) respectively).
    double mgf(double t) const;

    // Stop-loss premium E[(S - d)+] = integral_d^inf P(S > x) dx,
    // evaluated by adaptive quadrature of the survival function to
    // ~1e-7 absolute accuracy.
    double stop_loss_premium(double retention) const;

    // Decay rate of the density's exponential tail; 1/rate is the
    // natural length scale for quadrature.
    double tail_rate() const;

  private:
    Primary primary_;
    double gamma_;
};

}  // namespace ndoppe

#endif
