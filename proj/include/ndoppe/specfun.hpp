#ifndef NDOPPE_SPECFUN_HPP
#define NDOPPE_SPECFUN_HPP

namespace ndoppe {
namespace specfun {

// Convergence knobs shared by the series / continued-fraction kernels.
struct Accuracy {
    double rel_tol = 1e-12;  // relative error target per evaluation
    int max_terms = 10000;   // hard cap on series / CF iterations
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Regularized incomplete beta I_p(m, n) = B(p; m, n) / B(m, n),
// 0 <= p <= 1, m > 0, n > 0.  Continued-fraction evaluation (modified
// Lentz), switching to the symmetric tail for p > (m+1)/(m+n+2).
double reg_inc_beta(double p, double m, double n, const Accuracy& acc = {});

// Kummer confluent hypergeometric 1F1(a; b; z) for a > 0, b > 0, z >= 0.
// All series terms are positive in this domain, so the direct series is
// stable for every z; evaluation switches to nothing, it only rescales
// internally to avoid overflow.  Throws std::overflow_error when the
// value itself exceeds double range; use log_hyp1f1 there.
double hyp1f1(double a, double b, double z, const Accuracy& acc = {});

// ln 1F1(a; b; z), valid for arbitrarily large z (the series is summed
// with periodic rescaling, so e.g. z ~ 1e5 is fine).
double log_hyp1f1(double a, double b, double z, const Accuracy& acc = {});

// Modified Bessel function of the first kind I_1(z), z >= 0, by the
// ascending series (positive terms, no cancellation).  Overflows for
// z > ~709; use log_bessel_i1 there.
double bessel_i1(double z, const Accuracy& acc = {});

// ln I_1(z); series below z = 700, asymptotic expansion above (the
// switchover point keeps both branches at < 1e-12 relative error).
double log_bessel_i1(double z, const Accuracy& acc = {});

}  // namespace specfun
}  // namespace ndoppe

#endif
