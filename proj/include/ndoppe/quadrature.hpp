#ifndef NDOPPE_QUADRATURE_HPP
#define NDOPPE_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>

namespace ndoppe {
namespace quad {

namespace detail {

inline double simpson_step(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive(const F& f, double a, double fa, double b, double fb, double m, double fm,
                double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_step(a, m, fa, flm, fm);
    const double right = simpson_step(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw std::runtime_error("adaptive_simpson: max recursion depth reached");
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, int max_depth = 48) {
    if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: requires b >= a");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = detail::simpson_step(a, b, fa, fm, fb);
    return detail::adaptive(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

// Integrate f over [a, infinity) for an integrand that eventually decays
// at least exponentially with rate ~1/scale.  Consecutive segments of
// geometrically growing length are added until two in a row contribute
// less than tol.
template <typename F>
double integrate_to_infinity(const F& f, double a, double scale, double tol, int max_segments = 64) {
    if (!(scale > 0.0)) throw std::invalid_argument("integrate_to_infinity: scale must be > 0");
    double total = 0.0;
    double lo = a;
    double len = 8.0 * scale;
    int quiet = 0;
    for (int seg = 0; seg < max_segments; ++seg) {
        const double hi = lo + len;
        const double part = adaptive_simpson(f, lo, hi, tol * 0.25);
        total += part;
        quiet = (std::fabs(part) < tol * 0.5) ? quiet + 1 : 0;
        if (quiet >= 2) return total;
        lo = hi;
        len *= 1.6;
    }
    throw std::runtime_error("integrate_to_infinity: tail did not become negligible");
}

}  // namespace quad
}  // namespace ndoppe

#endif
