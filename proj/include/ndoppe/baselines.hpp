#ifndef NDOPPE_BASELINES_HPP
#define NDOPPE_BASELINES_HPP

namespace ndoppe {

// Poisson(alpha) count model.
class PoissonDistribution {
  public:
    explicit PoissonDistribution(double alpha);
    double alpha() const { return alpha_; }
    double pmf(int x) const;
    double log_pmf(int x) const;
    double mean() const { return alpha_; }
    double variance() const { return alpha_; }

  private:
    double alpha_;
};

// Negative binomial with a real-valued number of successes r and failure
// probability p per trial:  pmf(x) = Gamma(x+r)/(Gamma(r) x!) (1-p)^r p^x.
// With integer r this coincides with the one-hot NDOPPE component
// NB(r, theta = 1-p).
class NegBinomialDistribution {
  public:
    NegBinomialDistribution(double r, double p_fail);
    double r() const { return r_; }
    double p_fail() const { return p_; }
    double pmf(int x) const;
    double log_pmf(int x) const;
    double mean() const { return r_ * p_ / (1.0 - p_); }
    double variance() const { return r_ * p_ / ((1.0 - p_) * (1.0 - p_)); }

  private:
    double r_;
    double p_;
};

}  // namespace ndoppe

#endif
