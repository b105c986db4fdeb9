#ifndef NDOPPE_SIMULATE_HPP
#define NDOPPE_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ndoppe/compound.hpp"
#include "ndoppe/distribution.hpp"

namespace ndoppe {

struct SimConfig {
    std::uint64_t seed = 0;
    std::size_t replicates = 1;
};

// Name and revision of the generator scheme, for embedding in output
// metadata so sampled numbers stay reproducible across releases.
std::string generator_id();

// xoshiro256++ engine, seeded through a splitmix64 expansion.  Draws are
// produced in fixed-size shards; shard s derives its own sub-seed from
// (seed, s), so the output is a pure function of SimConfig no matter how
// many threads execute the shards.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next_u64();
    double uniform();                // in [0, 1)
    double exponential(double rate);
    int geometric(double theta);     // failures before first success

  private:
    std::uint64_t s_[4];
};

// Counts from the negative binomial mixture: pick a component by its
// weight, then sum k+1 geometric(theta) draws.
std::vector<int> sample_ndoppe(const NdoppeDistribution& d, const SimConfig& cfg);
std::vector<int> sample_ndoppe_serial(const NdoppeDistribution& d, const SimConfig& cfg);

// Aggregate claims: draw N from the primary, then sum N exponential
// claim sizes (0 when N = 0).  Supported primaries: NDOPPE, Poisson,
// and NegBin with integer r (sampled as a geometric convolution);
// throws for the others, whose count laws are not part of this package.
std::vector<double> sample_aggregate(const CompoundModel& m, const SimConfig& cfg);
std::vector<double> sample_aggregate_serial(const CompoundModel& m, const SimConfig& cfg);

// Summary statistics used by the CLI and the Monte-Carlo checks.
struct SampleSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;        // unbiased
    double fourth_central = 0.0;  // central sample moment, for var SE
    double zero_share = 0.0;      // fraction of exact zeros
};
SampleSummary summarize(const std::vector<double>& xs);
SampleSummary summarize(const std::vector<int>& xs);

}  // namespace ndoppe

#endif
