#include "ndoppe/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ndoppe {

namespace {

constexpr std::size_t kShardSize = 1 << 14;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t shard_seed(std::uint64_t seed, std::size_t shard) {
    // one splitmix64 output per shard index, offset so shard 0 of seed s
    // and shard 1 of seed s-1 do not collide
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (shard + 1));
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

int draw_count(const NdoppeDistribution& d, Rng& rng) {
    const auto& w = d.weights();
    const double u = rng.uniform();
    std::size_t k = 0;
    double acc = 0.0;
    for (; k + 1 < w.size(); ++k) {
        acc += w[k];
        if (u < acc) break;
    }
    int n = 0;
    for (std::size_t j = 0; j <= k; ++j) n += rng.geometric(d.theta());
    return n;
}

int draw_poisson(double alpha, Rng& rng) {
    // Knuth product-of-uniforms method; exact for the modest rates the
    // sampler accepts (alpha <= 700, enforced by the caller).
    const double limit = std::exp(-alpha);
    int n = 0;
    double prod = rng.uniform();
    while (prod > limit) {
        prod *= rng.uniform();
        ++n;
    }
    return n;
}

// Validated up front so no exception can escape the parallel shard loop.
struct AggregateSampler {
    explicit AggregateSampler(const CompoundModel& m) : model(m) {
        if (const auto* po = std::get_if<PoissonDistribution>(&model.primary())) {
            if (po->alpha() > 700.0)
                throw std::invalid_argument(
                    "sample_aggregate: Poisson rate too large for exact sampling");
        } else if (const auto* nb = std::get_if<NegBinomialDistribution>(&model.primary())) {
            if (std::floor(nb->r()) != nb->r() || nb->r() > 1e6)
                throw std::invalid_argument(
                    "sample_aggregate: NegBin primary requires integer r (geometric convolution)");
        } else if (!std::holds_alternative<NdoppeDistribution>(model.primary())) {
            throw std::invalid_argument("sample_aggregate: primary '" + model.primary_name() +
                                        "' has no sampler in this package");
        }
    }

    double operator()(Rng& rng) const {
        int n = 0;
        if (const auto* d = std::get_if<NdoppeDistribution>(&model.primary())) {
            n = draw_count(*d, rng);
        } else if (const auto* po = std::get_if<PoissonDistribution>(&model.primary())) {
            n = draw_poisson(po->alpha(), rng);
        } else {
            const auto& nb = std::get<NegBinomialDistribution>(model.primary());
            const int ri = static_cast<int>(nb.r());
            for (int j = 0; j < ri; ++j) n += rng.geometric(1.0 - nb.p_fail());
        }
        double s = 0.0;
        const double gamma = model.claim_rate();
        for (int j = 0; j < n; ++j) s += rng.exponential(gamma);
        return s;
    }

    const CompoundModel& model;
};

// The output is partitioned into fixed shards; shard s is always filled
// from its own sub-seeded stream, so the result depends only on
// SimConfig — the parallel and serial drivers below produce identical
// vectors and the tests assert exactly that.
template <typename T, typename DrawOne>
void fill_shard(std::vector<T>& out, const SimConfig& cfg, const DrawOne& draw, std::size_t s) {
    Rng rng(shard_seed(cfg.seed, s));
    const std::size_t lo = s * kShardSize;
    const std::size_t hi = std::min(lo + kShardSize, cfg.replicates);
    for (std::size_t i = lo; i < hi; ++i) out[i] = draw(rng);
}

template <typename T, typename DrawOne>
std::vector<T> run_shards_parallel(const SimConfig& cfg, const DrawOne& draw) {
    if (cfg.replicates < 1)
        throw std::invalid_argument("SimConfig: replicates must be >= 1");
    std::vector<T> out(cfg.replicates);
    const std::int64_t num_shards =
        static_cast<std::int64_t>((cfg.replicates + kShardSize - 1) / kShardSize);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < num_shards; ++s)
        fill_shard(out, cfg, draw, static_cast<std::size_t>(s));
    return out;
}

template <typename T, typename DrawOne>
std::vector<T> run_shards_serial(const SimConfig& cfg, const DrawOne& draw) {
    if (cfg.replicates < 1)
        throw std::invalid_argument("SimConfig: replicates must be >= 1");
    std::vector<T> out(cfg.replicates);
    const std::size_t num_shards = (cfg.replicates + kShardSize - 1) / kShardSize;
    for (std::size_t s = 0; s < num_shards; ++s) fill_shard(out, cfg, draw, s);
    return out;
}

}  // namespace

std::string generator_id() { return "xoshiro256++ 1.0 / splitmix64 shard seeding"; }

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& si : s_) {
        si = splitmix64(x);
        x += 0x9e3779b97f4a7c15ULL;
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is invalid
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

int Rng::geometric(double theta) {
    // X = floor(ln(1-u) / ln(1-theta)), the failure count before the
    // first success; clamped so the cast stays defined even for theta
    // values far too small to sample sensibly
    const double u = uniform();
    const double x = std::log1p(-u) / std::log1p(-theta);
    return x < 2147483647.0 ? static_cast<int>(x) : 2147483646;
}

std::vector<int> sample_ndoppe(const NdoppeDistribution& d, const SimConfig& cfg) {
    return run_shards_parallel<int>(cfg, [&d](Rng& rng) { return draw_count(d, rng); });
}

std::vector<int> sample_ndoppe_serial(const NdoppeDistribution& d, const SimConfig& cfg) {
    return run_shards_serial<int>(cfg, [&d](Rng& rng) { return draw_count(d, rng); });
}

std::vector<double> sample_aggregate(const CompoundModel& m, const SimConfig& cfg) {
    return run_shards_parallel<double>(cfg, AggregateSampler{m});
}

std::vector<double> sample_aggregate_serial(const CompoundModel& m, const SimConfig& cfg) {
    return run_shards_serial<double>(cfg, AggregateSampler{m});
}

namespace {

template <typename T>
SampleSummary summarize_impl(const std::vector<T>& xs) {
    SampleSummary s;
    s.n = xs.size();
    if (s.n == 0) return s;
    double sum = 0.0;
    std::size_t zeros = 0;
    for (const T v : xs) {
        sum += static_cast<double>(v);
        if (v == T{}) ++zeros;
    }
    s.mean = sum / static_cast<double>(s.n);
    double m2 = 0.0, m4 = 0.0;
    for (const T v : xs) {
        const double d = static_cast<double>(v) - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    s.variance = s.n > 1 ? m2 / static_cast<double>(s.n - 1) : 0.0;
    s.fourth_central = m4 / static_cast<double>(s.n);
    s.zero_share = static_cast<double>(zeros) / static_cast<double>(s.n);
    return s;
}

}  // namespace

SampleSummary summarize(const std::vector<double>& xs) { return summarize_impl(xs); }
SampleSummary summarize(const std::vector<int>& xs) { return summarize_impl(xs); }

}  // namespace ndoppe
