#pragma once

#include <cstdint>
#include <vector>

#include "xtropy/distributions.hpp"
#include "xtropy/weights.hpp"

namespace xtropy {

/// Identifies a reproducible random stream. Identical (seed, stream) gives
/// an identical draw sequence on every platform and worker count.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Counter-based generator: draw k of a stream is a pure function of
/// (seed, stream, k), so draws can be partitioned across workers without
/// any shared state.
class CounterRng {
public:
    explicit CounterRng(RngSpec spec);

    std::uint64_t bits(std::uint64_t counter) const;
    /// Uniform on the open interval (0,1).
    double uniform(std::uint64_t counter) const;
    /// Independent derived stream.
    CounterRng split(std::uint64_t substream) const;

private:
    CounterRng(std::uint64_t key) : key_(key) {}
    std::uint64_t key_;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long n_draws = 0;
    /// Set when a product factor's |mean| < 2 standard errors.
    bool sign_indeterminate = false;
};

/// One RSS cycle: draw n^2 units by inverse transform, rank within the n
/// sets of n, keep the i-th order statistic of the i-th set.
std::vector<double> sample_rss(const DistPtr& dist, int n, RngSpec rng);

/// -1/2 mean of Lambda(U_k) over n_draws uniform draws.
McEstimate mc_general_weighted_extropy(const DistPtr& dist, const WeightFunction& w,
                                       long n_draws, RngSpec rng);

/// Product-formula estimate: each factor E(Lambda(B_{2i-1:2n-1})) by beta
/// draws (order statistics of uniforms) on its own substream; product
/// scaled by -Q_n/2 with a delta-method standard error.
McEstimate mc_rss_extropy(const DistPtr& dist, const WeightFunction& w, int n,
                          long n_draws, RngSpec rng);

}  // namespace xtropy
