#include "xtropy/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "xtropy/extropy.hpp"
#include "xtropy/rss.hpp"

namespace xtropy {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr long kBlock = 1 << 16;

// Deterministic block-parallel reduction: each block's partial sums depend
// only on the counter range, and blocks are combined in index order, so the
// result is identical for any worker count.
template <typename BlockFn>
void run_blocks(long n_items, const BlockFn& fn) {
    const long blocks = (n_items + kBlock - 1) / kBlock;
    const int threads = std::min<long>(worker_count(), blocks);
    if (threads <= 1) {
        for (long b = 0; b < blocks; ++b) fn(b, b * kBlock, std::min(n_items, (b + 1) * kBlock));
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (long b = next.fetch_add(1); b < blocks; b = next.fetch_add(1))
                fn(b, b * kBlock, std::min(n_items, (b + 1) * kBlock));
        });
    for (auto& th : pool) th.join();
}

}  // namespace

CounterRng::CounterRng(RngSpec spec)
    : key_(mix64(mix64(spec.seed + kGolden) ^ (spec.stream * 0xC2B2AE3D27D4EB4FULL + 1))) {}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
    return mix64(key_ + (counter + 1) * kGolden);
}

double CounterRng::uniform(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

CounterRng CounterRng::split(std::uint64_t substream) const {
    return CounterRng(mix64(key_ ^ ((substream + 1) * 0x632BE59BD9B4E019ULL)));
}

std::vector<double> sample_rss(const DistPtr& dist, int n, RngSpec rng) {
    if (n < 1) throw InvalidParameter("sample_rss requires n >= 1");
    const CounterRng gen(rng);
    std::vector<double> out(n);
    std::vector<double> set(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            set[j] = dist->quantile(gen.uniform(static_cast<std::uint64_t>(i) * n + j));
        std::sort(set.begin(), set.end());
        out[i] = set[i];  // i-th order statistic of the i-th set
    }
    return out;
}

McEstimate mc_general_weighted_extropy(const DistPtr& dist, const WeightFunction& w,
                                       long n_draws, RngSpec rng) {
    if (n_draws < 100) throw InvalidParameter("mc estimate requires n_draws >= 100");
    LambdaProfile lambda(dist, w);
    const CounterRng gen(rng);

    const long blocks = (n_draws + kBlock - 1) / kBlock;
    std::vector<double> sum(blocks, 0.0), sumsq(blocks, 0.0);
    std::atomic<bool> bad{false};
    run_blocks(n_draws, [&](long b, long lo, long hi) {
        double s = 0.0, s2 = 0.0;
        for (long k = lo; k < hi; ++k) {
            const double y = -0.5 * lambda(gen.uniform(static_cast<std::uint64_t>(k)));
            if (!std::isfinite(y)) {
                bad.store(true);
                return;
            }
            s += y;
            s2 += y * y;
        }
        sum[b] = s;
        sumsq[b] = s2;
    });
    if (bad.load())
        throw Error("non-finite Lambda draw for " + dist->spec() + ", weight " + w.spec());

    double s = 0.0, s2 = 0.0;
    for (long b = 0; b < blocks; ++b) {
        s += sum[b];
        s2 += sumsq[b];
    }
    const double mean = s / n_draws;
    const double var = std::max(0.0, s2 / n_draws - mean * mean);
    return McEstimate{mean, std::sqrt(var / n_draws), n_draws, false};
}

McEstimate mc_rss_extropy(const DistPtr& dist, const WeightFunction& w, int n,
                          long n_draws, RngSpec rng) {
    if (n < 1) throw InvalidParameter("mc rss extropy requires n >= 1");
    if (n_draws < 100) throw InvalidParameter("mc estimate requires n_draws >= 100");

    LambdaProfile lambda(dist, w);
    const CounterRng base(rng);
    const RssCoefficients coef = rss_coefficients(n);
    const int m = 2 * n - 1;
    if (m > 64) throw InvalidParameter("mc rss extropy supports n <= 32");

    std::vector<double> mean(n), se(n);
    bool indeterminate = false;
    for (int i = 1; i <= n; ++i) {
        const CounterRng gen = base.split(static_cast<std::uint64_t>(i));
        const long blocks = (n_draws + kBlock - 1) / kBlock;
        std::vector<double> sum(blocks, 0.0), sumsq(blocks, 0.0);
        std::atomic<bool> bad{false};
        run_blocks(n_draws, [&](long b, long lo, long hi) {
            double s = 0.0, s2 = 0.0;
            double uv[64];
            for (long k = lo; k < hi; ++k) {
                const std::uint64_t c0 = static_cast<std::uint64_t>(k) * m;
                for (int j = 0; j < m; ++j) uv[j] = gen.uniform(c0 + j);
                // (2i-1)-th order statistic of 2n-1 uniforms ~ B_{2i-1:2n-1}
                std::nth_element(uv, uv + (2 * i - 2), uv + m);
                const double y = lambda(uv[2 * i - 2]);
                if (!std::isfinite(y)) {
                    bad.store(true);
                    return;
                }
                s += y;
                s2 += y * y;
            }
            sum[b] = s;
            sumsq[b] = s2;
        });
        if (bad.load())
            throw Error("non-finite Lambda draw for " + dist->spec() + ", weight " + w.spec());
        double s = 0.0, s2 = 0.0;
        for (long b = 0; b < blocks; ++b) {
            s += sum[b];
            s2 += sumsq[b];
        }
        mean[i - 1] = s / n_draws;
        const double var = std::max(0.0, s2 / n_draws - mean[i - 1] * mean[i - 1]);
        se[i - 1] = std::sqrt(var / n_draws);
        if (std::abs(mean[i - 1]) < 2.0 * se[i - 1]) indeterminate = true;
    }

    // Product through log of absolutes with sign tracking.
    double log_abs = 0.0;
    int sign = 1;
    bool zero = false;
    for (int i = 0; i < n; ++i) {
        if (mean[i] == 0.0) {
            zero = true;
        } else {
            log_abs += std::log(std::abs(mean[i]));
            if (mean[i] < 0.0) sign = -sign;
        }
    }
    const double prod = zero ? 0.0 : sign * std::exp(log_abs);

    double var_prod = 0.0;
    for (int i = 0; i < n; ++i) {
        double rest = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) rest *= std::abs(mean[j]);
        var_prod += (se[i] * rest) * (se[i] * rest);
    }

    return McEstimate{-0.5 * coef.q_n * prod, 0.5 * coef.q_n * std::sqrt(var_prod),
                      n_draws, indeterminate};
}

}  // namespace xtropy
