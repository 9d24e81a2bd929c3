#include "hooksum/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "hooksum/errors.hpp"
#include "hooksum/parallel.hpp"

namespace hooksum {

namespace {

constexpr std::uint64_t kChunkSamples = 1u << 16;

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in (0, 1]
    double uniform_pos() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 m{seed ^ (salt * 0xD1B54A32D192ED03ULL + 0x9E3779B97F4A7C15ULL)};
    return m.next();
}

// Box-Muller, trig form: no rejection, so the draw count per normal is
// fixed and the per-chunk stream is fully determined by its seed.
struct NormalGen {
    SplitMix64 rng;
    bool have_spare = false;
    double spare = 0.0;
    double next() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double u1 = rng.uniform_pos();
        const double u2 = rng.uniform_pos();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare = r * std::sin(t);
        have_spare = true;
        return r * std::cos(t);
    }
};

struct Partial {
    double sum = 0.0;
    double sum2 = 0.0;
};

struct BlockSpec {
    unsigned begin = 0;
    unsigned end = 0;
};

struct ZeroSumProblem {
    unsigned dim = 0;          // s: number of hyperplane coordinates
    double precision = 1.0;    // b in the per-coordinate weight e^{-b/2 x^2}
    double power = 1.0;        // exponent on the |Vandermonde| product
    BlockSpec blocks[2];       // up to two row blocks
    unsigned n_blocks = 1;
};

double sample_weight(const ZeroSumProblem& pr, NormalGen& gen, double* x) {
    double mean = 0.0;
    for (unsigned i = 0; i < pr.dim; ++i) {
        x[i] = gen.next();
        mean += x[i];
    }
    mean /= pr.dim;
    const double scale = 1.0 / std::sqrt(pr.precision);
    for (unsigned i = 0; i < pr.dim; ++i) x[i] = (x[i] - mean) * scale;
    double prod = 1.0;
    for (unsigned b = 0; b < pr.n_blocks; ++b) {
        for (unsigned i = pr.blocks[b].begin; i < pr.blocks[b].end; ++i)
            for (unsigned j = i + 1; j < pr.blocks[b].end; ++j)
                prod *= std::fabs(x[i] - x[j]);
    }
    return pr.power == 1.0 ? prod : std::pow(prod, pr.power);
}

Partial run_chunk(const ZeroSumProblem& pr, std::uint64_t n_samples,
                  std::uint64_t chunk_seed) {
    NormalGen gen{SplitMix64{chunk_seed}};
    double x[8];
    Partial p;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        const double w = sample_weight(pr, gen, x);
        p.sum += w;
        p.sum2 += w * w;
    }
    return p;
}

// scale * mean of the weight over `samples` draws, chunked and
// order-independent of the worker count.
McEstimate zero_sum_mc(const ZeroSumProblem& pr, double scale,
                       std::uint64_t samples, std::uint64_t seed,
                       unsigned threads) {
    const std::uint64_t n_chunks =
        (samples + kChunkSamples - 1) / kChunkSamples;
    std::vector<Partial> partials(n_chunks);

    auto chunk_len = [&](std::uint64_t c) {
        return c + 1 < n_chunks ? kChunkSamples
                                : samples - kChunkSamples * (n_chunks - 1);
    };

    if (threads == 0) threads = default_thread_count();
    if (threads <= 1 || n_chunks <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            partials[c] = run_chunk(pr, chunk_len(c), mix_seed(seed, c));
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                partials[c] = run_chunk(pr, chunk_len(c), mix_seed(seed, c));
            }
        };
        std::vector<std::thread> pool;
        const unsigned use = static_cast<unsigned>(
            std::min<std::uint64_t>(threads, n_chunks));
        pool.reserve(use);
        for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    double sum = 0.0, sum2 = 0.0;
    for (const Partial& p : partials) {  // fixed chunk order
        sum += p.sum;
        sum2 += p.sum2;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sum2 / n - mean * mean);
    McEstimate e;
    e.mean = scale * mean;
    e.std_error = scale * std::sqrt(var / n);
    e.samples = samples;
    e.seed = seed;
    return e;
}

double hyperplane_scale(unsigned dim, double precision) {
    return std::pow(2.0 * std::numbers::pi / precision,
                    static_cast<double>(dim - 1) / 2.0) /
           std::sqrt(static_cast<double>(dim));
}

double factorial_d(unsigned m) {
    double f = 1.0;
    for (unsigned i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

McEstimate mc_selberg(unsigned s, double beta, std::uint64_t samples,
                      std::uint64_t seed, const McOptions& opt) {
    if (s < 2 || s > 5) throw DomainError("mc_selberg needs 2 <= s <= 5");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (samples < 10000) throw DomainError("mc_selberg needs >= 10^4 samples");
    ZeroSumProblem pr;
    pr.dim = s;
    pr.precision = beta;
    pr.power = beta;
    pr.blocks[0] = {0, s};
    pr.n_blocks = 1;
    const double scale = hyperplane_scale(s, beta) / factorial_d(s);
    return zero_sum_mc(pr, scale, samples, seed, opt.threads);
}

double gaussian_J(unsigned k, unsigned l, double z) {
    if (k < 1 || l < 1) throw DomainError("gaussian_J needs k, l >= 1");
    if (!(z > 0.0)) throw DomainError("z must be positive");
    const double s = static_cast<double>(k + l);
    return std::sqrt(static_cast<double>(k) * l * std::numbers::pi /
                     (z * s * s));
}

namespace {

// I_k^{(2z)} with the e^{-(k+l)/2 x^2} weight absorbed into the sampler
// precision b = 2z(k+l). k = 1 is the 0-dimensional integral, exactly 1.
McEstimate mc_inner_block(unsigned k, unsigned l, double z,
                          std::uint64_t samples, std::uint64_t seed,
                          unsigned threads) {
    if (k == 1) return McEstimate{1.0, 0.0, samples, seed};
    ZeroSumProblem pr;
    pr.dim = k;
    pr.precision = 2.0 * z * (k + l);
    pr.power = 2.0 * z;
    pr.blocks[0] = {0, k};
    pr.n_blocks = 1;
    const double scale =
        hyperplane_scale(k, pr.precision) / factorial_d(k);
    return zero_sum_mc(pr, scale, samples, seed, threads);
}

}  // namespace

McEstimate mc_full_I(unsigned k, unsigned l, double z,
                     std::uint64_t samples, std::uint64_t seed,
                     McMethod method, const McOptions& opt) {
    if (k < 1 || l < 1) throw DomainError("mc_full_I needs k, l >= 1");
    if (k + l > 6) throw DomainError("mc_full_I supports k + l <= 6");
    if (!(z > 0.0)) throw DomainError("z must be positive");
    if (samples < 1) throw DomainError("samples must be positive");

    if (method == McMethod::direct) {
        const unsigned s = k + l;
        ZeroSumProblem pr;
        pr.dim = s;
        pr.precision = 2.0 * z * s;
        pr.power = 2.0 * z;
        pr.blocks[0] = {0, k};
        pr.blocks[1] = {k, s};
        pr.n_blocks = 2;
        const double scale = hyperplane_scale(s, pr.precision) /
                             (factorial_d(k) * factorial_d(l));
        return zero_sum_mc(pr, scale, samples, seed, opt.threads);
    }

    // Factorized: J * I_k * I_l with independent sub-streams.
    const McEstimate ek =
        mc_inner_block(k, l, z, samples, mix_seed(seed, 0xA11CE), opt.threads);
    const McEstimate el =
        mc_inner_block(l, k, z, samples, mix_seed(seed, 0xB0B), opt.threads);
    const double j = gaussian_J(k, l, z);
    McEstimate e;
    e.mean = j * ek.mean * el.mean;
    e.std_error = j * std::hypot(ek.mean * el.std_error,
                                 el.mean * ek.std_error);
    e.samples = samples;
    e.seed = seed;
    return e;
}

}  // namespace hooksum
