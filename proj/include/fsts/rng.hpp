#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsts/types.hpp"

namespace fsts {

// Deterministic random streams.
//
// Every sample's randomness is keyed by (master_seed, sample_id) so that
// results are reproducible across runs, platforms and worker schedules. The
// mixing function is fixed and documented here so an independent
// implementation can reproduce the exact value stream:
//
//   h        = FNV-1a 64-bit over the UTF-8 bytes of sample_id
//              (offset 14695981039346656037, prime 1099511628211)
//   seed0    = master_seed XOR (h * 0x9E3779B97F4A7C15)
//   state    = four successive outputs of splitmix64 starting from seed0
//   stream   = xoshiro256** over that state
//
// Substreams are derived from the *parent's seed material*, never from its
// draw position, so consuming values from one stream cannot shift another:
//
//   substream(label)        -> seed0' = splitmix64(seed0 ^ fnv1a64(label))
//   substream(label, index) -> seed0' = splitmix64(seed0 ^ fnv1a64(label)
//                                                 ^ (index * 0xD1B54A32D192ED03))
//
// Draw primitives (all little-endian-free, pure integer/double math):
//   next_u64       : raw xoshiro256** output
//   uniform_real   : lo + (next_u64 >> 11) * 2^-53 * (hi - lo)
//   uniform_int    : unbiased via rejection on next_u64 % range
//   bernoulli(p)   : uniform_real(0,1) < p
//   pick_weighted  : cumulative walk over weights against uniform_real(0,sum)

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t splitmix64(uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class RngStream {
public:
    RngStream() : RngStream(0) {}

    explicit RngStream(uint64_t seed0) : seed0_(seed0) {
        uint64_t x = seed0;
        for (auto& s : state_) s = splitmix64(x);
    }

    static RngStream derive(uint64_t master_seed, std::string_view sample_id) {
        uint64_t h = fnv1a64(sample_id);
        return RngStream(master_seed ^ (h * 0x9E3779B97F4A7C15ull));
    }

    RngStream substream(std::string_view label) const {
        uint64_t x = seed0_ ^ fnv1a64(label);
        return RngStream(splitmix64(x));
    }

    RngStream substream(std::string_view label, uint64_t index) const {
        uint64_t x = seed0_ ^ fnv1a64(label) ^ (index * 0xD1B54A32D192ED03ull);
        return RngStream(splitmix64(x));
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [lo, hi). 53-bit resolution.
    double uniform_real(double lo, double hi) {
        double u = (next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    /// Uniform integer in [lo, hi], both ends inclusive. Unbiased.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (lo > hi) throw Error("uniform_int: empty range");
        uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<int64_t>(next_u64());  // full 64-bit span
        uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<int64_t>(v % range);
    }

    bool bernoulli(double p) { return uniform_real(0.0, 1.0) < p; }

    /// Index into `weights` with probability weight[i]/sum, or -1 when the
    /// draw lands in [sum(weights), total). Used for residual "none" slots.
    int pick_weighted(std::span<const double> weights, double total) {
        double u = uniform_real(0.0, total);
        double acc = 0.0;
        for (size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return static_cast<int>(i);
        }
        return -1;
    }

    int pick_weighted(std::span<const double> weights) {
        double sum = 0.0;
        for (double w : weights) sum += w;
        if (sum <= 0.0) throw Error("pick_weighted: non-positive weight sum");
        int idx = pick_weighted(weights, sum);
        return idx < 0 ? static_cast<int>(weights.size()) - 1 : idx;
    }

    /// Standard normal via Box-Muller (fixed draw order, no cached spare).
    double normal() {
        double u1 = uniform_real(0.0, 1.0);
        double u2 = uniform_real(0.0, 1.0);
        // avoid log(0)
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    /// Fisher-Yates shuffle of index order, used for candidate scans.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    uint64_t seed0() const { return seed0_; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t seed0_;
    uint64_t state_[4];
};

}  // namespace fsts
