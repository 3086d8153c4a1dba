#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace halign {

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// All randomness in the pipeline flows from one root seed, split per stage
/// (or per key such as a store id) through these derivations.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view name) {
    std::uint64_t s = root ^ fnv1a64(name);
    return splitmix64(s);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root ^ (0x9e3779b97f4a7c15ull + index * 0xd1342543de82ef95ull);
    return splitmix64(s);
}

/// Small deterministic PRNG with hand-rolled distributions so that generated
/// datasets and training runs are reproducible byte-for-byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // warm up so that nearby seeds decorrelate
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1ull;
        // rejection sampling to avoid modulo bias
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Standard normal via Box-Muller, one cached spare.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Poisson draw by Knuth's product method; fine for the small means
    /// used by the synthetic generator.
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean > 30.0) {
            // normal approximation for large means
            int k = static_cast<int>(std::lround(mean + std::sqrt(mean) * normal()));
            return k < 0 ? 0 : k;
        }
        double limit = std::exp(-mean);
        double p = 1.0;
        int k = 0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices from [0, n), returned in ascending order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        if (k > n) k = n;
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = static_cast<std::size_t>(
                uniform_int(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n) - 1));
            std::swap(all[i], all[j]);
        }
        all.resize(k);
        std::sort(all.begin(), all.end());
        return all;
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace halign
