// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtkd {

/// FNV-1a 64-bit hash. Fixed constants, byte-wise over the input; this is the
/// stable hash the tokenizer and seed derivation are documented against.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a run seed and a stream tag.
/// Keeping sampler / dropout / dataset-draw streams separate means consuming
/// one stream never shifts another.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream_name) {
    return derive_seed(seed, fnv1a64(stream_name));
}

/// Deterministic RNG wrapper around std::mt19937_64. All derived draws
/// (unit doubles, bounded ints) are hand-rolled from raw 64-bit output so the
/// stream is identical across standard libraries; std distributions are
/// implementation-defined and are deliberately not used.
class Rng {
public:
    Rng() : gen_(0) {}
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Plain modulo; the bias at n << 2^64 is far
    /// below anything observable at desk scale and the draw stays portable.
    std::uint64_t next_index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::next_index: n must be positive");
        return gen_() % n;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    /// Fisher-Yates shuffle using next_index; portable unlike std::shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Engine state round-trips exactly through the standard text format.
    std::string serialize() const {
        std::ostringstream os;
        os << gen_;
        return os.str();
    }

    void deserialize(const std::string& state) {
        std::istringstream is(state);
        is >> gen_;
        if (is.fail()) throw std::runtime_error("Rng::deserialize: malformed engine state");
    }

private:
    std::mt19937_64 gen_;
};

} // namespace mtkd
