#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace sepminor {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so bounded integers and
/// shuffles are done here by rejection sampling on raw mt19937_64 output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound).
    std::uint64_t index(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return index(den) < num; }

    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[index(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 mixing of (master, stream) into an independent child seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace sepminor
