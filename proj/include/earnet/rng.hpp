#ifndef EARNET_RNG_HPP
#define EARNET_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace earnet {

/// Deterministic random source. std::mt19937_64 has a fully specified output
/// sequence, and all derived draws below avoid std::*_distribution (whose
/// algorithms are implementation-defined), so the same seed yields the same
/// samples on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (single value; the twin is discarded to
    /// keep the draw count predictable).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// k distinct indices drawn uniformly from [0, n), in random order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::mt19937_64 engine_;
};

/// FNV-1a mix of a base seed and a tag, so that independent consumers of one
/// experiment seed get decorrelated streams.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

} // namespace earnet

#endif // EARNET_RNG_HPP
