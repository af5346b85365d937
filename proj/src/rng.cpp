#include "earnet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace earnet {

std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
    if (k > n) k = n;
    std::vector<std::size_t> picked;
    picked.reserve(k);
    if (k == 0) return picked;

    // Partial Fisher-Yates when we select a large share; Floyd's algorithm
    // keeps memory at O(k) when k << n.
    if (k * 4 >= n) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(uniform_below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

    std::unordered_set<std::size_t> seen;
    seen.reserve(k * 2);
    for (std::size_t i = n - k; i < n; ++i) {
        const std::size_t t = static_cast<std::size_t>(uniform_below(i + 1));
        if (seen.insert(t).second) {
            picked.push_back(t);
        } else {
            seen.insert(i);
            picked.push_back(i);
        }
    }
    return picked;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 14695981039346656037ull;
    const auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    for (int shift = 0; shift < 64; shift += 8) {
        mix(static_cast<unsigned char>(base >> shift));
    }
    for (char c : tag) {
        mix(static_cast<unsigned char>(c));
    }
    return h;
}

} // namespace earnet
