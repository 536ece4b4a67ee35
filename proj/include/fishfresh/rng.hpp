#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fishfresh {

// Fisher-Yates with explicit index draws. std::shuffle's draw sequence is
// implementation-defined; this keeps split/fold assignments byte-identical
// across standard libraries.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937& rng) {
    for (size_t k = v.size(); k > 1; --k) {
        const size_t j = static_cast<size_t>(rng() % k);
        std::swap(v[k - 1], v[j]);
    }
}

inline std::mt19937 seeded_rng(unsigned seed, unsigned stream) {
    std::seed_seq seq{seed, stream};
    return std::mt19937(seq);
}

}  // namespace fishfresh
