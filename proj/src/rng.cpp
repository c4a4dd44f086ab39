#include "fragilemark/rng.hpp"

#include <utility>

namespace fragilemark {

std::vector<std::uint32_t> seeded_permutation(std::size_t n,
                                              std::uint64_t seed) {
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = static_cast<std::uint32_t>(i);
    }
    Rng rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

std::uint64_t fnv1a64(const void* bytes, std::size_t len,
                      std::uint64_t basis) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    std::uint64_t h = basis;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view s, std::uint64_t basis) {
    return fnv1a64(s.data(), s.size(), basis);
}

} // namespace fragilemark
