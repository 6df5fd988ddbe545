#pragma once

#include <cstdint>
#include <random>

namespace wiro {

// splitmix64 step; used to derive well-separated per-replica seeds from a
// single master seed. The scheme (master seed mixed with the replica index
// through two splitmix64 rounds) is part of the output contract and must
// stay stable across versions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for replica/chain `index` derived from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s = a ^ (index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t index = 0) {
    return std::mt19937_64(derive_seed(master, index));
}

}  // namespace wiro
