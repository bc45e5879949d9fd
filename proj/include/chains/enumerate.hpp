#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chains/formula.hpp"

namespace chains {

inline constexpr std::uint64_t kDefaultEnumerateCap = 12;

// Visits every chain with `edges` chain edges exactly once, in a fixed
// order: for n >= 2 all Vee-rooted chains, then all Wedge-rooted ones; within
// a root kind, summand sizes run over compositions of n in lexicographic
// order. Returns the number of chains visited. Throws CapExceeded if
// edges > cap and std::invalid_argument if edges == 0.
std::uint64_t for_each_chain(std::uint64_t edges, const std::function<void(const Formula&)>& visit,
                             std::uint64_t cap = kDefaultEnumerateCap);

std::vector<Formula> enumerate_chains(std::uint64_t edges, std::uint64_t cap = kDefaultEnumerateCap);

struct ChainTally {
    std::uint64_t total = 0;
    std::uint64_t upward = 0;
    std::uint64_t downward = 0;
};

ChainTally tally_chains(std::uint64_t edges, std::uint64_t cap = kDefaultEnumerateCap);

}  // namespace chains
