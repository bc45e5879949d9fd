#pragma once

// Named chain families. All parameters are validated; invalid ones throw
// std::invalid_argument.

#include <cstdint>
#include <span>

#include "chains/formula.hpp"

namespace chains {

// E v E v ... v E (n copies); vex(1) = E.
Formula vex(std::uint64_t n);
// E ^ E ^ ... ^ E (n copies); cave(1) = E.
Formula cave(std::uint64_t n);
// cave(k) v E v cave(k), 2k+1 edges.
Formula double_chain(std::uint64_t k);
// cave(2) v ... v cave(2) (k copies), 2k edges.
Formula zigzag(std::uint64_t k);
// flip(zigzag(k)) v E v flip(zigzag(k)), 4k+1 edges.
Formula double_zigzag(std::uint64_t k);
// K_0 = E, K_s = flip(K_{s-1}) v flip(K_{s-1}); 2^s edges. s <= 62.
Formula koch(unsigned s);
// flip(base) v ... v flip(base) (copies copies).
Formula poly(const Formula& base, std::uint64_t copies);
// flip(poly(base, N)) v E v flip(poly(base, N)).
Formula twin(const Formula& base, std::uint64_t copies);
// poly(vex(1), N_1) v poly(vex(2), N_2) v ... with zero counts omitted.
Formula gdc(std::span<const std::uint64_t> counts);

}  // namespace chains
