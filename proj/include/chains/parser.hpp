#pragma once

#include <string_view>

#include "chains/formula.hpp"

namespace chains {

// Parses formula text into its canonical form.
//
//   expr  := term (op term)*          all ops at one level must agree
//   op    := "v" | "^" | "∨" | "∧"
//   term  := "E" | "(" expr ")" | call
//   call  := flip(expr) | poly(expr, N) | twin(expr, N) | gdc(N, ...)
//          | vex(N) | cave(N) | koch(S) | dc(K) | zz(K) | dzz(K)
//
// Throws ParseError (with byte offset) on malformed text or invalid
// builder arguments such as vex(0).
Formula parse_formula(std::string_view text);

}  // namespace chains
