#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "altcf/arith.hpp"
#include "altcf/confrac.hpp"

namespace gen {

using altcf::Integer;
using altcf::Rat;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

// Integer with up to `max_digits` decimal digits, sometimes negative.
inline Integer big(std::mt19937_64& g, int max_digits, bool allow_negative = true) {
  int digits = static_cast<int>(uniform(g, 1, max_digits));
  Integer x = 0;
  for (int i = 0; i < digits; ++i) x = x * 10 + uniform(g, 0, 9);
  if (allow_negative && uniform(g, 0, 1) == 1) x = -x;
  return x;
}

inline Rat rat(std::mt19937_64& g, int max_digits = 12) {
  Integer d = 0;
  while (d == 0) d = big(g, max_digits, false);
  return Rat(big(g, max_digits), d);
}

inline Rat positive_rat(std::mt19937_64& g, long max = 50) {
  return Rat(Integer(uniform(g, 1, max)), Integer(uniform(g, 1, max)));
}

// General CF elements with positive entries: mostly integers, some fractions.
inline std::vector<altcf::Element> elements(std::mt19937_64& g, std::size_t count) {
  std::vector<altcf::Element> out;
  for (std::size_t i = 0; i < count; ++i) {
    bool frac = uniform(g, 0, 3) == 0;
    Rat b = frac ? positive_rat(g) : Rat(uniform(g, 1, 30));
    Rat a = frac ? positive_rat(g) : Rat(uniform(g, 1, 30));
    out.push_back({b, a});
  }
  return out;
}

inline std::vector<Integer> positive_ints(std::mt19937_64& g, std::size_t count, long max) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Integer(uniform(g, 1, max)));
  return out;
}

}  // namespace gen
