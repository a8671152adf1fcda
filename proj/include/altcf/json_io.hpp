#pragma once

// JSON forms of continued fraction prefixes and partial-sum tables. Integers
// are written as bare JSON numbers of any size and read back exactly.
//
//   simple CF        [a0, a1, a2, ...]
//   general CF       [[b1, a1], [b2, a2], ...]   (a non-integral element is a "p/q" string)
//   partial sums     [{"n": 0, "num": 1, "den": 2, "tail_num": 1, "tail_den": 6}, ...]

#include <string>
#include <string_view>
#include <vector>

#include "altcf/arith.hpp"
#include "altcf/confrac.hpp"
#include "altcf/series.hpp"

namespace altcf {

std::string integer_array_json(const std::vector<Integer>& values);
std::string gcf_json(const std::vector<Element>& elements);
std::string partial_sums_json(const std::vector<PartialSum>& sums);

/// Parsers throw std::invalid_argument on malformed input.
std::vector<Integer> parse_integer_array_json(std::string_view text);
std::vector<Element> parse_gcf_json(std::string_view text);
std::vector<PartialSum> parse_partial_sums_json(std::string_view text);

}  // namespace altcf
