#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error (message on the error stream).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "altcf/arith.hpp"
#include "altcf/confrac.hpp"
#include "altcf/constructors.hpp"
#include "altcf/series.hpp"

namespace altcf {

/// Malformed inline spec. `position` is the character offset of the
/// offending token; `index` the stream index when an invariant failed.
class SpecError : public std::invalid_argument {
public:
  SpecError(std::size_t position, std::optional<std::size_t> index, const std::string& what)
      : std::invalid_argument(what), position_(position), index_(index) {}
  std::size_t position() const { return position_; }
  std::optional<std::size_t> index() const { return index_; }

private:
  std::size_t position_;
  std::optional<std::size_t> index_;
};

/// A resolved command target: a catalog entry or an inline spec.
struct Target {
  std::string label;
  std::optional<CatalogEntry> entry;
  std::optional<AnySeries> series;
  std::optional<SimpleCF> scf;
  std::optional<MNConstruction> construction;
  std::optional<Rat> rational;
};

/// typeI:B=<ints>, typeII:A=<ints>, M=<ints>[...], scf=<ints>, rat=<p>/<q>.
/// A trailing "..." on an M list repeats its last value forever. Every listed
/// term is validated; violations raise SpecError naming the index.
Target parse_inline_spec(std::string_view text);

/// Catalog name or inline spec.
Target resolve_target(std::string_view text);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altcf
