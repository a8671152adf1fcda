#pragma once

// Generators for the sequences and constants built from alternating and
// Engel series: the M -> (N, A, SCF) construction of type II series that are
// equivalent to simple continued fractions (and its inverse), Sylvester-type
// sequences s_n(k, l), Cahen-type constants C_{k,l} with their simple
// continued fractions, Kellogg-Curtiss-type Engel series K_{k,l}, and a
// catalog of named constants.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "altcf/arith.hpp"
#include "altcf/confrac.hpp"
#include "altcf/series.hpp"
#include "altcf/stream.hpp"

namespace altcf {

/// A "must never fire" consistency check failed.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Type II series built from a stream M of positive integers:
///   N_1 = 1, N_2 = M_0, N_{n+2} = (M_n N_{n+1} + 1) N_n,
///   A_0 = M_0, A_n = M_n N_{n+1} + 1,
/// whose partial sums are the convergents of [0, M_0, M_1 N_1, M_2 N_2, ...].
class MNConstruction {
public:
  explicit MNConstruction(Stream<Integer> M);

  const Integer& M(std::size_t n) const { return M_[n]; }
  /// n >= 1.
  const Integer& N(std::size_t n) const;
  const Integer& A(std::size_t n) const { return A_[n]; }

  const Stream<Integer>& M_stream() const { return M_; }
  /// Element i is N_{i+1}.
  const Stream<Integer>& N_stream() const { return N_; }
  const Stream<Integer>& A_stream() const { return A_; }
  const SimpleCF& scf() const { return scf_; }
  TypeIISeries series() const { return TypeIISeries(A_); }

private:
  Stream<Integer> M_;
  Stream<Integer> N_;
  Stream<Integer> A_;
  SimpleCF scf_;
};

/// Builds the construction and materializes A and the SCF through index
/// `depth`. Throws std::invalid_argument if some M_n < 1 in that range.
MNConstruction build_from_M(Stream<Integer> M, std::size_t depth);

struct DecomposeFailure {
  std::size_t index;
  std::string reason;
};

/// Inverts the construction on A_0..A_depth: M_0 = A_0, N_1 = 1, N_2 = A_0 and,
/// for n >= 1, M_n = (A_n - 1)/N_{n+1} provided N_{n+1} divides A_n - 1, with
/// N_{n+2} = A_n N_n. Returns the first index where divisibility fails.
std::variant<MNConstruction, DecomposeFailure> decompose_to_M(const Stream<Integer>& A, std::size_t depth);

/// s_0 = k, s_n = (s_0 s_1 ... s_{n-1})^l + 1.
class SylvesterFamily {
public:
  SylvesterFamily(unsigned long k, unsigned long ell);

  unsigned long k() const { return k_; }
  unsigned long ell() const { return ell_; }
  const Integer& s(std::size_t n) const { return s_[n]; }
  const Stream<Integer>& stream() const { return s_; }
  std::vector<Integer> terms(std::size_t count) const { return s_.take(count); }

  /// s_{n+1} - 1 = (s_n - 1) s_n^l for 1 <= n < depth and pairwise
  /// coprimality of s_0..s_depth. Returns a description of the first
  /// violation, or nullopt.
  std::optional<std::string> check_invariants(std::size_t depth) const;

private:
  unsigned long k_;
  unsigned long ell_;
  Stream<Integer> s_;
};

SylvesterFamily sylvester(unsigned long k, unsigned long ell);

/// Simple continued fraction of C_{k,l}:
///   a_0 = 0, a_1 = s_0^l, a_{n+1} = (s_n^l - 1) prod_{i<n} (s_i^l)^{(-1)^{n+i}}.
/// Throws InternalError if some a_n is not an integer.
SimpleCF cahen_scf(unsigned long k, unsigned long ell);

/// The l = 1 closed form [0, s_0, 1, s_0^2, s_1^2, (s_0 s_2)^2, (s_1 s_3)^2, ...].
SimpleCF cahen_scf_closed_form(unsigned long k);

/// C_{k,l} = sum (-1)^n / (s_{n+1} - 1) as the type II series A_n = s_n^l.
/// Asserts A_0 ... A_n = s_{n+1} - 1 at every index.
TypeIISeries cahen_series(unsigned long k, unsigned long ell);

/// K_{k,l} = sum 1 / (s_{n+1} - 1) as the Engel series A_n = s_n^l, with
/// the tail bound 1/(s_{n+1} - 1)^{l+1} after term n.
EngelSeries kc_series(unsigned long k, unsigned long ell);

struct CahenBoundRow {
  std::size_t n;
  Integer a_n;
  Integer bound;  // (k^l + 1)^((l+1)^(n-4))
  bool holds;
};

struct CahenBoundReport {
  unsigned long k = 0;
  unsigned long ell = 0;
  std::vector<CahenBoundRow> rows;
  bool holds = false;
};

/// a_n > (k^l + 1)^((l+1)^(n-4)) for 4 <= n <= depth.
CahenBoundReport cahen_bound_check(unsigned long k, unsigned long ell, std::size_t depth);

/// 2, 3, 5, 7, ... by incremental trial division.
Stream<Integer> primes();

/// Simple continued fractions of e - 1, e and 1/e.
SimpleCF e_minus_1_scf();
SimpleCF e_scf();
SimpleCF inv_e_scf();

/// Exponents e_n of liouville_alt, A_n = 10^{e_n}: e_0 = 2, e_n = (n+2)! - (n+1)!.
Stream<Integer> liouville_alt_exponents();

enum class SeriesKind { TypeI, TypeII, Engel, Scf };

std::string_view kind_name(SeriesKind kind);

struct CatalogEntry {
  std::string name;
  SeriesKind kind;
  std::string provenance;

  std::optional<TypeISeries> type_i;
  std::optional<TypeIISeries> type_ii;
  std::optional<EngelSeries> engel;
  /// Simple continued fraction of the value, when known.
  std::optional<SimpleCF> scf;
  /// True when `scf`'s convergents are the partial sums of the primary series.
  bool scf_equivalent = false;
  std::optional<SylvesterFamily> sylvester;
  std::optional<MNConstruction> construction;
  /// Set when every A_n is a power of `power_base`, A_n = power_base^{power_exponents[n]}.
  std::optional<Integer> power_base;
  std::optional<Stream<Integer>> power_exponents;
  /// Measure scans on this constant are exploratory (no finite claim to test).
  bool exploratory = false;

  /// The series of kind `kind`. Throws std::logic_error for an Scf entry.
  AnySeries primary_series() const;
};

/// Names accepted by catalog(): fermat, primorial, inv_e, sin_inv(k), cos_inv(k),
/// golden, liouville_alt, davison_shallit, cahen(k,l), kellogg_curtiss(k,l),
/// e_minus_1_scf. Parameters default to 1.
std::vector<std::string> catalog_names();

/// Throws std::invalid_argument listing the catalog on an unknown name.
CatalogEntry catalog(std::string_view name);

/// OEIS b-file text: one "n a(n)" line per term, n starting at `offset`.
std::string bfile(const Stream<Integer>& s, std::size_t count, std::size_t offset = 0);

}  // namespace altcf
