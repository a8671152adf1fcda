#pragma once

// Alternating series of type I (sum (-1)^n / B_n) and type II
// (sum (-1)^n / (A_0 A_1 ... A_n)), Engel series (sum 1 / (A_0 ... A_n)),
// their exact partial sums with tail bounds, and the conversions to
// equivalent continued fractions whose convergent n+1 is partial sum n.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "altcf/arith.hpp"
#include "altcf/confrac.hpp"
#include "altcf/stream.hpp"

namespace altcf {

/// A stream term broke the series' invariants.
class SeriesError : public std::invalid_argument {
public:
  SeriesError(std::size_t index, const std::string& what) : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

/// B_0 < B_1 < B_2 < ... positive integers.
class TypeISeries {
public:
  explicit TypeISeries(Stream<Integer> B);

  const Integer& B(std::size_t n) const { return B_[n]; }
  bool has(std::size_t n) const { return B_.has(n); }
  const Stream<Integer>& stream() const { return B_; }
  Rat term(std::size_t n) const;

private:
  Stream<Integer> B_;
};

/// A_0 >= 1 and A_n >= 2 for n >= 1. A type II series is the type I series
/// with B_n = A_0 A_1 ... A_n.
class TypeIISeries {
public:
  explicit TypeIISeries(Stream<Integer> A);

  const Integer& A(std::size_t n) const { return A_[n]; }
  bool has(std::size_t n) const { return A_.has(n); }
  const Stream<Integer>& stream() const { return A_; }
  /// A_0 A_1 ... A_n (memoized).
  const Integer& product(std::size_t n) const { return products_[n]; }
  Rat term(std::size_t n) const;

  TypeISeries as_type_i() const { return TypeISeries(products_); }

  /// A_{n+1} > A_n for every n with n + 1 <= depth inside the stream.
  bool pierce(std::size_t depth) const;

private:
  Stream<Integer> A_;
  Stream<Integer> products_;
};

/// Engel series with non-decreasing A_n. When `sylvester_ell` is set the
/// stream is A_n = s_n(k, l)^l, and the sharper tail bound
/// 1/(A_0 ... A_n)^(l+1) applies.
class EngelSeries {
public:
  explicit EngelSeries(Stream<Integer> A, std::optional<unsigned> sylvester_ell = std::nullopt);

  const Integer& A(std::size_t n) const { return A_[n]; }
  bool has(std::size_t n) const { return A_.has(n); }
  const Stream<Integer>& stream() const { return A_; }
  const Integer& product(std::size_t n) const { return products_[n]; }
  Rat term(std::size_t n) const;
  std::optional<unsigned> sylvester_ell() const { return ell_; }

private:
  Stream<Integer> A_;
  Stream<Integer> products_;
  std::optional<unsigned> ell_;
};

using AnySeries = std::variant<TypeISeries, TypeIISeries, EngelSeries>;

struct PartialSum {
  std::size_t n;
  Rat sum;         // terms 0..n
  Rat tail_bound;  // |value - sum| < tail_bound (0 when the series ends at n)
};

/// S_0..S_N. Throws SeriesError on an invariant violation and StreamExhausted
/// if the stream ends before N.
std::vector<PartialSum> partial_sums(const AnySeries& series, std::size_t N);

/// b_1 = 1, a_1 = B_0; b_{n+1} = B_{n-1}^2, a_{n+1} = B_n - B_{n-1}.
GCF typeI_to_cf(const TypeISeries& s);

/// b_1 = x_0, a_1 = A_0 x_0; b_{n+1} = A_{n-1} x_{n-1} x_n, a_{n+1} = (A_n - 1) x_n.
GCF typeII_to_cf(const TypeIISeries& s, Stream<Rat> x = Stream<Rat>::constant(Rat(1)));

struct ConditionVerdict {
  bool holds = false;
  std::size_t checked = 0;              // number of indices n examined
  std::vector<std::size_t> failures;    // every failing n
  std::optional<Rat> geometric_value;   // set when the A-stream is constant
  std::string label;
};

/// B_{n+1} >= B_n (B_n + 1) for n < N (as far as the stream reaches).
ConditionVerdict sierpinski_check(const TypeISeries& s, std::size_t N);

/// A_{n+1} > A_n for n < N. A constant stream A_n = A_0 > 1 is reported with
/// its rational sum 1/(A_0 + 1).
ConditionVerdict typeII_monotone_check(const TypeIISeries& s, std::size_t N);

struct PierceExpansion {
  std::vector<Integer> A;
  bool terminated = false;
  /// Exact value of sum (-1)^n / (A_0 ... A_n) over the prefix.
  Rat resum() const;
};

/// Greedy Pierce expansion of r in (0, 1]: A_n = floor(1/r_n), r_{n+1} = 1 - A_n r_n.
/// Stops when the remainder is exactly zero or after `depth` terms.
PierceExpansion pierce_expand(const Rat& r, std::size_t depth);

struct ScfSeries {
  Integer a0;
  TypeISeries series;  // B_n = q_n q_{n+1}
};

/// rho - a0 = sum (-1)^n / (q_n q_{n+1}) for a simple continued fraction.
ScfSeries scf_to_series(const SimpleCF& scf);
/// Same, from a GCF that must be simple (checked lazily per element).
ScfSeries scf_to_series(const GCF& cf);

struct SharpnessReport {
  Integer B0;
  std::size_t N = 0;
  std::vector<Integer> B;  // B_0..B_{N+1}
  Rat lhs;                 // sum_{n<=N} (-1)^n / B_n
  Rat rhs;                 // 1/(B_0+1) + (-1)^N / (B_{N+1}+1)
  bool holds = false;
};

/// B_{n+1} = B_n (B_n + 1) - 1 telescopes to a rational sum; checks the
/// finite form exactly.
SharpnessReport sharpness_identity(const Integer& B0, std::size_t N);

}  // namespace altcf
