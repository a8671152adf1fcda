#pragma once

// Continued fractions
//
//   a0 + b1/(a1 + b2/(a2 + ...))
//
// with positive rational elements (b_n, a_n). Elements are rational rather
// than integral because equivalence transforms routinely leave the integers;
// integrality and simplicity are properties checked on a prefix.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "altcf/arith.hpp"
#include "altcf/stream.hpp"

namespace altcf {

struct Element {
  Rat b;  // partial numerator
  Rat a;  // partial quotient
  friend bool operator==(const Element&, const Element&) = default;
};

class GCF {
public:
  /// `elements[0]` is (b1, a1). Elements must be positive; this is checked on access.
  GCF(Integer a0, Stream<Element> elements);

  const Integer& a0() const { return a0_; }
  const Stream<Element>& elements() const { return elements_; }

  /// 1-based element access. Throws StreamExhausted
  /// ("finite continued fraction exhausted at n") past the end.
  const Element& element(std::size_t n) const;
  bool has_element(std::size_t n) const { return elements_.has(n - 1); }

  /// All b_n, a_n positive integers for n <= depth (within the stream).
  bool is_integral(std::size_t depth) const;
  /// Integral with every b_n = 1 for n <= depth.
  bool is_simple(std::size_t depth) const;

private:
  Integer a0_;
  Stream<Element> elements_;
};

/// Simple continued fraction [a0; a1, a2, ...], a_n >= 1 for n >= 1.
class SimpleCF {
public:
  SimpleCF(Integer a0, Stream<Integer> quotients);

  /// From the full term list [a0, a1, ..., am].
  static SimpleCF from_terms(std::vector<Integer> terms);

  const Integer& a0() const { return a0_; }
  /// a_n for n >= 1.
  const Integer& quotient(std::size_t n) const;
  bool has_quotient(std::size_t n) const { return quotients_.has(n - 1); }
  const Stream<Integer>& quotients() const { return quotients_; }

  /// Up to `count` terms a0, a1, ..., a_{count-1}.
  std::vector<Integer> terms(std::size_t count) const;

  GCF as_gcf() const;

private:
  Integer a0_;
  Stream<Integer> quotients_;
};

/// Rolling state of the three-term recurrences
///   p_n = a_n p_{n-1} + b_n p_{n-2},  q_n = a_n q_{n-1} + b_n q_{n-2}
/// seeded with p_{-1} = 1, p_0 = a0, q_{-1} = 0, q_0 = 1.
template <class V>
struct ConvergentState {
  std::size_t n = 0;
  V p_prev{1};
  V p_cur{0};
  V q_prev{0};
  V q_cur{1};

  explicit ConvergentState(const Integer& a0) : p_cur(a0) {}

  void advance(const V& b, const V& a) {
    V p_next = a * p_cur + b * p_prev;
    V q_next = a * q_cur + b * q_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
    ++n;
  }
};

struct Convergent {
  Integer p;
  Integer q;
  Rat value() const { return Rat(p, q); }
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// p_n/q_n for n = 0..N (N+1 values).
std::vector<Rat> convergents(const GCF& cf, std::size_t N);

/// Integer convergent pairs (p_n, q_n), n = 0..N, in lowest terms.
std::vector<Convergent> simple_convergents(const SimpleCF& cf, std::size_t N);

/// Value of the continued fraction truncated after element N, folded
/// bottom-up. Independent of the convergent recurrence.
Rat eval_finite(const GCF& cf, std::size_t N);

/// Scales element n by x_{n-1}: b_n -> x_{n-1} x_{n-2} b_n, a_n -> x_{n-1} a_n
/// (x_{-1} = 1). Convergents are unchanged. Throws on a nonpositive scale.
GCF equivalence_transform(const GCF& cf, Stream<Rat> x);

struct LemmaVerdict {
  bool holds = false;
  std::size_t depth = 0;
  std::optional<std::size_t> violated_at;
  std::string detail;
};

/// Checks a_n >= b_n >= 1 (integers) for n = 1..N. A holding verdict is a
/// finite check of the irrationality criterion, not a proof.
/// Throws std::invalid_argument if an element in range is not integral.
LemmaVerdict lemma_check(const GCF& cf, std::size_t N);

struct TailBound {
  std::size_t n;
  Rat tail;    // tail alpha_n truncated at depth N
  bool in_unit_interval;
};

struct TailReport {
  std::size_t depth = 0;
  std::vector<TailBound> tails;
  bool all_hold() const;
};

/// Truncated tails alpha_n = b_{n+1}/(a_{n+1} + b_{n+2}/(...b_N/a_N)) for
/// n = 0..N-2, each checked to lie strictly inside (0, 1).
TailReport tail_report(const GCF& cf, std::size_t N);

/// Euclidean algorithm; last partial quotient >= 2 whenever there is more
/// than one term.
SimpleCF scf_of_rational(const Rat& r);

}  // namespace altcf
