#pragma once

// Verification engines: series/continued-fraction equivalence, the
// q-product and w-sequence checks for simple continued fractions coming from
// type II series, certified irrationality-exponent lower bounds, the
// telescoping identities of Sylvester-type families and the coincidence
// scanners for e and 1/e.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "altcf/arith.hpp"
#include "altcf/confrac.hpp"
#include "altcf/constructors.hpp"
#include "altcf/series.hpp"
#include "altcf/stream.hpp"

namespace altcf {

struct EquivalenceReport {
  std::size_t depth = 0;
  std::vector<bool> matches;  // matches[n]: S_n == convergent n+1
  std::optional<std::size_t> first_mismatch;
  bool all_match() const { return !first_mismatch.has_value(); }
};

/// Compares partial sum S_n with convergent n+1 of `cf` for n <= depth. A
/// stream that ends early counts as a mismatch at that index.
EquivalenceReport verify_equivalence(const AnySeries& series, const GCF& cf, std::size_t depth);
EquivalenceReport verify_equivalence(const AnySeries& series, const SimpleCF& cf, std::size_t depth);

/// Integer polynomials in one variable X with sparse, arbitrarily large
/// exponents.
class SparsePoly {
public:
  SparsePoly() = default;
  SparsePoly(long c);
  SparsePoly(const Integer& c);
  static SparsePoly monomial(const Integer& coefficient, const Integer& exponent);

  const std::map<Integer, Integer>& terms() const { return terms_; }
  /// Value at X = x; throws DigitCapExceeded when a power is too large.
  Integer evaluate(const Integer& x) const;

  friend SparsePoly operator+(const SparsePoly& f, const SparsePoly& g);
  friend SparsePoly operator-(const SparsePoly& f, const SparsePoly& g);
  friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
  friend bool operator==(const SparsePoly& f, const SparsePoly& g) { return f.terms_ == g.terms_; }

private:
  void add(const Integer& exponent, const Integer& coefficient);
  std::map<Integer, Integer> terms_;  // exponent -> nonzero coefficient
};

/// Equivalence of the type II series A_n = X^{e_n} with typeII_to_cf (x = 1),
/// decided as polynomial identities in X. An identity in Z[X] holds at every
/// base, so a match here is an exact match for A_n = base^{e_n} however large
/// the integers are. matches[n] compares S_n with convergent n+1.
EquivalenceReport verify_equivalence_powers(const Stream<Integer>& exponents, std::size_t depth);

/// One check's outcome in the shape {check, params, depth, pass, first_failure, witnesses}.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::size_t depth = 0;
  bool pass = true;
  std::optional<std::string> first_failure;
  nlohmann::json witnesses = nlohmann::json::array();

  /// Records a failure; only the first one is kept as first_failure.
  void fail(const std::string& why);
  nlohmann::json to_json() const;
};

/// q_n q_{n+1} = A_0...A_n, q_n | a_{n+2} and gcd(q_n, q_{n+1}) = 1 for
/// n <= depth, after confirming the SCF is equivalent to the series.
CheckReport q_product_check(const SimpleCF& scf, const TypeIISeries& A, std::size_t depth);

struct WSequence {
  std::vector<Integer> w;              // w_0 = a_1, w_{n+1} = a_{n+2}/q_n
  std::vector<std::size_t> sqrt_hits;  // n >= 1 with (w_n q_{n-1})^2 >= q_n
  std::optional<std::size_t> non_integral_at;
};

/// w_0..w_depth and the indices n <= depth satisfying (w_n q_{n-1})^2 >= q_n.
WSequence w_sequence(const SimpleCF& scf, std::size_t depth);

struct Approximant {
  std::size_t n;
  Integer p;
  Integer q;
  Rat gap_bound;  // |alpha - p/q| < gap_bound
};

/// P_n/Q_n = S_{n-1} with its exact tail bound, n = 1..depth.
std::vector<Approximant> series_approximants(const AnySeries& series, std::size_t depth);
/// p_n/q_n with gap bound 1/(q_n q_{n+1}), n = 1..depth.
std::vector<Approximant> scf_approximants(const SimpleCF& scf, std::size_t depth);

/// gap < gap_bound <= q^{-mu} with mu = a/b, proved by the integer inequality
/// gn^b q^a <= gd^b where gap_bound = gn/gd.
struct ExponentCertificate {
  std::size_t n;
  Rat mu;
  Integer q;
  Rat gap_bound;
  bool certified;

  /// Re-evaluates the stored inequality.
  bool replay() const;
  std::string inequality() const;
};

struct MeasureEstimate {
  std::string constant;
  bool exploratory = false;
  std::vector<Approximant> approximants;
  std::vector<ExponentCertificate> certificates;
  std::optional<Rat> max_certified;
};

/// Exponents to try for approximant n.
using ExponentSchedule = std::function<std::vector<Rat>(std::size_t n)>;

ExponentSchedule fixed_exponents(std::vector<Rat> mus);
/// mu = n + offset.
ExponentSchedule shifted_index_exponent(long offset);

ExponentCertificate certify_exponent(const Approximant& a, const Rat& mu);

MeasureEstimate measure_scan(std::string constant, const std::vector<Approximant>& approximants,
                             const ExponentSchedule& schedule, bool exploratory = false);
/// Uses the catalog entry's series (or its SCF when it has no series).
MeasureEstimate measure_scan(const CatalogEntry& entry, std::size_t depth, const ExponentSchedule& schedule);

/// Exact finite forms of the telescoping and parity identities of the
/// Sylvester-type family (k, l), for truncation points N = 0..depth.
CheckReport telescope_suite(unsigned long k, unsigned long ell, std::size_t depth);

enum class ConjectureTarget { InvE, E };

/// Values common to convergents 0..depth_convergents of the SCF and Taylor
/// partial sums 0..depth_partial_sums, in increasing order.
std::vector<Rat> conjecture_scan(ConjectureTarget target, std::size_t depth_convergents,
                                 std::size_t depth_partial_sums);

/// gcd(a_n, a_m) = 1 for odd n >= 1 and even m >= 2 up to depth, for C_{k,1}.
CheckReport coprime_check(unsigned long k, std::size_t depth);

struct DigitsResult {
  Rat approximation;
  Rat error_bound;  // |value - approximation| <= error_bound
  std::size_t terms = 0;
  CertifiedDecimal certified;

  /// `digits` fraction digits of the approximation, truncated.
  std::string truncated(std::size_t digits) const;
};

/// Sums the series (or walks the convergents) until `digits` fraction digits
/// are certified by the tail bound, the value is exact, or `max_terms` terms
/// have been used.
DigitsResult compute_digits(const AnySeries& series, std::size_t digits, std::size_t max_terms = 4096);
DigitsResult compute_digits(const SimpleCF& scf, std::size_t digits, std::size_t max_terms = 4096);
DigitsResult compute_digits(const CatalogEntry& entry, std::size_t digits, std::size_t max_terms = 4096);

/// Named verification suites run by `verify`.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument on an unknown name.
std::vector<CheckReport> run_suite(const std::string& name, std::size_t depth);

}  // namespace altcf
