#include "altcf/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace altcf {

namespace {

using nlohmann::json;

std::string idx(std::size_t n) { return std::to_string(n); }

bool series_has(const AnySeries& s, std::size_t n) {
  return std::visit([n](const auto& x) { return x.has(n); }, s);
}

Rat series_term(const AnySeries& s, std::size_t n) {
  return std::visit([n](const auto& x) { return x.term(n); }, s);
}

// Largest N <= depth such that terms 0..N exist, or nullopt for an empty stream.
std::optional<std::size_t> available(const AnySeries& s, std::size_t depth) {
  if (!series_has(s, 0)) return std::nullopt;
  std::size_t n = 0;
  while (n < depth && series_has(s, n + 1)) ++n;
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Equivalence

EquivalenceReport verify_equivalence(const AnySeries& series, const GCF& cf, std::size_t depth) {
  EquivalenceReport r;
  r.depth = depth;
  ConvergentState<Rat> st(cf.a0());
  Rat sum(0);
  bool alive = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    bool match = false;
    if (alive && series_has(series, n) && cf.has_element(n + 1)) {
      const auto& e = cf.element(n + 1);
      st.advance(e.b, e.a);
      sum += series_term(series, n);
      match = sum == st.p_cur / st.q_cur;
    } else {
      alive = false;
    }
    r.matches.push_back(match);
    if (!match && !r.first_mismatch) r.first_mismatch = n;
  }
  return r;
}

EquivalenceReport verify_equivalence(const AnySeries& series, const SimpleCF& cf, std::size_t depth) {
  return verify_equivalence(series, cf.as_gcf(), depth);
}

SparsePoly::SparsePoly(long c) : SparsePoly(Integer(c)) {}

SparsePoly::SparsePoly(const Integer& c) { add(Integer(0), c); }

SparsePoly SparsePoly::monomial(const Integer& coefficient, const Integer& exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  SparsePoly f;
  f.add(exponent, coefficient);
  return f;
}

void SparsePoly::add(const Integer& exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer SparsePoly::evaluate(const Integer& x) const {
  Integer out = 0;
  for (const auto& [e, c] : terms_) {
    if (!e.fits_ulong_p() || (x != 0 && x != 1 && x != -1 && e.get_ui() > digit_cap())) {
      throw DigitCapExceeded("X^" + to_string(e) + " exceeds the digit cap");
    }
    out += c * pow(x, e.get_ui());
  }
  return out;
}

SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly h = f;
  for (const auto& [e, c] : g.terms_) h.add(e, c);
  return h;
}

SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly h = f;
  for (const auto& [e, c] : g.terms_) h.add(e, Integer(-c));
  return h;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly h;
  for (const auto& [e1, c1] : f.terms_) {
    for (const auto& [e2, c2] : g.terms_) h.add(Integer(e1 + e2), Integer(c1 * c2));
  }
  return h;
}

EquivalenceReport verify_equivalence_powers(const Stream<Integer>& exponents, std::size_t depth) {
  EquivalenceReport r;
  r.depth = depth;
  auto X = [&](std::size_t i) { return SparsePoly::monomial(Integer(1), exponents[i]); };
  ConvergentState<SparsePoly> st(Integer(0));
  std::vector<Integer> E;  // E_n = e_0 + ... + e_n, so A_0...A_n = X^{E_n}
  for (std::size_t n = 0; n <= depth; ++n) {
    bool match = false;
    if (exponents.has(n)) {
      E.push_back(n == 0 ? exponents[0] : Integer(E.back() + exponents[n]));
      if (n == 0) {
        st.advance(SparsePoly(1), X(0));
      } else {
        st.advance(X(n - 1), X(n) - SparsePoly(1));
      }
      // S_n = P / X^{E_n} with P = sum_i (-1)^i X^{E_n - E_i}.
      SparsePoly P;
      for (std::size_t i = 0; i <= n; ++i) {
        P = P + SparsePoly::monomial(Integer(i % 2 == 0 ? 1 : -1), Integer(E[n] - E[i]));
      }
      match = st.p_cur * SparsePoly::monomial(Integer(1), E[n]) == P * st.q_cur;
    }
    r.matches.push_back(match);
    if (!match && !r.first_mismatch) r.first_mismatch = n;
    if (!exponents.has(n)) break;
  }
  while (r.matches.size() < depth + 1) r.matches.push_back(false);
  return r;
}

// ---------------------------------------------------------------------------
// Reports

void CheckReport::fail(const std::string& why) {
  if (pass) first_failure = why;
  pass = false;
}

json CheckReport::to_json() const {
  json j;
  j["check"] = check;
  j["params"] = params;
  j["depth"] = depth;
  j["pass"] = pass;
  j["first_failure"] = first_failure ? json(*first_failure) : json(nullptr);
  j["witnesses"] = witnesses;
  return j;
}

CheckReport q_product_check(const SimpleCF& scf, const TypeIISeries& A, std::size_t depth) {
  CheckReport r;
  r.check = "q_product";
  r.depth = depth;
  auto eq = verify_equivalence(A, scf, depth);
  if (!eq.all_match()) {
    r.fail("precondition: continued fraction is not equivalent to the series at n = " + idx(*eq.first_mismatch));
    return r;
  }
  auto conv = simple_convergents(scf, depth + 1);
  for (std::size_t n = 0; n <= depth; ++n) {
    const Integer& qn = conv[n].q;
    const Integer& qn1 = conv[n + 1].q;
    if (qn * qn1 != A.product(n)) r.fail("q_" + idx(n) + " q_" + idx(n + 1) + " != A_0...A_" + idx(n));
    if (gcd(qn, qn1) != 1) r.fail("gcd(q_" + idx(n) + ", q_" + idx(n + 1) + ") != 1");
    bool divides_next = true;
    if (scf.has_quotient(n + 2)) {
      divides_next = divides(qn, scf.quotient(n + 2));
      if (!divides_next) r.fail("q_" + idx(n) + " does not divide a_" + idx(n + 2));
    }
    r.witnesses.push_back({{"n", n}, {"q_n", to_string(qn)}, {"q_n1", to_string(qn1)}, {"q_n_divides_a_n2", divides_next}});
  }
  return r;
}

WSequence w_sequence(const SimpleCF& scf, std::size_t depth) {
  WSequence out;
  std::size_t reach = 0;
  while (reach < depth && scf.has_quotient(reach + 1)) ++reach;
  auto conv = simple_convergents(scf, reach);
  if (!scf.has_quotient(1)) return out;
  out.w.push_back(scf.quotient(1));
  for (std::size_t n = 0; n + 1 <= depth && scf.has_quotient(n + 2) && n < conv.size(); ++n) {
    const Integer& a = scf.quotient(n + 2);
    const Integer& q = conv[n].q;
    if (!divides(q, a)) {
      out.non_integral_at = n + 1;
      break;
    }
    out.w.push_back(a / q);
  }
  for (std::size_t n = 1; n < out.w.size() && n < conv.size(); ++n) {
    Integer lhs = out.w[n] * conv[n - 1].q;
    if (lhs * lhs >= conv[n].q) out.sqrt_hits.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Irrationality exponents

std::vector<Approximant> series_approximants(const AnySeries& series, std::size_t depth) {
  std::vector<Approximant> out;
  if (depth == 0) return out;
  auto reach = available(series, depth - 1);
  if (!reach) return out;
  for (const auto& ps : partial_sums(series, *reach)) {
    if (ps.tail_bound.sign() == 0) break;  // the series ended: ps.sum is the value itself
    out.push_back({ps.n + 1, ps.sum.num(), ps.sum.den(), ps.tail_bound});
  }
  return out;
}

std::vector<Approximant> scf_approximants(const SimpleCF& scf, std::size_t depth) {
  std::vector<Approximant> out;
  // The bound is strict only while a further quotient exists.
  std::size_t reach = 0;
  while (reach < depth && scf.has_quotient(reach + 3)) ++reach;
  if (reach == 0) return out;
  auto conv = simple_convergents(scf, reach + 1);
  for (std::size_t n = 1; n <= reach; ++n) {
    out.push_back({n, conv[n].p, conv[n].q, Rat(Integer(1), Integer(conv[n].q * conv[n + 1].q))});
  }
  return out;
}

namespace {

bool exponent_inequality(const Rat& gap_bound, const Integer& q, const Rat& mu) {
  if (!mu.num().fits_ulong_p() || !mu.den().fits_ulong_p()) throw std::invalid_argument("exponent too large");
  auto a = mu.num().get_ui();
  auto b = mu.den().get_ui();
  if (decimal_digits(q) * a > digit_cap() || decimal_digits(gap_bound.den()) * b > digit_cap()) {
    throw DigitCapExceeded("exponent certificate for mu = " + mu.str() + " exceeds the digit cap");
  }
  return pow(gap_bound.num(), b) * pow(q, a) <= pow(gap_bound.den(), b);
}

}  // namespace

bool ExponentCertificate::replay() const { return exponent_inequality(gap_bound, q, mu) == certified; }

std::string ExponentCertificate::inequality() const {
  auto a = to_string(mu.num());
  auto b = to_string(mu.den());
  return "(" + to_string(gap_bound.num()) + ")^" + b + " * q^" + a + (certified ? " <= " : " > ") + "(" +
         to_string(gap_bound.den()) + ")^" + b + " with q = " + to_string(q);
}

ExponentCertificate certify_exponent(const Approximant& a, const Rat& mu) {
  if (mu.sign() <= 0) throw std::invalid_argument("exponent must be positive, got " + mu.str());
  return ExponentCertificate{a.n, mu, a.q, a.gap_bound, exponent_inequality(a.gap_bound, a.q, mu)};
}

ExponentSchedule fixed_exponents(std::vector<Rat> mus) {
  return [mus = std::move(mus)](std::size_t) { return mus; };
}

ExponentSchedule shifted_index_exponent(long offset) {
  return [offset](std::size_t n) {
    long mu = static_cast<long>(n) + offset;
    return mu > 0 ? std::vector<Rat>{Rat(mu)} : std::vector<Rat>{};
  };
}

MeasureEstimate measure_scan(std::string constant, const std::vector<Approximant>& approximants,
                             const ExponentSchedule& schedule, bool exploratory) {
  MeasureEstimate m;
  m.constant = std::move(constant);
  m.exploratory = exploratory;
  m.approximants = approximants;
  for (const auto& a : approximants) {
    for (const auto& mu : schedule(a.n)) {
      auto c = certify_exponent(a, mu);
      if (c.certified && (!m.max_certified || mu > *m.max_certified)) m.max_certified = mu;
      m.certificates.push_back(std::move(c));
    }
  }
  return m;
}

MeasureEstimate measure_scan(const CatalogEntry& entry, std::size_t depth, const ExponentSchedule& schedule) {
  auto approx = entry.kind == SeriesKind::Scf ? scf_approximants(*entry.scf, depth)
                                              : series_approximants(entry.primary_series(), depth);
  return measure_scan(entry.name, approx, schedule, entry.exploratory);
}

// ---------------------------------------------------------------------------
// Identities

CheckReport telescope_suite(unsigned long k, unsigned long ell, std::size_t depth) {
  CheckReport r;
  r.check = "telescope";
  r.params = {{"k", k}, {"l", ell}};
  r.depth = depth;
  auto fam = sylvester(k, ell);
  auto s = [&](std::size_t i) -> const Integer& { return fam.s(i); };
  auto inv = [](const Integer& d) { return Rat(Integer(1), d); };
  auto sl = [&](std::size_t i) { return pow(s(i), ell); };
  // Every identity is checked at the truncations that use only s_0..s_{depth+1}.
  const std::size_t top = depth + 1;

  // C_m = sum_{i<=m} (-1)^i / (s_{i+1} - 1), for m + 1 <= top.
  std::vector<Rat> C;
  {
    Rat acc(0);
    for (std::size_t m = 0; m + 1 <= top; ++m) {
      Rat t = inv(Integer(s(m + 1) - 1));
      acc += m % 2 == 0 ? t : -t;
      C.push_back(acc);
    }
  }

  auto record = [&](const std::string& name, std::size_t checked) {
    r.witnesses.push_back({{"identity", name}, {"truncations_checked", checked}});
  };

  if (auto bad = fam.check_invariants(top)) r.fail("Sylvester invariants: " + *bad);
  record("s_{n+1} - 1 = (s_n - 1) s_n^l, pairwise coprime", top + 1);

  {
    Rat lhs(0);
    std::size_t checked = 0;
    for (std::size_t N = 0; N + 1 <= top; ++N, ++checked) {
      lhs += Rat(Integer(sl(N) - 1), Integer(s(N + 1) - 1));
      if (lhs != Rat(1) - inv(Integer(s(N + 1) - 1))) r.fail("sum (s_n^l - 1)/(s_{n+1} - 1) at N = " + idx(N));
    }
    record("sum_{n<=N} (s_n^l - 1)/(s_{n+1} - 1) = 1 - 1/(s_{N+1} - 1)", checked);
  }
  {
    Rat lhs(0);
    std::size_t checked = 0;
    for (std::size_t N = 0; 2 * N + 2 <= top; ++N, ++checked) {
      lhs += Rat(Integer(sl(2 * N + 1) - 1), Integer(s(2 * N + 2) - 1));
      if (lhs != C[2 * N + 1]) r.fail("odd-index sum vs C partial sum at N = " + idx(N));
    }
    record("sum_{n<=N} (s_{2n+1}^l - 1)/(s_{2n+2} - 1) = C_{2N+1}", checked);
  }

  if (ell == 1) {
    Rat first = inv(Integer(s(1) - 1));
    {
      Rat lhs(0);
      std::size_t checked = 0;
      for (std::size_t N = 0; N + 2 <= top; ++N, ++checked) {
        lhs += inv(s(N + 1));
        if (lhs != first - inv(Integer(s(N + 2) - 1))) r.fail("reciprocal telescoping at N = " + idx(N));
      }
      record("sum_{n<=N} 1/s_{n+1} = 1/(s_1 - 1) - 1/(s_{N+2} - 1)", checked);
    }
    {
      Rat even(0);
      Rat odd(0);
      std::size_t checked = 0;
      for (std::size_t N = 0; 2 * N + 2 <= top; ++N, ++checked) {
        even += inv(s(2 * N + 1));
        odd += inv(s(2 * N + 2));
        if (even != C[2 * N + 1]) r.fail("greedy Egyptian expansion of C at N = " + idx(N));
        if (2 * N + 3 <= top && odd != first - C[2 * N + 2]) r.fail("odd reciprocal sum at N = " + idx(N));
      }
      record("sum_{n<=N} 1/s_{2n+1} = C_{2N+1} and sum_{n<=N} 1/s_{2n+2} = 1/(s_1 - 1) - C_{2N+2}", checked);
    }
    {
      Rat lhs(0);
      std::size_t checked = 0;
      for (std::size_t N = 0; N + 2 <= top; ++N, ++checked) {
        Rat t = inv(s(N + 1));
        lhs += N % 2 == 0 ? t : -t;
        if (lhs != C[N] + C[N + 1] - first) r.fail("alternating reciprocal sum at N = " + idx(N));
      }
      record("sum_{n<=N} (-1)^n/s_{n+1} = C_N + C_{N+1} - 1/(s_1 - 1)", checked);
    }
  }

  if (k == 1) {
    auto two = sylvester(2, ell);
    Rat K1(0);
    Rat K2(0);
    Rat C2(0);
    std::size_t checked = 0;
    K1 += inv(Integer(s(1) - 1));
    for (std::size_t N = 0; N + 2 <= top; ++N, ++checked) {
      if (s(N + 1) != two.s(N)) r.fail("s_{n+1}(1,l) != s_n(2,l) at n = " + idx(N));
      K1 += inv(Integer(s(N + 2) - 1));
      K2 += inv(Integer(two.s(N + 1) - 1));
      Rat t = inv(Integer(two.s(N + 1) - 1));
      C2 += N % 2 == 0 ? t : -t;
      if (K1 != Rat(1) + K2) r.fail("K_{1,l} = 1 + K_{2,l} prefix at N = " + idx(N));
      if (C[N + 1] != Rat(1) - C2) r.fail("C_{1,l} = 1 - C_{2,l} prefix at N = " + idx(N));
    }
    record("K_{1,l} = 1 + K_{2,l} and C_{1,l} = 1 - C_{2,l} on prefixes", checked);
  }
  return r;
}

std::vector<Rat> conjecture_scan(ConjectureTarget target, std::size_t depth_convergents,
                                 std::size_t depth_partial_sums) {
  auto scf = target == ConjectureTarget::InvE ? inv_e_scf() : e_scf();
  std::set<Rat> convergent_values;
  for (const auto& c : simple_convergents(scf, depth_convergents)) convergent_values.insert(c.value());
  std::vector<Rat> out;
  Rat sum(0);
  Integer factorial = 1;
  for (std::size_t n = 0; n <= depth_partial_sums; ++n) {
    if (n > 0) factorial *= static_cast<unsigned long>(n);
    bool negative = target == ConjectureTarget::InvE && n % 2 == 1;
    sum += Rat(Integer(negative ? -1 : 1), factorial);
    if (convergent_values.count(sum)) out.push_back(sum);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CheckReport coprime_check(unsigned long k, std::size_t depth) {
  CheckReport r;
  r.check = "coprime";
  r.params = {{"k", k}, {"l", 1}};
  r.depth = depth;
  auto scf = cahen_scf(k, 1);
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= depth; n += 2) {
    for (std::size_t m = 2; m <= depth; m += 2) {
      ++pairs;
      if (gcd(scf.quotient(n), scf.quotient(m)) != 1) r.fail("gcd(a_" + idx(n) + ", a_" + idx(m) + ") != 1");
    }
  }
  r.witnesses.push_back({{"pairs_checked", pairs}});
  return r;
}

// ---------------------------------------------------------------------------
// Digits

std::string DigitsResult::truncated(std::size_t digits) const { return truncate_decimal(approximation, digits); }

namespace {

template <class Step>
DigitsResult adaptive_digits(std::size_t digits, std::size_t max_terms, std::size_t first, Step step) {
  DigitsResult out;
  for (std::size_t n = first;; n = std::min(max_terms, n * 2)) {
    bool last = step(n, out);
    out.certified = render_decimal(out.approximation, out.error_bound, digits);
    if (out.certified.exact || out.certified.certified_digits() >= digits || last || n >= max_terms) return out;
  }
}

}  // namespace

DigitsResult compute_digits(const AnySeries& series, std::size_t digits, std::size_t max_terms) {
  if (!series_has(series, 0)) throw std::invalid_argument("empty series");
  return adaptive_digits(digits, max_terms, 4, [&](std::size_t n, DigitsResult& out) {
    auto reach = *available(series, n - 1);
    const auto ps = partial_sums(series, reach);
    out.approximation = ps.back().sum;
    out.error_bound = ps.back().tail_bound;
    out.terms = reach + 1;
    return reach < n - 1;
  });
}

DigitsResult compute_digits(const SimpleCF& scf, std::size_t digits, std::size_t max_terms) {
  return adaptive_digits(digits, max_terms, 4, [&](std::size_t n, DigitsResult& out) {
    std::size_t reach = 0;
    while (reach < n && scf.has_quotient(reach + 1)) ++reach;
    auto conv = simple_convergents(scf, reach);
    out.approximation = conv.back().value();
    out.terms = reach + 1;
    if (scf.has_quotient(reach + 1)) {
      // |x - p_n/q_n| < 1/(q_n q_{n+1}).
      Integer q_next = scf.quotient(reach + 1) * conv[reach].q + (reach > 0 ? conv[reach - 1].q : Integer(0));
      out.error_bound = Rat(Integer(1), Integer(conv[reach].q * q_next));
      return false;
    }
    out.error_bound = Rat(0);
    return true;
  });
}

DigitsResult compute_digits(const CatalogEntry& entry, std::size_t digits, std::size_t max_terms) {
  if (entry.kind == SeriesKind::Scf) return compute_digits(*entry.scf, digits, max_terms);
  return compute_digits(entry.primary_series(), digits, max_terms);
}

// ---------------------------------------------------------------------------
// Suites

namespace {

const std::vector<std::pair<std::string, std::string>>& reference_digits() {
  static const std::vector<std::pair<std::string, std::string>> table{
      {"fermat", "0.7294270"},
      {"primorial", "0.3623062223"},
      {"davison_shallit", "0.62946502045"},
      {"cahen(1,1)", "0.643410546288338"},
      {"cahen(1,2)", "0.759999019703"},
      {"kellogg_curtiss(1,1)", "1.6910302067"},
  };
  return table;
}

std::vector<CheckReport> digits_suite(std::size_t) {
  std::vector<CheckReport> out;
  for (const auto& [name, expected] : reference_digits()) {
    CheckReport r;
    r.check = "digits";
    r.params = {{"constant", name}};
    auto count = expected.size() - expected.find('.') - 1;
    r.depth = count;
    auto d = compute_digits(catalog(name), count);
    auto got = d.certified.str();
    if (d.certified.certified_digits() < count) r.fail("only " + idx(d.certified.certified_digits()) + " digits certified");
    if (got != expected) r.fail("got " + got + ", expected " + expected);
    r.witnesses.push_back({{"digits", got}, {"terms", d.terms}});
    out.push_back(std::move(r));
  }
  return out;
}

// Deepest n <= depth where S_n vs convergent n+1 can be compared numerically under the digit cap.
EquivalenceReport equivalence_within_cap(const std::string& name, std::size_t depth, std::size_t& reached) {
  for (std::size_t d = depth + 1; d-- > 0;) {
    try {
      auto e = catalog(name);
      auto rep = verify_equivalence(*e.type_ii, typeII_to_cf(*e.type_ii), d);
      reached = d;
      return rep;
    } catch (const DigitCapExceeded&) {
    }
  }
  reached = 0;
  throw DigitCapExceeded(name + ": not even S_0 fits under the digit cap");
}

std::vector<CheckReport> equivalence_suite(std::size_t depth) {
  std::vector<CheckReport> out;
  const std::vector<std::string> names{"golden",     "fermat",     "primorial",  "inv_e",      "sin_inv(3)",
                                       "cos_inv(2)", "davison_shallit", "cahen(1,1)", "cahen(2,1)", "cahen(1,2)",
                                       "liouville_alt"};
  for (const auto& name : names) {
    CheckReport r;
    r.check = "equivalence";
    r.params = {{"constant", name}};
    r.depth = depth;
    auto e = catalog(name);
    auto note = [&](const std::string& form, const EquivalenceReport& rep, std::size_t d) {
      r.witnesses.push_back({{"form", form}, {"checked_to", d}, {"all_match", rep.all_match()}});
      if (!rep.all_match()) r.fail(form + ": S_n != convergent n+1 at n = " + idx(*rep.first_mismatch));
    };
    if (e.power_exponents) {
      std::size_t reached = 0;
      note("type II, exact integers", equivalence_within_cap(name, depth, reached), reached);
      note("type II, identity in Z[X] at X = " + to_string(*e.power_base),
           verify_equivalence_powers(*e.power_exponents, depth), depth);
    } else {
      if (e.type_i) note("type I", verify_equivalence(*e.type_i, typeI_to_cf(*e.type_i), depth), depth);
      if (e.type_ii) note("type II", verify_equivalence(*e.type_ii, typeII_to_cf(*e.type_ii), depth), depth);
      if (e.scf && e.scf_equivalent) note("simple CF", verify_equivalence(e.primary_series(), *e.scf, depth), depth);
    }
    if (e.type_i && e.type_ii) {
      auto a = partial_sums(*e.type_i, depth);
      auto b = partial_sums(*e.type_ii, depth);
      bool same = true;
      for (std::size_t n = 0; n <= depth; ++n) same = same && a[n].sum == b[n].sum;
      if (!same) r.fail("type I and type II forms give different partial sums");
      r.witnesses.push_back({{"form", "type I vs type II partial sums"}, {"identical", same}});
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> theorem_suite(std::size_t depth) {
  std::vector<CheckReport> out;
  for (const std::string name : {"cahen(1,1)", "cahen(2,1)", "cahen(1,2)", "davison_shallit"}) {
    auto e = catalog(name);
    auto r = q_product_check(*e.scf, *e.type_ii, depth);
    r.params = {{"constant", name}};
    if (r.pass) {
      auto w = w_sequence(*e.scf, depth);
      if (w.non_integral_at) r.fail("w_" + idx(*w.non_integral_at) + " is not an integer");
      if (w.sqrt_hits.empty()) r.fail("no n <= " + idx(depth) + " with (w_n q_{n-1})^2 >= q_n");
      json ws = json::array();
      for (const auto& x : w.w) ws.push_back(to_string(x));
      r.witnesses.push_back({{"w", ws}, {"sqrt_hits", w.sqrt_hits}});
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> measure_suite(std::size_t depth) {
  std::vector<CheckReport> out;
  auto witness = [](const MeasureEstimate& m, CheckReport& r, bool only_certified) {
    for (const auto& c : m.certificates) {
      if (only_certified && !c.certified) continue;
      r.witnesses.push_back({{"n", c.n}, {"mu", c.mu.str()}, {"certified", c.certified}, {"replays", c.replay()}});
    }
  };
  {
    auto d = std::min<std::size_t>(depth, 5);
    CheckReport r;
    r.check = "measure";
    r.params = {{"constant", "liouville_alt"}, {"mu", "n+2"}};
    r.depth = d;
    auto m = measure_scan(catalog("liouville_alt"), d, shifted_index_exponent(2));
    if (m.certificates.size() != d) r.fail("expected " + idx(d) + " approximants");
    for (const auto& c : m.certificates) {
      if (!c.certified) r.fail("|lambda - P_n/Q_n| < Q_n^-(n+2) not certified at n = " + idx(c.n));
      if (!c.replay()) r.fail("certificate does not replay at n = " + idx(c.n));
    }
    witness(m, r, false);
    out.push_back(std::move(r));
  }
  for (const std::string name : {"cahen(1,1)", "davison_shallit"}) {
    CheckReport r;
    r.check = "measure";
    r.params = {{"constant", name}, {"mu", "5/2"}};
    r.depth = depth;
    auto m = measure_scan(catalog(name), depth, fixed_exponents({Rat(Integer(5), Integer(2))}));
    if (!m.max_certified) r.fail("no n <= " + idx(depth) + " with gap < q_n^(-5/2)");
    for (const auto& c : m.certificates) {
      if (!c.replay()) r.fail("certificate does not replay at n = " + idx(c.n));
    }
    witness(m, r, true);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> decompose_suite(std::size_t depth) {
  std::vector<CheckReport> out;
  auto expect = [&](const std::string& name, std::optional<std::size_t> fail_at, std::size_t d) {
    CheckReport r;
    r.check = "decompose";
    r.params = {{"constant", name}};
    r.depth = d;
    auto e = catalog(name);
    auto res = decompose_to_M(e.type_ii->stream(), d);
    if (auto* f = std::get_if<DecomposeFailure>(&res)) {
      r.witnesses.push_back({{"fails_at", f->index}, {"reason", f->reason}});
      if (!fail_at) r.fail("unexpected failure at index " + idx(f->index) + ": " + f->reason);
      else if (*fail_at != f->index) r.fail("failed at index " + idx(f->index) + ", expected " + idx(*fail_at));
    } else {
      const auto& c = std::get<MNConstruction>(res);
      json ms = json::array();
      for (std::size_t n = 0; n <= d; ++n) ms.push_back(to_string(c.M(n)));
      r.witnesses.push_back({{"M", ms}});
      if (fail_at) r.fail("expected failure at index " + idx(*fail_at));
      for (std::size_t n = 0; n <= d && r.pass; ++n) {
        if (name == "davison_shallit" && c.M(n) != 1) r.fail("M_" + idx(n) + " != 1");
      }
    }
    out.push_back(std::move(r));
  };
  expect("davison_shallit", std::nullopt, depth);
  expect("liouville_alt", 1, std::min<std::size_t>(depth, 3));
  expect("inv_e", 3, depth);
  return out;
}

std::vector<CheckReport> conjecture_suite(std::size_t) {
  std::vector<CheckReport> out;
  auto run = [&](ConjectureTarget t, const std::string& name, std::vector<Rat> expected) {
    CheckReport r;
    r.check = "conjecture_scan";
    r.params = {{"target", name}, {"convergents", 50}, {"partial_sums", 50}};
    r.depth = 50;
    auto got = conjecture_scan(t, 50, 50);
    std::sort(expected.begin(), expected.end());
    json vals = json::array();
    for (const auto& v : got) vals.push_back(v.str());
    r.witnesses.push_back({{"coincidences", vals}});
    if (got != expected) r.fail("coincidence set differs from the expected set");
    out.push_back(std::move(r));
  };
  run(ConjectureTarget::InvE, "inv_e", {Rat(0), Rat(1, 2), Rat(1, 3), Rat(3, 8)});
  run(ConjectureTarget::E, "e", {Rat(2), Rat(8, 3)});
  return out;
}

std::vector<CheckReport> identity_suite(std::size_t depth) {
  std::vector<CheckReport> out;
  for (long b0 : {1L, 2L, 3L}) {
    CheckReport r;
    r.check = "sharpness";
    r.params = {{"B0", b0}};
    r.depth = std::min<std::size_t>(depth, 5);
    for (std::size_t N = 0; N <= r.depth; ++N) {
      auto s = sharpness_identity(Integer(b0), N);
      if (!s.holds) r.fail("identity fails at N = " + idx(N));
    }
    r.witnesses.push_back({{"truncations_checked", r.depth + 1}});
    out.push_back(std::move(r));
  }
  for (unsigned long k : {1UL, 2UL, 3UL}) {
    for (unsigned long l : {1UL, 2UL}) out.push_back(telescope_suite(k, l, std::min<std::size_t>(depth, 6)));
  }
  for (unsigned long k : {1UL, 2UL}) out.push_back(coprime_check(k, std::min<std::size_t>(depth, 8)));
  for (auto [k, l] : {std::pair{1UL, 1UL}, std::pair{1UL, 2UL}, std::pair{2UL, 1UL}}) {
    CheckReport r;
    r.check = "cahen_bound";
    r.params = {{"k", k}, {"l", l}};
    r.depth = depth;
    auto rep = cahen_bound_check(k, l, depth);
    for (const auto& row : rep.rows) {
      r.witnesses.push_back({{"n", row.n}, {"a_n_digits", decimal_digits(row.a_n)}, {"holds", row.holds}});
      if (!row.holds) r.fail("a_" + idx(row.n) + " <= (k^l + 1)^((l+1)^(n-4))");
    }
    out.push_back(std::move(r));
  }
  return out;
}

using SuiteFn = std::vector<CheckReport> (*)(std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"digits", digits_suite},       {"equivalence", equivalence_suite}, {"theorem", theorem_suite},
      {"measure", measure_suite},     {"decompose", decompose_suite},     {"conjectures", conjecture_suite},
      {"identities", identity_suite},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out{"all"};
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

std::vector<CheckReport> run_suite(const std::string& name, std::size_t depth) {
  std::vector<CheckReport> out;
  for (const auto& [n, fn] : suites()) {
    if (name == "all" || name == n) {
      auto part = fn(depth);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  if (out.empty()) {
    std::string msg = "unknown suite '" + name + "'; known suites:";
    for (const auto& s : suite_names()) msg += " " + s;
    throw std::invalid_argument(msg);
  }
  return out;
}

}  // namespace altcf
