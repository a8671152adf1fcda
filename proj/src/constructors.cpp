#include "altcf/constructors.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace altcf {

namespace {

std::string idx(std::size_t n) { return std::to_string(n); }

using Rule = Stream<Integer>::Rule;

}  // namespace

// ---------------------------------------------------------------------------
// M -> (N, A, SCF)

MNConstruction::MNConstruction(Stream<Integer> M)
    : M_(M.map([](const Integer& m, std::size_t i) {
        if (m < 1) throw std::invalid_argument("M_" + idx(i) + " = " + to_string(m) + " is not a positive integer");
        return m;
      })),
      N_(Stream<Integer>(Rule([M = M_](const std::deque<Integer>& prefix) -> std::optional<Integer> {
        // prefix[j] holds N_{j+1}.
        auto j = prefix.size();
        if (j == 0) return Integer(1);
        if (!M.has(j - 1)) return std::nullopt;
        if (j == 1) return M[0];
        Integer next = (M[j - 1] * prefix[j - 1] + 1) * prefix[j - 2];
        check_digit_cap(next, "N_" + idx(j + 1));
        return next;
      }))),
      A_(Stream<Integer>(Rule([M = M_, N = N_](const std::deque<Integer>& prefix) -> std::optional<Integer> {
        auto n = prefix.size();
        if (!M.has(n)) return std::nullopt;
        if (n == 0) return M[0];
        Integer a = M[n] * N[n] + 1;
        check_digit_cap(a, "A_" + idx(n));
        return a;
      }))),
      scf_(Integer(0), Stream<Integer>(Rule([M = M_, N = N_](const std::deque<Integer>& prefix) -> std::optional<Integer> {
        // prefix[i] holds a_{i+1} = M_i N_i (a_1 = M_0).
        auto i = prefix.size();
        if (!M.has(i)) return std::nullopt;
        if (i == 0) return M[0];
        return Integer(M[i] * N[i - 1]);
      }))) {}

const Integer& MNConstruction::N(std::size_t n) const {
  if (n == 0) throw std::out_of_range("N is indexed from 1");
  return N_[n - 1];
}

MNConstruction build_from_M(Stream<Integer> M, std::size_t depth) {
  MNConstruction c(std::move(M));
  for (std::size_t n = 0; n <= depth && c.M_stream().has(n); ++n) {
    (void)c.A(n);
    (void)c.scf().quotient(n + 1);
  }
  return c;
}

std::variant<MNConstruction, DecomposeFailure> decompose_to_M(const Stream<Integer>& A, std::size_t depth) {
  std::vector<Integer> M;
  if (!A.has(0)) return DecomposeFailure{0, "empty A stream"};
  if (A[0] < 1) return DecomposeFailure{0, "A_0 = " + to_string(A[0]) + " is not a positive integer"};
  M.push_back(A[0]);
  // N[j] holds N_{j+1}.
  std::vector<Integer> N{Integer(1), A[0]};
  for (std::size_t n = 1; n <= depth && A.has(n); ++n) {
    Integer shifted = A[n] - 1;
    const Integer& d = N[n];  // N_{n+1}
    if (shifted < 1 || !divides(d, shifted)) {
      return DecomposeFailure{n, "N_" + idx(n + 1) + " = " + to_string(d) + " does not divide A_" + idx(n) +
                                     " - 1 = " + to_string(shifted)};
    }
    M.push_back(shifted / d);
    N.push_back(A[n] * N[n - 1]);  // N_{n+2} = A_n N_n
  }
  auto depth_reached = M.size() - 1;
  return build_from_M(Stream<Integer>(std::move(M)), depth_reached);
}

// ---------------------------------------------------------------------------
// Sylvester-type sequences

SylvesterFamily::SylvesterFamily(unsigned long k, unsigned long ell) : k_(k), ell_(ell) {
  if (k < 1 || ell < 1) throw std::invalid_argument("Sylvester family needs k >= 1 and l >= 1");
  auto product = std::make_shared<Integer>(1);
  s_ = Stream<Integer>(Rule([k, ell, product](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    auto n = prefix.size();
    if (n == 0) {
      *product = k;
      return Integer(k);
    }
    check_digit_cap(*product, "s_" + idx(n) + " base product");
    if (decimal_digits(*product) * ell > digit_cap()) {
      throw DigitCapExceeded("s_" + idx(n) + "(" + std::to_string(k) + "," + std::to_string(ell) +
                             ") would exceed the digit cap of " + std::to_string(digit_cap()) +
                             " (set ALTCF_DIGIT_CAP to raise it)");
    }
    Integer s = pow(*product, ell) + 1;
    *product *= s;
    return s;
  }));
}

std::optional<std::string> SylvesterFamily::check_invariants(std::size_t depth) const {
  for (std::size_t n = 1; n < depth; ++n) {
    Integer lhs = s(n + 1) - 1;
    Integer rhs = (s(n) - 1) * pow(s(n), ell_);
    if (lhs != rhs) return "s_" + idx(n + 1) + " - 1 != (s_" + idx(n) + " - 1) s_" + idx(n) + "^l";
  }
  for (std::size_t i = 0; i <= depth; ++i) {
    for (std::size_t j = i + 1; j <= depth; ++j) {
      if (gcd(s(i), s(j)) != 1) return "gcd(s_" + idx(i) + ", s_" + idx(j) + ") != 1";
    }
  }
  return std::nullopt;
}

SylvesterFamily sylvester(unsigned long k, unsigned long ell) { return SylvesterFamily(k, ell); }

SimpleCF cahen_scf(unsigned long k, unsigned long ell) {
  auto fam = sylvester(k, ell);
  struct State {
    Integer parity_product[2] = {Integer(1), Integer(1)};  // prod of s_i^l over i < n, by parity of i
  };
  auto st = std::make_shared<State>();
  Stream<Integer> quotients(Rule([fam, ell, st](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    // prefix[n] holds a_{n+1}.
    auto n = prefix.size();
    Integer sl = pow(fam.s(n), ell);
    Integer a;
    if (n == 0) {
      a = sl;
    } else {
      Integer num = (sl - 1) * st->parity_product[n % 2];
      const Integer& den = st->parity_product[(n + 1) % 2];
      if (!divides(den, num)) {
        throw InternalError("partial quotient a_" + idx(n + 1) + " of C_{k,l} is not an integer");
      }
      a = num / den;
    }
    st->parity_product[n % 2] *= sl;
    return a;
  }));
  return SimpleCF(Integer(0), std::move(quotients));
}

SimpleCF cahen_scf_closed_form(unsigned long k) {
  auto fam = sylvester(k, 1);
  auto parity_product = std::make_shared<std::array<Integer, 2>>(std::array<Integer, 2>{Integer(1), Integer(1)});
  Stream<Integer> quotients(Rule([fam, parity_product](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    auto m = prefix.size() + 1;  // computing a_m
    if (m == 1) return fam.s(0);
    if (m == 2) return Integer(1);
    auto i = m - 3;
    (*parity_product)[i % 2] *= fam.s(i);
    const Integer& p = (*parity_product)[i % 2];
    return Integer(p * p);
  }));
  return SimpleCF(Integer(0), std::move(quotients));
}

TypeIISeries cahen_series(unsigned long k, unsigned long ell) {
  auto fam = sylvester(k, ell);
  auto running = std::make_shared<Integer>(1);
  Stream<Integer> A(Rule([fam, ell, running](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    auto n = prefix.size();
    Integer a = pow(fam.s(n), ell);
    *running *= a;
    if (*running != fam.s(n + 1) - 1) {
      throw InternalError("A_0...A_" + idx(n) + " != s_" + idx(n + 1) + " - 1");
    }
    return a;
  }));
  return TypeIISeries(std::move(A));
}

EngelSeries kc_series(unsigned long k, unsigned long ell) {
  auto fam = sylvester(k, ell);
  auto running = std::make_shared<Integer>(1);
  Stream<Integer> A(Rule([fam, ell, running](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    auto n = prefix.size();
    Integer a = pow(fam.s(n), ell);
    *running *= a;
    if (*running != fam.s(n + 1) - 1) {
      throw InternalError("A_0...A_" + idx(n) + " != s_" + idx(n + 1) + " - 1");
    }
    return a;
  }));
  return EngelSeries(std::move(A), static_cast<unsigned>(ell));
}

CahenBoundReport cahen_bound_check(unsigned long k, unsigned long ell, std::size_t depth) {
  CahenBoundReport r;
  r.k = k;
  r.ell = ell;
  auto scf = cahen_scf(k, ell);
  Integer base = pow(Integer(k), ell) + 1;
  r.holds = true;
  for (std::size_t n = 4; n <= depth; ++n) {
    Integer e = pow(Integer(ell + 1), n - 4);
    if (!e.fits_ulong_p()) throw DigitCapExceeded("bound exponent too large at n = " + idx(n));
    CahenBoundRow row{n, scf.quotient(n), pow(base, e.get_ui()), false};
    row.holds = row.a_n > row.bound;
    r.holds = r.holds && row.holds;
    r.rows.push_back(std::move(row));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fixed sequences

Stream<Integer> primes() {
  return Stream<Integer>(Rule([](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    if (prefix.empty()) return Integer(2);
    Integer c = prefix.back() + 1;
    for (;; ++c) {
      bool prime = true;
      for (const auto& p : prefix) {
        if (p * p > c) break;
        if (divides(p, c)) {
          prime = false;
          break;
        }
      }
      if (prime) return c;
    }
  }));
}

namespace {

// Quotients a_1, a_2, ... shared by e - 1 and e: 1, 2, 1, 1, 4, 1, 1, 6, ...
Stream<Integer> e_quotients() {
  return Stream<Integer>::by_index([](std::size_t i) {
    auto m = i + 1;
    return m % 3 == 2 ? Integer(2 * (m + 1) / 3) : Integer(1);
  });
}

}  // namespace

SimpleCF e_minus_1_scf() { return SimpleCF(Integer(1), e_quotients()); }

SimpleCF e_scf() { return SimpleCF(Integer(2), e_quotients()); }

SimpleCF inv_e_scf() {
  auto eq = e_quotients();
  return SimpleCF(Integer(0), Stream<Integer>::by_index([eq](std::size_t i) {
    return i == 0 ? Integer(2) : eq[i - 1];
  }));
}

Stream<Integer> liouville_alt_exponents() {
  return Stream<Integer>::by_index([](std::size_t n) {
    if (n == 0) return Integer(2);
    Integer f = 1;  // (n+1)!
    for (std::size_t i = 2; i <= n + 1; ++i) f *= static_cast<unsigned long>(i);
    return Integer(f * static_cast<unsigned long>(n + 1));
  });
}

// ---------------------------------------------------------------------------
// Catalog

std::string_view kind_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::TypeI: return "typeI";
    case SeriesKind::TypeII: return "typeII";
    case SeriesKind::Engel: return "engel";
    case SeriesKind::Scf: return "scf";
  }
  return "?";
}

AnySeries CatalogEntry::primary_series() const {
  switch (kind) {
    case SeriesKind::TypeI: return *type_i;
    case SeriesKind::TypeII: return *type_ii;
    case SeriesKind::Engel: return *engel;
    case SeriesKind::Scf: break;
  }
  throw std::logic_error(name + " is given by its continued fraction, not by a series");
}

namespace {

Integer two_pow_two_pow(std::size_t n, const char* what) {
  if (n >= 40 || (1UL << n) / 3 > digit_cap()) {
    throw DigitCapExceeded(std::string(what) + "_" + idx(n) + " = 2^(2^" + idx(n) + ") exceeds the digit cap");
  }
  return pow(Integer(2), 1UL << n);
}

struct ParsedName {
  std::string base;
  std::vector<unsigned long> args;
};

ParsedName parse_name(std::string_view name) {
  ParsedName p;
  auto open = name.find('(');
  if (open == std::string_view::npos) {
    p.base = std::string(name);
    return p;
  }
  if (name.back() != ')') throw std::invalid_argument("malformed catalog name '" + std::string(name) + "'");
  p.base = std::string(name.substr(0, open));
  auto inner = name.substr(open + 1, name.size() - open - 2);
  while (!inner.empty()) {
    auto comma = inner.find(',');
    auto tok = inner.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0) {
      throw std::invalid_argument("catalog parameters must be positive integers in '" + std::string(name) + "'");
    }
    p.args.push_back(v);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return p;
}

unsigned long arg(const ParsedName& p, std::size_t i, std::size_t arity) {
  if (p.args.size() > arity) {
    throw std::invalid_argument(p.base + " takes at most " + std::to_string(arity) + " parameter(s)");
  }
  return i < p.args.size() ? p.args[i] : 1;
}

std::string unknown_name_message(std::string_view name) {
  std::string msg = "unknown catalog name '" + std::string(name) + "'; known names:";
  for (const auto& n : catalog_names()) msg += " " + n;
  return msg;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"fermat",        "primorial",    "inv_e",           "sin_inv(k)",    "cos_inv(k)", "golden",
          "liouville_alt", "davison_shallit", "cahen(k,l)", "kellogg_curtiss(k,l)", "e_minus_1_scf"};
}

CatalogEntry catalog(std::string_view name) {
  auto p = parse_name(name);
  const auto& b = p.base;
  auto no_args = [&] {
    if (!p.args.empty()) throw std::invalid_argument(b + " takes no parameters");
  };

  if (b == "fermat") {
    no_args();
    CatalogEntry e{"fermat", SeriesKind::TypeI, "alternating reciprocals of 2^(2^n) - 1 (A051179)"};
    e.type_i = TypeISeries(Stream<Integer>::by_index([](std::size_t n) {
      return Integer(two_pow_two_pow(n, "B") - 1);
    }));
    // Product form: 2^(2^n) - 1 = F_0 F_1 ... F_{n-1} with Fermat numbers F_j.
    e.type_ii = TypeIISeries(Stream<Integer>::by_index([](std::size_t n) {
      return n == 0 ? Integer(1) : Integer(two_pow_two_pow(n - 1, "A") + 1);
    }));
    return e;
  }
  if (b == "primorial") {
    no_args();
    CatalogEntry e{"primorial", SeriesKind::TypeII, "alternating reciprocals of primorials (A132120)"};
    e.type_ii = TypeIISeries(primes());
    e.exploratory = true;
    return e;
  }
  if (b == "inv_e") {
    no_args();
    CatalogEntry e{"inv_e", SeriesKind::TypeII, "1/e = sum_{n>=2} (-1)^n / n!"};
    e.type_ii = TypeIISeries(Stream<Integer>::by_index([](std::size_t n) { return Integer(n + 2); }));
    e.scf = inv_e_scf();
    return e;
  }
  if (b == "sin_inv") {
    auto k = arg(p, 0, 1);
    CatalogEntry e{"sin_inv(" + std::to_string(k) + ")", SeriesKind::TypeII, "Taylor series of sin(1/k)"};
    Integer kk = k;
    e.type_ii = TypeIISeries(Stream<Integer>::by_index([kk](std::size_t n) {
      if (n == 0) return kk;
      Integer m = n;
      return Integer(2 * m * (2 * m + 1) * kk * kk);
    }));
    return e;
  }
  if (b == "cos_inv") {
    auto k = arg(p, 0, 1);
    CatalogEntry e{"cos_inv(" + std::to_string(k) + ")", SeriesKind::TypeII, "Taylor series of cos(1/k)"};
    Integer kk = k;
    e.type_ii = TypeIISeries(Stream<Integer>::by_index([kk](std::size_t n) {
      if (n == 0) return Integer(1);
      Integer m = n;
      return Integer((2 * m - 1) * (2 * m) * kk * kk);
    }));
    return e;
  }
  if (b == "golden") {
    no_args();
    CatalogEntry e{"golden", SeriesKind::TypeI, "alternating reciprocals of golden rectangle numbers (A001654)"};
    e.type_i = TypeISeries(Stream<Integer>::by_index([](std::size_t n) {
      Integer f1;
      Integer f2;
      mpz_fib_ui(f1.get_mpz_t(), n + 1);
      mpz_fib_ui(f2.get_mpz_t(), n + 2);
      return Integer(f1 * f2);
    }));
    e.scf = SimpleCF(Integer(0), Stream<Integer>::constant(Integer(1)));
    e.scf_equivalent = true;
    return e;
  }
  if (b == "liouville_alt") {
    no_args();
    CatalogEntry e{"liouville_alt", SeriesKind::TypeII, "sum_{n>=2} (-1)^n / 10^(n!)"};
    auto exps = liouville_alt_exponents();
    e.type_ii = TypeIISeries(Stream<Integer>::by_index([exps](std::size_t n) {
      const Integer& x = exps[n];
      if (!x.fits_ulong_p() || x.get_ui() + 1 > digit_cap()) {
        throw DigitCapExceeded("A_" + idx(n) + " = 10^" + to_string(x) + " exceeds the digit cap of " +
                               std::to_string(digit_cap()) + " (set ALTCF_DIGIT_CAP to raise it)");
      }
      return pow(Integer(10), x.get_ui());
    }));
    e.power_base = Integer(10);
    e.power_exponents = exps;
    return e;
  }
  if (b == "davison_shallit") {
    no_args();
    CatalogEntry e{"davison_shallit", SeriesKind::TypeII, "M = 1, 1, 1, ... construction (A007704, A006277)"};
    MNConstruction c(Stream<Integer>::constant(Integer(1)));
    e.type_ii = c.series();
    e.scf = c.scf();
    e.scf_equivalent = true;
    e.construction = std::move(c);
    return e;
  }
  if (b == "cahen") {
    auto k = arg(p, 0, 2);
    auto l = arg(p, 1, 2);
    CatalogEntry e{"cahen(" + std::to_string(k) + "," + std::to_string(l) + ")", SeriesKind::TypeII,
                   "sum (-1)^n / (s_{n+1}(k,l) - 1) (A118227 for k = l = 1)"};
    e.type_ii = cahen_series(k, l);
    e.scf = cahen_scf(k, l);
    e.scf_equivalent = true;
    e.sylvester = sylvester(k, l);
    return e;
  }
  if (b == "kellogg_curtiss") {
    auto k = arg(p, 0, 2);
    auto l = arg(p, 1, 2);
    CatalogEntry e{"kellogg_curtiss(" + std::to_string(k) + "," + std::to_string(l) + ")", SeriesKind::Engel,
                   "sum 1 / (s_{n+1}(k,l) - 1)"};
    e.engel = kc_series(k, l);
    e.sylvester = sylvester(k, l);
    e.exploratory = l == 1;
    return e;
  }
  if (b == "e_minus_1_scf") {
    no_args();
    CatalogEntry e{"e_minus_1_scf", SeriesKind::Scf, "e - 1 = [1; 1, 2, 1, 1, 4, 1, 1, 6, ...]"};
    e.scf = e_minus_1_scf();
    return e;
  }
  throw std::invalid_argument(unknown_name_message(name));
}

std::string bfile(const Stream<Integer>& s, std::size_t count, std::size_t offset) {
  std::ostringstream os;
  auto terms = s.take(count);
  for (std::size_t i = 0; i < terms.size(); ++i) os << (i + offset) << ' ' << to_string(terms[i]) << '\n';
  return os.str();
}

}  // namespace altcf
