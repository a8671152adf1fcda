#include "altcf/arith.hpp"

#include <atomic>
#include <cstdlib>
#include <ostream>

namespace altcf {

namespace {

std::size_t initial_digit_cap() {
  if (const char* env = std::getenv("ALTCF_DIGIT_CAP")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1'000'000;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_digit_cap()};
  return cap;
}

// Digits of |x| after the decimal point, one at a time.
class DigitCursor {
public:
  explicit DigitCursor(const Rat& x) : rem_(x.num()), den_(x.den()) {
    if (rem_ < 0) rem_ = -rem_;
    mpz_fdiv_qr(int_part_.get_mpz_t(), rem_.get_mpz_t(), rem_.get_mpz_t(), den_.get_mpz_t());
  }

  const Integer& integer_part() const { return int_part_; }
  bool done() const { return rem_ == 0; }

  char next() {
    rem_ *= 10;
    Integer d;
    mpz_fdiv_qr(d.get_mpz_t(), rem_.get_mpz_t(), rem_.get_mpz_t(), den_.get_mpz_t());
    return static_cast<char>('0' + d.get_ui());
  }

private:
  Integer int_part_;
  Integer rem_;
  Integer den_;
};

}  // namespace

std::size_t digit_cap() { return cap_storage().load(); }

void set_digit_cap(std::size_t digits) { cap_storage().store(digits == 0 ? 1 : digits); }

std::size_t decimal_digits(const Integer& value) {
  // mpz_sizeinbase may overshoot by one; exact only matters near the cap.
  return mpz_sizeinbase(value.get_mpz_t(), 10);
}

void check_digit_cap(const Integer& value, std::string_view what) {
  auto digits = decimal_digits(value);
  if (digits > digit_cap()) {
    throw DigitCapExceeded(std::string(what) + " has ~" + std::to_string(digits) +
                           " decimal digits, above the cap of " + std::to_string(digit_cap()) +
                           " (set ALTCF_DIGIT_CAP to raise it)");
  }
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  return Rat(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rat Rat::reciprocal() const {
  if (sign() == 0) throw std::domain_error("division by zero");
  return Rat(den(), num());
}

std::string Rat::str() const {
  if (is_integer()) return to_string(num());
  return to_string(num()) + "/" + to_string(den());
}

Rat operator/(const Rat& x, const Rat& y) {
  if (y.sign() == 0) throw std::domain_error("division by zero");
  return Rat(mpq_class(x.value_ / y.value_));
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

Integer floor(const Rat& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& x, unsigned long exponent) {
  return Rat(pow(x.num(), exponent), pow(x.den(), exponent));
}

std::string CertifiedDecimal::str() const {
  if (integer_part.empty()) return "";
  std::string s = negative ? "-" : "";
  s += integer_part;
  if (!fraction_digits.empty()) s += "." + fraction_digits;
  return s;
}

CertifiedDecimal render_decimal(const Rat& value, const Rat& error_bound, std::size_t max_digits) {
  if (error_bound.sign() < 0) throw std::invalid_argument("negative error bound");

  CertifiedDecimal out;
  out.error_bound = error_bound;

  if (error_bound.sign() == 0) {
    out.negative = value.sign() < 0;
    DigitCursor cur(value);
    out.integer_part = to_string(cur.integer_part());
    while (!cur.done() && out.fraction_digits.size() < max_digits) out.fraction_digits += cur.next();
    out.truncated = !cur.done();
    out.exact = cur.done();
    return out;
  }

  Rat lo = value - error_bound;
  Rat hi = value + error_bound;
  // A sign change inside the interval leaves nothing stable.
  if (lo.sign() < 0 && hi.sign() > 0) return out;
  out.negative = hi.sign() < 0 || (hi.sign() == 0 && lo.sign() < 0);

  DigitCursor a(lo);
  DigitCursor b(hi);
  if (a.integer_part() != b.integer_part()) return out;
  out.integer_part = to_string(a.integer_part());
  while (out.fraction_digits.size() < max_digits) {
    char da = a.next();
    char db = b.next();
    if (da != db) return out;
    out.fraction_digits += da;
  }
  out.truncated = true;
  return out;
}

std::string truncate_decimal(const Rat& x, std::size_t digits) {
  return render_decimal(x, Rat(0), digits).str();
}

}  // namespace altcf
