#pragma once

// Exact integer and rational arithmetic. Integers are GMP mpz values; Rat is
// always kept in canonical form (positive denominator, coprime parts), so two
// equal rationals compare equal field by field.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace altcf {

using Integer = mpz_class;

/// Thrown when a generated term would exceed the configured decimal digit cap.
class DigitCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Process-wide cap on the decimal length of generated stream terms.
/// Defaults to 10^6 digits, or to ALTCF_DIGIT_CAP when that is set.
std::size_t digit_cap();
void set_digit_cap(std::size_t digits);
void check_digit_cap(const Integer& value, std::string_view what);

std::size_t decimal_digits(const Integer& value);
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);
Integer pow(const Integer& base, unsigned long exponent);
Integer gcd(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& n);

class Rat {
public:
  Rat() = default;
  template <std::integral T>
  Rat(T value) : value_(static_cast<long>(value)) {}
  Rat(const Integer& value) : value_(value) {}
  Rat(const Integer& num, const Integer& den);

  static Rat parse(std::string_view text);

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return den() == 1; }

  Rat reciprocal() const;
  std::string str() const;

  friend Rat operator+(const Rat& x, const Rat& y) { return Rat(mpq_class(x.value_ + y.value_)); }
  friend Rat operator-(const Rat& x, const Rat& y) { return Rat(mpq_class(x.value_ - y.value_)); }
  friend Rat operator*(const Rat& x, const Rat& y) { return Rat(mpq_class(x.value_ * y.value_)); }
  friend Rat operator/(const Rat& x, const Rat& y);
  Rat operator-() const { return Rat(mpq_class(-value_)); }

  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }
  Rat& operator*=(const Rat& y) { return *this = *this * y; }
  Rat& operator/=(const Rat& y) { return *this = *this / y; }

  friend bool operator==(const Rat& x, const Rat& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
    return cmp(x.value_, y.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& x);

private:
  explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpq_class value_;
};

/// Largest integer not exceeding x.
Integer floor(const Rat& x);
Rat abs(const Rat& x);
/// x^e for a nonnegative exponent.
Rat pow(const Rat& x, unsigned long exponent);

/// Decimal rendering of a value known only up to an error bound. The digits
/// are the longest prefix shared by value - error_bound and value + error_bound
/// (truncated expansions), so every printed digit holds for any number in that
/// closed interval.
struct CertifiedDecimal {
  bool negative = false;
  std::string integer_part;     // empty when not even the integer part is stable
  std::string fraction_digits;
  Rat error_bound;
  bool exact = false;      // error bound zero and the expansion terminated
  bool truncated = false;  // stopped at max_digits with further digits pending

  std::size_t certified_digits() const { return fraction_digits.size(); }
  std::string str() const;
};

CertifiedDecimal render_decimal(const Rat& value, const Rat& error_bound, std::size_t max_digits);

/// Plain truncated expansion of x to `digits` fraction digits (no certification).
std::string truncate_decimal(const Rat& x, std::size_t digits);

}  // namespace altcf
