#include <doctest.h>

#include <gmpxx.h>

#include "altcf/arith.hpp"
#include "gen.hpp"

using namespace altcf;

namespace {

mpq_class as_mpq(const Rat& r) {
  mpq_class q(r.num(), r.den());
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  Rat x(Integer(12), Integer(-9));
  CHECK(x.str() == "-4/3");
  CHECK(x.den() == 3);
  CHECK(Rat(Integer(6), Integer(2)).str() == "3");
  CHECK(Rat(Integer(5), Integer(6)) + Rat(Integer(1), Integer(6)) == Rat(1));
  CHECK(Rat(0).str() == "0");
  CHECK(Rat::parse("-10/4") == Rat(Integer(-5), Integer(2)));
  CHECK(Rat::parse("7") == Rat(7));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rat(Integer(1), Integer(0)), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(0).reciprocal(), std::domain_error);
}

TEST_CASE("integer parsing rejects junk") {
  CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
  CHECK(parse_integer("+5") == 5);
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/x"), std::invalid_argument);
}

TEST_CASE("floor rounds toward minus infinity") {
  CHECK(floor(Rat(Integer(7), Integer(2))) == 3);
  CHECK(floor(Rat(Integer(-7), Integer(2))) == -4);
  CHECK(floor(Rat(-3)) == -3);
}

TEST_CASE("field axioms on random rationals") {
  auto g = gen::rng(11);
  for (int i = 0; i < 500; ++i) {
    Rat x = gen::rat(g), y = gen::rat(g), z = gen::rat(g);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Rat(0) == x);
    CHECK(x * Rat(1) == x);
    CHECK(x + (-x) == Rat(0));
    if (x.sign() != 0) CHECK(x * x.reciprocal() == Rat(1));
    // Against GMP rationals directly.
    CHECK(as_mpq(x * y + z) == as_mpq(x) * as_mpq(y) + as_mpq(z));
    CHECK(((x < y) == (as_mpq(x) < as_mpq(y))));
    CHECK(gcd(x.num(), x.den()) == 1);
    CHECK(x.den() > 0);
  }
}

TEST_CASE("exact decimal expansion") {
  CHECK(truncate_decimal(Rat(Integer(7), Integer(10)), 5) == "0.7");
  CHECK(truncate_decimal(Rat(Integer(1), Integer(7)), 6) == "0.142857");
  CHECK(truncate_decimal(Rat(Integer(-1), Integer(8)), 10) == "-0.125");
  CHECK(truncate_decimal(Rat(Integer(22), Integer(7)), 3) == "3.142");
  auto d = render_decimal(Rat(Integer(1), Integer(4)), Rat(0), 10);
  CHECK(d.exact);
  CHECK_FALSE(d.truncated);
}

TEST_CASE("certified rendering keeps only digits shared by the interval") {
  // 0.12345 +- 0.00001: [0.12344, 0.12346] agree on 0.1234.
  auto d = render_decimal(Rat(Integer(12345), Integer(100000)), Rat(Integer(1), Integer(100000)), 10);
  CHECK(d.str() == "0.1234");
  CHECK(d.certified_digits() == 4);
  // Straddling an integer leaves no stable integer part.
  auto e = render_decimal(Rat(1), Rat(Integer(1), Integer(1000)), 5);
  CHECK(e.str().empty());
  CHECK_THROWS_AS(render_decimal(Rat(1), Rat(-1), 3), std::invalid_argument);
}

TEST_CASE("certified digits are a prefix of every value in the interval") {
  auto g = gen::rng(12);
  for (int i = 0; i < 300; ++i) {
    Rat v = gen::rat(g, 8);
    Rat eb(Integer(1), Integer(gen::uniform(g, 1, 1000000)));
    auto c = render_decimal(v, eb, 12);
    if (c.integer_part.empty()) continue;
    auto digits = c.certified_digits();
    for (Rat probe : {v - eb, v, v + eb}) {
      auto s = truncate_decimal(probe, digits);
      // Pad the exact expansion so terminating values compare positionally.
      auto dot = s.find('.');
      if (dot == std::string::npos && digits > 0) s += ".";
      dot = s.find('.');
      while (digits > 0 && s.size() - dot - 1 < digits) s += '0';
      CHECK(s == c.str());
    }
  }
}

TEST_CASE("digit cap guards huge intermediates") {
  auto old = digit_cap();
  set_digit_cap(50);
  CHECK_THROWS_AS(check_digit_cap(pow(Integer(10), 60), "test value"), DigitCapExceeded);
  CHECK_NOTHROW(check_digit_cap(pow(Integer(10), 40), "test value"));
  set_digit_cap(old);
}
