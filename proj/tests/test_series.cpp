#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "altcf/series.hpp"
#include "gen.hpp"

using namespace altcf;

namespace {

Rat R(long p, long q = 1) { return Rat(Integer(p), Integer(q)); }

std::vector<Rat> sums(const AnySeries& s, std::size_t n) {
  std::vector<Rat> out;
  for (const auto& p : partial_sums(s, n)) out.push_back(p.sum);
  return out;
}

// Greedy Pierce expansion on machine integers: 1/r = q/p, A = floor(q/p), r' = 1 - A r.
std::vector<long> pierce_oracle(long p, long q) {
  std::vector<long> out;
  while (p != 0) {
    long a = q / p;
    out.push_back(a);
    long np = q - a * p;  // r' = (q - a p)/q
    long g = std::gcd(np, q);
    p = np / std::max(g, 1L);
    q = q / std::max(g, 1L);
  }
  return out;
}

}  // namespace

TEST_CASE("partial sums against direct summation") {
  // sin(1/3): A_0 = 3, A_n = 2n(2n+1) 9.
  TypeIISeries sin3(Stream<Integer>::by_index([](std::size_t n) {
    return n == 0 ? Integer(3) : Integer(static_cast<unsigned long>(2 * n * (2 * n + 1) * 9));
  }));
  CHECK(sums(sin3, 2) == std::vector<Rat>{R(1, 3), R(53, 162), R(9541, 29160)});
  // cos(1/2): A_0 = 1, A_n = (2n-1)(2n) 4.
  TypeIISeries cos2(Stream<Integer>::by_index([](std::size_t n) {
    return n == 0 ? Integer(1) : Integer(static_cast<unsigned long>((2 * n - 1) * 2 * n * 4));
  }));
  CHECK(sums(cos2, 2) == std::vector<Rat>{R(1), R(7, 8), R(337, 384)});
  TypeISeries golden(Stream<Integer>(std::vector<Integer>{1, 2, 6, 15, 40}));
  CHECK(sums(golden, 4) == std::vector<Rat>{R(1), R(1, 2), R(2, 3), R(3, 5), R(5, 8)});
}

TEST_CASE("alternating tail bound is the next term and brackets the value") {
  TypeIISeries inv_e(Stream<Integer>::by_index([](std::size_t n) { return Integer(static_cast<unsigned long>(n + 2)); }));
  auto ps = partial_sums(inv_e, 10);
  CHECK(ps[0].tail_bound == R(1, 6));
  CHECK(ps[1].tail_bound == R(1, 24));
  for (std::size_t n = 0; n + 1 < ps.size(); ++n) {
    CHECK(abs(ps[10].sum - ps[n].sum) <= ps[n].tail_bound);
  }
  TypeIISeries finite(Stream<Integer>(std::vector<Integer>{2, 3}));
  auto f = partial_sums(finite, 1);
  CHECK(f[1].tail_bound == Rat(0));
  CHECK_THROWS_AS(partial_sums(finite, 2), StreamExhausted);
}

TEST_CASE("Engel tail bounds hold") {
  EngelSeries e(Stream<Integer>::by_index([](std::size_t n) { return Integer(static_cast<unsigned long>(n + 2)); }));
  auto ps = partial_sums(e, 12);
  for (std::size_t n = 0; n + 2 < ps.size(); ++n) {
    auto gap = ps[12].sum - ps[n].sum;
    CHECK(gap.sign() > 0);
    CHECK(gap < ps[n].tail_bound);
  }
  EngelSeries flat(Stream<Integer>::constant(Integer(1)));
  CHECK_THROWS_AS(partial_sums(flat, 2), SeriesError);
}

TEST_CASE("stream invariants fail with the index") {
  TypeISeries bad(Stream<Integer>(std::vector<Integer>{3, 5, 5}));
  try {
    (void)bad.B(2);
    FAIL("expected SeriesError");
  } catch (const SeriesError& e) {
    CHECK(e.index() == 2);
  }
  TypeIISeries bad2(Stream<Integer>(std::vector<Integer>{2, 1}));
  CHECK_THROWS_AS((void)bad2.A(1), SeriesError);
  TypeIISeries bad3(Stream<Integer>(std::vector<Integer>{0}));
  CHECK_THROWS_AS((void)bad3.A(0), SeriesError);
  EngelSeries bad4(Stream<Integer>(std::vector<Integer>{3, 2}));
  CHECK_THROWS_AS((void)bad4.A(1), SeriesError);
}

TEST_CASE("type I conversion: convergent n+1 equals S_n on random streams") {
  auto g = gen::rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<Integer> B;
    Integer b = gen::uniform(g, 1, 20);
    for (int k = 0; k < 10; ++k) {
      B.push_back(b);
      b += gen::uniform(g, 1, 1000);
    }
    TypeISeries s{Stream<Integer>(B)};
    auto cf = typeI_to_cf(s);
    auto c = convergents(cf, 10);
    auto ps = sums(s, 9);
    for (std::size_t n = 0; n < 10; ++n) REQUIRE(c[n + 1] == ps[n]);
    CHECK(cf.element(1) == Element{Rat(1), Rat(B[0])});
    CHECK(cf.element(3) == Element{Rat(Integer(B[1] * B[1])), Rat(Integer(B[2] - B[1]))});
  }
}

TEST_CASE("type II conversion with arbitrary positive scales") {
  auto g = gen::rng(32);
  for (int i = 0; i < 200; ++i) {
    std::vector<Integer> A{Integer(gen::uniform(g, 1, 9))};
    for (int k = 1; k < 9; ++k) A.push_back(Integer(gen::uniform(g, 2, 50)));
    std::vector<Rat> x;
    for (int k = 0; k < 9; ++k) x.push_back(gen::positive_rat(g, 12));
    TypeIISeries s{Stream<Integer>(A)};
    auto plain = convergents(typeII_to_cf(s), 9);
    auto scaled = convergents(typeII_to_cf(s, Stream<Rat>(x)), 9);
    auto ps = sums(s, 8);
    for (std::size_t n = 0; n < 9; ++n) {
      REQUIRE(plain[n + 1] == ps[n]);
      REQUIRE(scaled[n + 1] == ps[n]);
    }
  }
}

TEST_CASE("Sierpinski condition") {
  TypeISeries golden(Stream<Integer>(std::vector<Integer>{1, 2, 6, 15, 40}));
  auto v = sierpinski_check(golden, 4);
  CHECK_FALSE(v.holds);
  CHECK(v.failures == std::vector<std::size_t>{2, 3});
  TypeISeries fast(Stream<Integer>::by_index([](std::size_t n) {
    return Integer(pow(Integer(2), 1UL << n) - 1);
  }));
  CHECK(sierpinski_check(fast, 8).holds);
}

TEST_CASE("strict monotonicity of A and the constant stream") {
  TypeIISeries constant(Stream<Integer>::constant(Integer(3)));
  auto v = typeII_monotone_check(constant, 6);
  CHECK_FALSE(v.holds);
  REQUIRE(v.geometric_value);
  CHECK(*v.geometric_value == R(1, 4));
  // The partial sums approach 1/4 with the alternating bound.
  auto ps = partial_sums(constant, 30);
  CHECK(abs(ps[30].sum - R(1, 4)) < ps[30].tail_bound);
  TypeIISeries inc(Stream<Integer>::by_index([](std::size_t n) { return Integer(static_cast<unsigned long>(n + 2)); }));
  CHECK(typeII_monotone_check(inc, 10).holds);
  CHECK(inc.pierce(10));
  CHECK_FALSE(constant.pierce(3));
}

TEST_CASE("Pierce expansion examples") {
  auto p = pierce_expand(R(7, 10), 10);
  CHECK(p.A == std::vector<Integer>{1, 3, 10});
  CHECK(p.terminated);
  CHECK(pierce_expand(R(1), 5).A == std::vector<Integer>{1});
  CHECK(pierce_expand(R(3, 7), 5).A == std::vector<Integer>{2, 7});
  auto cut = pierce_expand(R(355, 1000), 3);
  CHECK(cut.A == std::vector<Integer>{2, 3, 7});
  CHECK_FALSE(cut.terminated);
  CHECK_THROWS_AS(pierce_expand(R(0), 3), std::domain_error);
  CHECK_THROWS_AS(pierce_expand(R(3, 2), 3), std::domain_error);
  CHECK_THROWS_AS(pierce_expand(R(-1, 2), 3), std::domain_error);
}

TEST_CASE("property: Pierce round trip on rationals in (0, 1] (1000 cases)") {
  auto g = gen::rng(33);
  for (int i = 0; i < 1000; ++i) {
    long q = gen::uniform(g, 1, 10000);
    long p = gen::uniform(g, 1, q);
    Rat r = R(p, q);
    auto e = pierce_expand(r, 200);
    REQUIRE(e.terminated);
    CHECK(e.resum() == r);
    for (std::size_t k = 1; k < e.A.size(); ++k) CHECK(e.A[k] > e.A[k - 1]);
    auto oracle = pierce_oracle(r.num().get_si(), r.den().get_si());
    REQUIRE(oracle.size() == e.A.size());
    for (std::size_t k = 0; k < oracle.size(); ++k) CHECK(e.A[k] == oracle[k]);
  }
}

TEST_CASE("simple continued fraction as a type I series with B_n = q_n q_{n+1}") {
  auto cf = SimpleCF::from_terms({0, 1, 2, 3, 4, 5});
  auto s = scf_to_series(cf);
  CHECK(s.a0 == 0);
  auto conv = simple_convergents(cf, 5);
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(s.series.B(n) == conv[n].q * conv[n + 1].q);
    CHECK(partial_sums(s.series, n).back().sum == conv[n + 1].value());
  }
  GCF general(Integer(0), Stream<Element>(std::vector<Element>{{Rat(1), Rat(2)}, {Rat(2), Rat(3)}}));
  auto bad = scf_to_series(general);
  CHECK_THROWS_AS((void)bad.series.B(1), std::invalid_argument);
}

TEST_CASE("sharpness identity") {
  for (long b0 : {1L, 2L, 3L, 10L}) {
    for (std::size_t N = 0; N <= 5; ++N) {
      auto r = sharpness_identity(Integer(b0), N);
      CHECK(r.holds);
      CHECK(r.B.size() == N + 2);
    }
  }
  auto r = sharpness_identity(Integer(1), 2);
  CHECK(r.B == std::vector<Integer>{1, 1, 1, 1});
  // B_0 = 1 gives the constant stream 1, 1, 1, ...; B_0 = 2 gives 2, 5, 29, 869.
  CHECK(sharpness_identity(Integer(2), 2).B == std::vector<Integer>{2, 5, 29, 869});
}
