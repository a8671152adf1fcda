#include <doctest.h>

#include <algorithm>

#include "altcf/analysis.hpp"
#include "gen.hpp"

using namespace altcf;

namespace {

Rat R(long p, long q = 1) { return Rat(Integer(p), Integer(q)); }

std::vector<Integer> ints(std::initializer_list<const char*> xs) {
  std::vector<Integer> out;
  for (const char* x : xs) out.push_back(Integer(x));
  return out;
}

}  // namespace

TEST_CASE("equivalence on catalog constants") {
  for (std::string name : {"golden", "davison_shallit", "cahen(1,1)", "cahen(2,1)", "cahen(1,2)"}) {
    auto e = catalog(name);
    INFO(name);
    CHECK(verify_equivalence(e.primary_series(), *e.scf, 7).all_match());
  }
  auto fermat = catalog("fermat");
  CHECK(verify_equivalence(*fermat.type_i, typeI_to_cf(*fermat.type_i), 10).all_match());
  CHECK(verify_equivalence(*fermat.type_ii, typeII_to_cf(*fermat.type_ii), 10).all_match());
  auto sin3 = catalog("sin_inv(3)");
  CHECK(verify_equivalence(*sin3.type_ii, typeII_to_cf(*sin3.type_ii), 12).all_match());
}

TEST_CASE("1/e series and the SCF of 1/e part at n = 3") {
  auto e = catalog("inv_e");
  auto r = verify_equivalence(*e.type_ii, inv_e_scf(), 6);
  REQUIRE(r.first_mismatch);
  CHECK(*r.first_mismatch == 3);
  CHECK(r.matches[0]);
  CHECK(r.matches[1]);
  CHECK(r.matches[2]);
  CHECK_FALSE(r.matches[3]);
}

TEST_CASE("a continued fraction that ends early is a mismatch") {
  TypeIISeries s(Stream<Integer>::by_index([](std::size_t n) { return Integer(static_cast<unsigned long>(n + 2)); }));
  auto r = verify_equivalence(s, SimpleCF::from_terms({0, 2, 1}), 4);
  REQUIRE(r.first_mismatch);
  CHECK(*r.first_mismatch == 2);
}

TEST_CASE("sparse polynomials") {
  auto x = SparsePoly::monomial(1, 1);
  CHECK((x + 1) * (x - 1) == x * x - 1);
  auto big = SparsePoly::monomial(3, Integer("100000000000000000000"));
  CHECK((big - big).terms().empty());
  CHECK(((x + 2) * (x + 3)).evaluate(10) == 156);
  auto g = gen::rng(51);
  for (int i = 0; i < 100; ++i) {
    SparsePoly f, h;
    for (int k = 0; k < 4; ++k) {
      f = f + SparsePoly::monomial(gen::uniform(g, -9, 9), gen::uniform(g, 0, 6));
      h = h + SparsePoly::monomial(gen::uniform(g, -9, 9), gen::uniform(g, 0, 6));
    }
    Integer t = gen::uniform(g, -5, 5);
    CHECK((f * h).evaluate(t) == f.evaluate(t) * h.evaluate(t));
    CHECK((f - h).evaluate(t) == f.evaluate(t) - h.evaluate(t));
  }
}

TEST_CASE("polynomial equivalence agrees with the numeric check where both run") {
  auto e = catalog("liouville_alt");
  auto poly = verify_equivalence_powers(*e.power_exponents, 12);
  CHECK(poly.all_match());
  CHECK(poly.matches.size() == 13);
  CHECK(verify_equivalence(*e.type_ii, typeII_to_cf(*e.type_ii), 5).all_match());
  // A deliberately non-monotone exponent pattern is still an identity.
  CHECK(verify_equivalence_powers(Stream<Integer>(std::vector<Integer>{1, 1, 2, 1, 3}), 4).all_match());
  // Small exponents also let the numeric route run at base 2.
  auto exps = Stream<Integer>(std::vector<Integer>{1, 2, 3, 5, 8, 13});
  TypeIISeries base2(exps.map([](const Integer& e, std::size_t) { return pow(Integer(2), e.get_ui()); }));
  CHECK(verify_equivalence(base2, typeII_to_cf(base2), 5).all_match());
  CHECK(verify_equivalence_powers(exps, 5).all_match());
}

TEST_CASE("q-products and w-sequence for the Cahen constant") {
  auto e = catalog("cahen(1,1)");
  auto qr = q_product_check(*e.scf, *e.type_ii, 8);
  CHECK(qr.pass);
  CHECK(qr.check == "q_product");
  auto conv = simple_convergents(*e.scf, 8);
  std::vector<Integer> q;
  for (const auto& c : conv) q.push_back(c.q);
  CHECK(q == ints({"1", "1", "2", "3", "14", "129", "25298", "420984147", "269425140741515486"}));
  auto w = w_sequence(*e.scf, 8);
  CHECK(w.w == std::vector<Integer>{1, 1, 1, 2, 3, 14, 129, 25298, 420984147});
  CHECK_FALSE(w.non_integral_at);
  CHECK(w.sqrt_hits == std::vector<std::size_t>{1, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("q-product check refuses a non-equivalent pair") {
  auto e = catalog("inv_e");
  auto r = q_product_check(inv_e_scf(), *e.type_ii, 5);
  CHECK_FALSE(r.pass);
  REQUIRE(r.first_failure);
}

TEST_CASE("property: q-products on random M constructions") {
  auto g = gen::rng(52);
  for (int i = 0; i < 20; ++i) {
    MNConstruction c{Stream<Integer>(gen::positive_ints(g, 12, 9))};
    auto r = q_product_check(c.scf(), c.series(), 8);
    CHECK(r.pass);
    auto w = w_sequence(c.scf(), 8);
    CHECK_FALSE(w.non_integral_at);
    // w_{n+1} = M_{n+1} for this family.
    for (std::size_t n = 0; n + 1 < w.w.size(); ++n) CHECK(w.w[n + 1] == c.M(n + 1));
  }
}

TEST_CASE("measure certificates") {
  auto fermat = catalog("fermat");
  auto approx = series_approximants(*fermat.type_i, 5);
  REQUIRE(approx.size() == 5);
  CHECK(approx[0].p == 1);
  CHECK(approx[0].q == 1);
  CHECK(approx[1].p == 2);
  CHECK(approx[1].q == 3);
  auto est = measure_scan("fermat", approx, fixed_exponents({Rat(1), Rat(2)}));
  for (const auto& c : est.certificates) {
    CHECK(c.replay() == c.certified);
    if (c.mu == Rat(1)) CHECK(c.certified);
  }
  REQUIRE(est.max_certified);
  CHECK(*est.max_certified == Rat(2));

  auto lambda = measure_scan(catalog("liouville_alt"), 5, shifted_index_exponent(2));
  REQUIRE(lambda.certificates.size() == 5);
  for (const auto& c : lambda.certificates) {
    CHECK(c.certified);
    CHECK(c.mu == Rat(static_cast<long>(c.n + 2)));
  }

  Approximant a{1, 1, 10, R(1, 1000)};
  CHECK(certify_exponent(a, Rat(3)).certified);
  CHECK_FALSE(certify_exponent(a, R(7, 2)).certified);
  CHECK(certify_exponent(a, R(7, 2)).inequality().find(" > ") != std::string::npos);
}

TEST_CASE("SCF approximant gaps are 1/(q_n q_{n+1})") {
  auto cf = SimpleCF::from_terms({0, 1, 2, 3, 4, 5});
  auto a = scf_approximants(cf, 3);
  REQUIRE(a.size() == 3);
  auto conv = simple_convergents(cf, 5);
  for (const auto& x : a) {
    CHECK(x.gap_bound == Rat(Integer(1), Integer(conv[x.n].q * conv[x.n + 1].q)));
    Rat exact = conv[5].value();
    CHECK(abs(exact - Rat(x.p, x.q)) < x.gap_bound);
  }
  CHECK(scf_approximants(cf, 10).size() == 3);
}

TEST_CASE("exploratory constants are labelled") {
  CHECK(measure_scan(catalog("primorial"), 4, fixed_exponents({Rat(2)})).exploratory);
  CHECK(measure_scan(catalog("kellogg_curtiss"), 4, fixed_exponents({Rat(2)})).exploratory);
  CHECK_FALSE(measure_scan(catalog("cahen"), 4, fixed_exponents({Rat(2)})).exploratory);
}

TEST_CASE("telescoping identities") {
  for (unsigned long k = 1; k <= 3; ++k) {
    for (unsigned long l = 1; l <= 2; ++l) {
      auto r = telescope_suite(k, l, 5);
      CAPTURE(k);
      CAPTURE(l);
      CHECK(r.pass);
      CHECK(r.params["k"] == k);
    }
  }
}

TEST_CASE("convergents of e and 1/e against Taylor sums") {
  CHECK(conjecture_scan(ConjectureTarget::InvE, 4, 4) == std::vector<Rat>{R(0), R(1, 3), R(3, 8), R(1, 2)});
  auto wide = conjecture_scan(ConjectureTarget::InvE, 50, 50);
  CHECK(wide == std::vector<Rat>{R(0), R(1, 3), R(3, 8), R(1, 2)});
  auto e = conjecture_scan(ConjectureTarget::E, 50, 50);
  CHECK(e == std::vector<Rat>{R(2), R(8, 3)});
}

TEST_CASE("odd and even Cahen quotients are coprime") {
  CHECK(coprime_check(1, 8).pass);
  CHECK(coprime_check(2, 8).pass);
  CHECK(coprime_check(3, 7).pass);
}

TEST_CASE("digits") {
  auto d = compute_digits(catalog("cahen"), 15);
  CHECK(d.truncated(15) == "0.643410546288338");
  CHECK(d.certified.certified_digits() >= 15);
  auto fine = compute_digits(catalog("cahen"), 40);
  CHECK(abs(fine.approximation - d.approximation) <= d.error_bound + fine.error_bound);
  auto g = compute_digits(catalog("golden"), 20);
  CHECK(g.truncated(20) == "0.61803398874989484820");
  auto r = compute_digits(SimpleCF::from_terms({0, 1, 2, 3}), 10);
  CHECK(r.error_bound == Rat(0));
  CHECK(r.approximation == R(7, 10));
}

TEST_CASE("check reports serialize with the fixed keys") {
  CheckReport r;
  r.check = "demo";
  r.depth = 3;
  r.fail("first");
  r.fail("second");
  auto j = r.to_json();
  for (const char* key : {"check", "params", "depth", "pass", "first_failure", "witnesses"}) CHECK(j.contains(key));
  CHECK(j["pass"] == false);
  CHECK(j["first_failure"] == "first");
  CheckReport ok;
  CHECK(ok.to_json()["first_failure"].is_null());
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope", 3), std::invalid_argument);
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    INFO(name);
    for (const auto& r : run_suite(name, 6)) {
      CAPTURE(r.check);
      CHECK(r.pass);
    }
  }
}
