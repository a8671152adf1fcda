#include "altcf/confrac.hpp"

#include <stdexcept>

namespace altcf {

namespace {

StreamExhausted exhausted(std::size_t n) {
  return StreamExhausted(n, "finite continued fraction exhausted at " + std::to_string(n));
}

}  // namespace

GCF::GCF(Integer a0, Stream<Element> elements)
    : a0_(std::move(a0)),
      elements_(elements.map([](const Element& e, std::size_t i) {
        if (e.a.sign() <= 0 || e.b.sign() <= 0) {
          throw std::invalid_argument("nonpositive continued fraction element at " + std::to_string(i + 1));
        }
        return e;
      })) {}

const Element& GCF::element(std::size_t n) const {
  if (n == 0 || !elements_.has(n - 1)) throw exhausted(n);
  return elements_[n - 1];
}

bool GCF::is_integral(std::size_t depth) const {
  for (std::size_t n = 1; n <= depth && has_element(n); ++n) {
    const auto& e = element(n);
    if (!e.a.is_integer() || !e.b.is_integer()) return false;
  }
  return true;
}

bool GCF::is_simple(std::size_t depth) const {
  for (std::size_t n = 1; n <= depth && has_element(n); ++n) {
    const auto& e = element(n);
    if (!e.a.is_integer() || e.b != Rat(1)) return false;
  }
  return true;
}

SimpleCF::SimpleCF(Integer a0, Stream<Integer> quotients)
    : a0_(std::move(a0)),
      quotients_(quotients.map([](const Integer& a, std::size_t i) {
        if (a < 1) {
          throw std::invalid_argument("partial quotient a_" + std::to_string(i + 1) + " = " + to_string(a) +
                                      " is not a positive integer");
        }
        return a;
      })) {}

SimpleCF SimpleCF::from_terms(std::vector<Integer> terms) {
  if (terms.empty()) throw std::invalid_argument("simple continued fraction needs at least a0");
  Integer a0 = terms.front();
  terms.erase(terms.begin());
  return SimpleCF(std::move(a0), Stream<Integer>(std::move(terms)));
}

const Integer& SimpleCF::quotient(std::size_t n) const {
  if (n == 0 || !quotients_.has(n - 1)) throw exhausted(n);
  return quotients_[n - 1];
}

std::vector<Integer> SimpleCF::terms(std::size_t count) const {
  std::vector<Integer> out;
  if (count == 0) return out;
  out.push_back(a0_);
  auto rest = quotients_.take(count - 1);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

GCF SimpleCF::as_gcf() const {
  return GCF(a0_, quotients_.map([](const Integer& a, std::size_t) { return Element{Rat(1), Rat(a)}; }));
}

std::vector<Rat> convergents(const GCF& cf, std::size_t N) {
  std::vector<Rat> out;
  out.reserve(N + 1);
  ConvergentState<Rat> st(cf.a0());
  out.push_back(st.p_cur / st.q_cur);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto& e = cf.element(n);
    st.advance(e.b, e.a);
    out.push_back(st.p_cur / st.q_cur);
  }
  return out;
}

std::vector<Convergent> simple_convergents(const SimpleCF& cf, std::size_t N) {
  std::vector<Convergent> out;
  out.reserve(N + 1);
  ConvergentState<Integer> st(cf.a0());
  out.push_back({st.p_cur, st.q_cur});
  const Integer one = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    st.advance(one, cf.quotient(n));
    out.push_back({st.p_cur, st.q_cur});
  }
  return out;
}

Rat eval_finite(const GCF& cf, std::size_t N) {
  // Touch element N first so a short stream fails with the right index.
  if (N > 0) cf.element(N);
  Rat tail(0);
  for (std::size_t k = N; k >= 1; --k) {
    const auto& e = cf.element(k);
    tail = e.b / (e.a + tail);
  }
  return Rat(cf.a0()) + tail;
}

GCF equivalence_transform(const GCF& cf, Stream<Rat> x) {
  auto elems = cf.elements().map([x](const Element& e, std::size_t i) {
    const Rat& cur = x[i];
    if (cur.sign() <= 0) throw std::invalid_argument("nonpositive scale x_" + std::to_string(i));
    Rat prev = i == 0 ? Rat(1) : x[i - 1];
    return Element{cur * prev * e.b, cur * e.a};
  });
  return GCF(cf.a0(), std::move(elems));
}

LemmaVerdict lemma_check(const GCF& cf, std::size_t N) {
  LemmaVerdict v;
  for (std::size_t n = 1; n <= N; ++n) {
    const auto& e = cf.element(n);
    if (!e.a.is_integer() || !e.b.is_integer()) {
      throw std::invalid_argument("lemma_check needs integral elements; element " + std::to_string(n) + " is (" +
                                  e.b.str() + ", " + e.a.str() + ")");
    }
    v.depth = n;
    if (e.a < e.b) {
      v.violated_at = n;
      v.detail = "a_" + std::to_string(n) + " = " + e.a.str() + " < b_" + std::to_string(n) + " = " + e.b.str();
      return v;
    }
  }
  v.holds = true;
  v.detail = "irrational by Irrationality Lemma (checked to depth " + std::to_string(N) + ")";
  return v;
}

bool TailReport::all_hold() const {
  for (const auto& t : tails) {
    if (!t.in_unit_interval) return false;
  }
  return true;
}

TailReport tail_report(const GCF& cf, std::size_t N) {
  TailReport r;
  r.depth = N;
  if (N < 2) return r;
  // Fold from the bottom, recording alpha_{k-1} after element k is absorbed.
  std::vector<TailBound> rev;
  Rat tail(0);
  for (std::size_t k = N; k >= 1; --k) {
    const auto& e = cf.element(k);
    tail = e.b / (e.a + tail);
    if (k <= N - 1) rev.push_back({k - 1, tail, tail.sign() > 0 && tail < Rat(1)});
  }
  r.tails.assign(rev.rbegin(), rev.rend());
  return r;
}

SimpleCF scf_of_rational(const Rat& r) {
  std::vector<Integer> terms;
  Integer num = r.num();
  Integer den = r.den();
  while (den != 0) {
    Integer q;
    Integer rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    terms.push_back(q);
    num = den;
    den = rem;
  }
  // Euclid already ends on a quotient >= 2; fold a trailing 1 just in case.
  if (terms.size() > 1 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  return SimpleCF::from_terms(std::move(terms));
}

}  // namespace altcf
