#include "altcf/series.hpp"

#include <utility>

namespace altcf {

namespace {

std::string idx(std::size_t n) { return std::to_string(n); }

Stream<Integer> running_products(const Stream<Integer>& A) {
  return Stream<Integer>(Stream<Integer>::Rule([A](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    auto i = prefix.size();
    if (!A.has(i)) return std::nullopt;
    Integer p = i == 0 ? A[0] : Integer(prefix.back() * A[i]);
    check_digit_cap(p, "series product " + idx(i));
    return p;
  }));
}

Rat signed_reciprocal(std::size_t n, const Integer& d) {
  return Rat(n % 2 == 0 ? Integer(1) : Integer(-1), d);
}

}  // namespace

TypeISeries::TypeISeries(Stream<Integer> B)
    : B_(Stream<Integer>(Stream<Integer>::Rule([src = std::move(B)](const std::deque<Integer>& prefix) -> std::optional<Integer> {
        auto i = prefix.size();
        if (!src.has(i)) return std::nullopt;
        const Integer& b = src[i];
        if (i == 0 && b < 1) throw SeriesError(0, "type I series needs B_0 > 0, got " + to_string(b));
        if (i > 0 && b <= prefix.back()) {
          throw SeriesError(i, "type I series not strictly increasing at index " + idx(i) + ": B_" + idx(i) + " = " +
                                   to_string(b) + " <= B_" + idx(i - 1) + " = " + to_string(prefix.back()));
        }
        return b;
      }))) {}

Rat TypeISeries::term(std::size_t n) const { return signed_reciprocal(n, B(n)); }

TypeIISeries::TypeIISeries(Stream<Integer> A)
    : A_(Stream<Integer>(Stream<Integer>::Rule([src = std::move(A)](const std::deque<Integer>& prefix) -> std::optional<Integer> {
        auto i = prefix.size();
        if (!src.has(i)) return std::nullopt;
        const Integer& a = src[i];
        if (i == 0 && a < 1) throw SeriesError(0, "type II series needs A_0 >= 1, got " + to_string(a));
        if (i > 0 && a < 2) {
          throw SeriesError(i, "type II series needs A_n >= 2; A_" + idx(i) + " = " + to_string(a));
        }
        return a;
      }))),
      products_(running_products(A_)) {}

Rat TypeIISeries::term(std::size_t n) const { return signed_reciprocal(n, product(n)); }

bool TypeIISeries::pierce(std::size_t depth) const {
  for (std::size_t n = 0; n + 1 <= depth && has(n + 1); ++n) {
    if (A(n + 1) <= A(n)) return false;
  }
  return true;
}

EngelSeries::EngelSeries(Stream<Integer> A, std::optional<unsigned> sylvester_ell)
    : A_(Stream<Integer>(Stream<Integer>::Rule([src = std::move(A)](const std::deque<Integer>& prefix) -> std::optional<Integer> {
        auto i = prefix.size();
        if (!src.has(i)) return std::nullopt;
        const Integer& a = src[i];
        if (a < 1) throw SeriesError(i, "Engel series needs positive A_n; A_" + idx(i) + " = " + to_string(a));
        if (i > 0 && a < prefix.back()) {
          throw SeriesError(i, "Engel series decreases at index " + idx(i) + ": A_" + idx(i) + " = " + to_string(a) +
                                   " < A_" + idx(i - 1) + " = " + to_string(prefix.back()));
        }
        return a;
      }))),
      products_(running_products(A_)),
      ell_(sylvester_ell) {}

Rat EngelSeries::term(std::size_t n) const { return Rat(Integer(1), product(n)); }

std::vector<PartialSum> partial_sums(const AnySeries& series, std::size_t N) {
  return std::visit(
      [N](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        std::vector<PartialSum> out;
        out.reserve(N + 1);
        Rat sum(0);
        for (std::size_t n = 0; n <= N; ++n) {
          if (!s.has(n)) throw StreamExhausted(n, "series exhausted at index " + idx(n));
          sum += s.term(n);
          Rat bound(0);
          if (s.has(n + 1)) {
            if constexpr (std::is_same_v<S, EngelSeries>) {
              if (auto ell = s.sylvester_ell()) {
                bound = Rat(Integer(1), pow(s.product(n), *ell + 1));
              } else {
                const Integer& next = s.A(n + 1);
                if (next < 2) {
                  throw SeriesError(n + 1, "Engel tail bound needs A_" + idx(n + 1) + " >= 2");
                }
                bound = abs(s.term(n + 1)) * Rat(next, Integer(next - 1));
              }
            } else {
              bound = abs(s.term(n + 1));
            }
          }
          out.push_back({n, sum, std::move(bound)});
        }
        return out;
      },
      series);
}

GCF typeI_to_cf(const TypeISeries& s) {
  auto elems = s.stream().map([s](const Integer& b, std::size_t i) {
    if (i == 0) return Element{Rat(1), Rat(b)};
    const Integer& prev = s.B(i - 1);
    return Element{Rat(Integer(prev * prev)), Rat(Integer(b - prev))};
  });
  return GCF(Integer(0), std::move(elems));
}

GCF typeII_to_cf(const TypeIISeries& s, Stream<Rat> x) {
  auto elems = s.stream().map([s, x](const Integer& a, std::size_t i) {
    const Rat& xi = x[i];
    if (xi.sign() <= 0) throw std::invalid_argument("nonpositive scale x_" + idx(i));
    if (i == 0) return Element{xi, Rat(a) * xi};
    return Element{Rat(s.A(i - 1)) * x[i - 1] * xi, Rat(Integer(a - 1)) * xi};
  });
  return GCF(Integer(0), std::move(elems));
}

ConditionVerdict sierpinski_check(const TypeISeries& s, std::size_t N) {
  ConditionVerdict v;
  for (std::size_t n = 0; n < N && s.has(n + 1); ++n) {
    ++v.checked;
    const Integer& b = s.B(n);
    if (s.B(n + 1) < b * (b + 1)) v.failures.push_back(n);
  }
  v.holds = v.failures.empty();
  v.label = v.holds ? "irrational by the Sierpinski condition (finite check to n = " + idx(v.checked) + ")"
                    : "condition B_{n+1} >= B_n(B_n+1) fails at n = " + idx(v.failures.front());
  return v;
}

ConditionVerdict typeII_monotone_check(const TypeIISeries& s, std::size_t N) {
  ConditionVerdict v;
  bool constant = s.has(1);
  for (std::size_t n = 0; n < N && s.has(n + 1); ++n) {
    ++v.checked;
    if (s.A(n + 1) <= s.A(n)) v.failures.push_back(n);
    if (s.A(n + 1) != s.A(0)) constant = false;
  }
  v.holds = v.failures.empty();
  if (v.holds) {
    v.label = "irrational by strict monotonicity of A (finite check to n = " + idx(v.checked) + ")";
  } else {
    v.label = "A_{n+1} > A_n fails at n = " + idx(v.failures.front());
    if (constant && s.A(0) > 1) {
      v.geometric_value = Rat(Integer(1), Integer(s.A(0) + 1));
      v.label += "; constant stream sums to the rational " + v.geometric_value->str();
    }
  }
  return v;
}

Rat PierceExpansion::resum() const {
  Rat sum(0);
  Integer prod = 1;
  for (std::size_t n = 0; n < A.size(); ++n) {
    prod *= A[n];
    sum += signed_reciprocal(n, prod);
  }
  return sum;
}

PierceExpansion pierce_expand(const Rat& r, std::size_t depth) {
  if (r.sign() <= 0 || r > Rat(1)) throw std::domain_error("Pierce expansion needs 0 < r <= 1, got " + r.str());
  PierceExpansion out;
  Rat rem = r;
  while (out.A.size() < depth) {
    Integer a = floor(rem.reciprocal());
    out.A.push_back(a);
    rem = Rat(1) - Rat(a) * rem;
    if (rem.sign() == 0) {
      out.terminated = true;
      break;
    }
  }
  return out;
}

namespace {

// B_n = q_n q_{n+1} from the quotient stream a_1, a_2, ...
Stream<Integer> scf_denominator_products(Stream<Integer> quotients) {
  struct State {
    Integer q_prev = 0;  // q_{n-1}
    Integer q_cur = 1;   // q_n
  };
  auto st = std::make_shared<State>();
  return Stream<Integer>(Stream<Integer>::Rule([quotients, st](const std::deque<Integer>& prefix) -> std::optional<Integer> {
    auto n = prefix.size();
    if (!quotients.has(n)) return std::nullopt;
    Integer q_next = quotients[n] * st->q_cur + st->q_prev;
    Integer b = st->q_cur * q_next;
    st->q_prev = st->q_cur;
    st->q_cur = q_next;
    return b;
  }));
}

}  // namespace

ScfSeries scf_to_series(const SimpleCF& scf) {
  return ScfSeries{scf.a0(), TypeISeries(scf_denominator_products(scf.quotients()))};
}

ScfSeries scf_to_series(const GCF& cf) {
  auto quotients = cf.elements().map([](const Element& e, std::size_t i) {
    if (e.b != Rat(1) || !e.a.is_integer()) {
      throw std::invalid_argument("continued fraction is not simple at element " + idx(i + 1));
    }
    return e.a.num();
  });
  // Validate eagerly on the first element so obviously non-simple input fails fast.
  if (quotients.has(0)) (void)quotients[0];
  return ScfSeries{cf.a0(), TypeISeries(scf_denominator_products(quotients))};
}

SharpnessReport sharpness_identity(const Integer& B0, std::size_t N) {
  if (B0 < 1) throw std::invalid_argument("sharpness identity needs B_0 >= 1");
  SharpnessReport r;
  r.B0 = B0;
  r.N = N;
  r.B.push_back(B0);
  for (std::size_t n = 0; n <= N; ++n) {
    const Integer& b = r.B.back();
    Integer next = b * (b + 1) - 1;
    check_digit_cap(next, "sharpness stream term");
    r.B.push_back(std::move(next));
  }
  for (std::size_t n = 0; n <= N; ++n) r.lhs += signed_reciprocal(n, r.B[n]);
  r.rhs = Rat(Integer(1), Integer(B0 + 1)) + signed_reciprocal(N, Integer(r.B[N + 1] + 1));
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace altcf
