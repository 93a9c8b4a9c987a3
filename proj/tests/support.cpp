#include "support.hpp"

#include <functional>

namespace fiberbound::testing {

RingPtr ring(std::vector<std::string> vars, MonomialOrder order, FieldSpec field) {
  return PolyRing::make(field, std::move(vars), order);
}

Poly P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return Ideal(r, std::move(ps));
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = {
      {"origin", {"x", "y"}, {"x", "y"}},
      {"double_point", {"x", "y"}, {"x^2", "y"}},
      {"maximal_square", {"x", "y"}, {"x^2", "x*y", "y^2"}},
      {"quartic_quintic", {"x", "y"}, {"x^4 + y^4", "x*y*(x - y)*(x + y)*(x - 2*y)"}},
      {"triple_point", {"x", "y"}, {"x^3", "y"}},
      {"parabola_cut", {"x", "y"}, {"y - x^2", "x^3"}},
      {"conic_pencil", {"x", "y"}, {"x^2 + y^2", "x*y"}},
      {"two_points", {"x", "y"}, {"x^2 - 1", "y"}},
      {"cusp_cut", {"x", "y"}, {"x^2 - y^3", "x*y"}},
      {"fermat_quintic_cut", {"x", "y", "z"},
       {"x^3 + y^3 + z^3", "x^5", "x^4*y", "x^4*z", "x^3*y^2", "x^3*y*z", "x^3*z^2", "x^2*y^3", "x^2*y^2*z", "x^2*y*z^2", "x^2*z^3", "x*y^4", "x*y^3*z", "x*y^2*z^2", "x*y*z^3", "x*z^4", "y^5", "y^4*z", "y^3*z^2", "y^2*z^3", "y*z^4", "z^5"}},
      {"maximal_cube", {"x", "y", "z"}, {"x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z", "x*z^2", "y^3", "y^2*z", "y*z^2", "z^3"}},
      {"coordinate_squares", {"x", "y", "z"}, {"x^2", "y^2", "z^2"}},
  };
  return c;
}

Ideal corpus_ideal(const CorpusEntry& e, MonomialOrder order) { return ideal(ring(e.vars, order), e.gens); }

Poly random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, r->nvars() - 1);
  std::vector<Term> terms;
  for (unsigned t = nterms(rng); t > 0; --t) {
    std::vector<std::uint32_t> e(r->nvars(), 0);
    for (unsigned k = deg(rng); k > 0; --k) ++e[var(rng)];
    int c = 0;
    while (c == 0) c = coef(rng);
    terms.push_back(Term{Monomial(e), Scalar(c)});
  }
  return Poly(r, std::move(terms));
}

std::vector<std::vector<std::pair<unsigned, unsigned>>> monomial_antichains(unsigned max_degree) {
  std::vector<std::vector<std::pair<unsigned, unsigned>>> out;
  std::vector<std::pair<unsigned, unsigned>> cur;
  // Points in order of strictly decreasing x-exponent and strictly increasing y-exponent.
  std::function<void(int, int)> rec = [&](int max_a, int min_b) {
    for (int a = max_a; a >= 0; --a)
      for (int b = min_b; a + b <= static_cast<int>(max_degree); ++b) {
        cur.emplace_back(a, b);
        out.push_back(cur);
        rec(a - 1, b + 1);
        cur.pop_back();
      }
  };
  rec(static_cast<int>(max_degree), 0);
  return out;
}

long staircase_count(const std::vector<std::pair<unsigned, unsigned>>& gens) {
  long ax = -1, by = -1;
  for (auto [a, b] : gens) {
    if (b == 0) ax = a;
    if (a == 0) by = b;
  }
  if (ax < 0 || by < 0) return -1;
  long count = 0;
  for (long i = 0; i < ax; ++i)
    for (long j = 0; j < by; ++j) {
      bool divisible = false;
      for (auto [a, b] : gens) divisible = divisible || (i >= a && j >= b);
      count += !divisible;
    }
  return count;
}

std::size_t bareiss_rank(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        mpz_class v = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = v;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t derivation_dimension(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->nvars();
  const std::size_t d = algebra->degree();
  const auto& f = algebra->ideal().generators();
  const RingPtr& R = algebra->ring();
  Matrix m(f.size() * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < d; ++b) {
      Poly xb = Poly::monomial(R, algebra->basis()[b]);
      for (std::size_t j = 0; j < f.size(); ++j) {
        Vector v = algebra->element_vector(f[j].derivative(i) * xb);
        for (std::size_t c = 0; c < d; ++c) m(j * d + c, i * d + b) = v[c];
      }
    }
  return n * d - bareiss_rank(m);
}

}  // namespace fiberbound::testing
