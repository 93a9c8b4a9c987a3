#include "fiberbound/artin.hpp"

#include "fiberbound/errors.hpp"

namespace fiberbound {

ArtinAlgebra::ArtinAlgebra(Ideal ideal) : ideal_(std::move(ideal)), basis_(standard_monomials(ideal_)) {
  const std::size_t n = ideal_.ring()->nvars();
  const std::size_t d = basis_.size();
  for (std::size_t i = 0; i < d; ++i) index_.emplace(basis_[i].exponents(), i);

  pred_.assign(d, Step{0, 0});
  for (std::size_t b = 1; b < d; ++b) {
    const Monomial& m = basis_[b];
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] == 0) continue;
      auto e = m.exponents();
      --e[v];
      pred_[b] = Step{index_.at(e), v};
      break;
    }
  }

  mult_.assign(n, Matrix(d, d));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b) {
      Monomial m = basis_[b].times_variable(v);
      auto it = index_.find(m.exponents());
      if (it != index_.end()) {
        mult_[v](it->second, b) = 1;
      } else {
        mult_[v].set_column(b, element_vector(Poly::monomial(ring(), m)));
      }
    }
}

Vector ArtinAlgebra::element_vector(const Poly& f) const {
  if (!same_ring(f.ring(), ring())) throw RingMismatch();
  Poly r = ideal_.normal_form(f);
  Vector v(basis_.size());
  for (const auto& t : r.terms()) v[index_.at(t.mono.exponents())] = t.coef;
  return v;
}

Poly ArtinAlgebra::element_poly(const Vector& v) const {
  if (v.size() != basis_.size()) throw DimensionMismatch("element has wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) terms.push_back(Term{basis_[i], v[i]});
  return Poly(ring(), std::move(terms));
}

Vector ArtinAlgebra::one() const {
  Vector v(basis_.size());
  v[0] = 1;
  return v;
}

Matrix ArtinAlgebra::multiplication_matrix(const Vector& a) const {
  const std::size_t d = basis_.size();
  if (a.size() != d) throw DimensionMismatch("element has wrong length");
  const FieldSpec& F = field();
  // Column b of the result is a * b; a * b = x_v * (a * b') along the predecessor chain.
  Matrix m(d, d);
  std::vector<Vector> cols(d);
  cols[0] = a;
  for (std::size_t b = 1; b < d; ++b) cols[b] = linalg::apply(mult_[pred_[b].var], cols[pred_[b].index], F);
  for (std::size_t b = 0; b < d; ++b) m.set_column(b, cols[b]);
  return m;
}

Vector ArtinAlgebra::multiply(const Vector& a, const Vector& b) const {
  return linalg::apply(multiplication_matrix(a), b, field());
}

AlgebraPtr quotient_algebra(const Ideal& ideal) { return std::make_shared<const ArtinAlgebra>(ideal); }

std::size_t degree(const ArtinAlgebra& algebra) { return algebra.degree(); }

}  // namespace fiberbound
