#include "fiberbound/finmod.hpp"

#include <deque>
#include <map>

#include "fiberbound/errors.hpp"

namespace fiberbound {

namespace {

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (same_ring(a->ring(), b->ring()) && a->ideal().same_as(b->ideal()));
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

}  // namespace

FinModule::FinModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions, Provenance provenance,
                     std::vector<Vector> generators)
    : algebra_(std::move(algebra)),
      dim_(dim),
      actions_(std::move(actions)),
      provenance_(provenance),
      generators_(std::move(generators)) {
  if (actions_.size() != algebra_->nvars()) throw DimensionMismatch("one action matrix per variable expected");
  for (const auto& a : actions_)
    if (a.rows() != dim_ || a.cols() != dim_) throw DimensionMismatch("action matrix has wrong shape");
  for (const auto& g : generators_)
    if (g.size() != dim_) throw DimensionMismatch("generator has wrong length");
}

Vector FinModule::act(std::size_t var, const Vector& v) const { return linalg::apply(actions_.at(var), v, field()); }

std::vector<Vector> FinModule::orbit(const Vector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector does not belong to the module");
  const auto& pred = algebra_->predecessors();
  std::vector<Vector> out(algebra_->degree());
  out[0] = v;
  for (std::size_t b = 1; b < out.size(); ++b) out[b] = act(pred[b].var, out[pred[b].index]);
  return out;
}

Vector FinModule::act(const Vector& a, const Vector& v) const {
  if (a.size() != algebra_->degree()) throw DimensionMismatch("algebra element has wrong length");
  auto orb = orbit(v);
  Vector out(dim_);
  for (std::size_t b = 0; b < a.size(); ++b) linalg::axpy(out, a[b], orb[b], field());
  return out;
}

std::vector<Matrix> FinModule::monomial_actions() const {
  const auto& pred = algebra_->predecessors();
  std::vector<Matrix> out(algebra_->degree());
  out[0] = Matrix::identity(dim_);
  for (std::size_t b = 1; b < out.size(); ++b)
    out[b] = linalg::multiply(actions_[pred[b].var], out[pred[b].index], field());
  return out;
}

bool satisfies_module_axioms(const FinModule& m) {
  const FieldSpec& F = m.field();
  const auto& acts = m.actions();
  for (std::size_t i = 0; i < acts.size(); ++i)
    for (std::size_t j = i + 1; j < acts.size(); ++j)
      if (!(linalg::multiply(acts[i], acts[j], F) == linalg::multiply(acts[j], acts[i], F))) return false;

  std::map<std::vector<std::uint32_t>, Matrix> cache;
  auto monomial_matrix = [&](const Monomial& mono) {
    auto it = cache.find(mono.exponents());
    if (it != cache.end()) return it->second;
    Matrix r = Matrix::identity(m.dim());
    for (std::size_t v = 0; v < mono.size(); ++v)
      for (std::uint32_t e = 0; e < mono[v]; ++e) r = linalg::multiply(acts[v], r, F);
    cache.emplace(mono.exponents(), r);
    return r;
  };
  for (const auto& g : m.algebra()->ideal().groebner_basis()) {
    Matrix sum(m.dim(), m.dim());
    for (const auto& t : g.terms()) sum = linalg::add(sum, linalg::scaled(monomial_matrix(t.mono), t.coef, F), F);
    if (!sum.is_zero()) return false;
  }
  return true;
}

FinModule free_module(AlgebraPtr algebra, std::size_t rank) {
  if (rank == 0) throw InvalidArgument("free module rank must be positive");
  const std::size_t d = algebra->degree();
  std::vector<Matrix> acts;
  for (std::size_t v = 0; v < algebra->nvars(); ++v) {
    Matrix a(rank * d, rank * d);
    const Matrix& mv = algebra->multiplication(v);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) a(i * d + r, i * d + c) = mv(r, c);
    acts.push_back(std::move(a));
  }
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(unit_vector(rank * d, i * d));
  return FinModule(algebra, rank * d, std::move(acts), Provenance::free, std::move(gens));
}

Subspace submodule_closure(const FinModule& m, const Subspace& v) {
  if (v.ambient_dim() != m.dim()) throw DimensionMismatch("subspace does not live in the module");
  Subspace out(m.field(), m.dim());
  std::deque<Vector> work;
  for (const auto& b : v.basis())
    if (out.insert(b)) work.push_back(b);
  while (!work.empty()) {
    Vector cur = std::move(work.front());
    work.pop_front();
    for (std::size_t var = 0; var < m.actions().size(); ++var) {
      Vector w = m.act(var, cur);
      if (out.insert(w)) work.push_back(std::move(w));
    }
  }
  return out;
}

bool is_submodule(const FinModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("subspace does not live in the module");
  for (const auto& b : s.basis())
    for (std::size_t var = 0; var < m.actions().size(); ++var)
      if (!s.contains(m.act(var, b))) return false;
  return true;
}

FinModule restrict_to_submodule(const FinModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw NotASubmodule();
  std::vector<Matrix> acts;
  for (std::size_t var = 0; var < m.actions().size(); ++var) {
    Matrix a(s.dim(), s.dim());
    for (std::size_t t = 0; t < s.dim(); ++t) a.set_column(t, s.coordinates(m.act(var, s.basis()[t])));
    acts.push_back(std::move(a));
  }
  return FinModule(m.algebra(), s.dim(), std::move(acts), Provenance::subquotient);
}

QuotientModule quotient_by_subspace(const FinModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw NotASubmodule();
  std::vector<std::size_t> free_cols;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (k < s.pivots().size() && s.pivots()[k] == c) {
        ++k;
        continue;
      }
      free_cols.push_back(c);
    }
  }
  const std::size_t q = free_cols.size();
  auto project = [&](const Vector& v) {
    Vector r = s.reduce(v);
    Vector out(q);
    for (std::size_t j = 0; j < q; ++j) out[j] = r[free_cols[j]];
    return out;
  };
  Matrix projection(q, m.dim());
  for (std::size_t t = 0; t < m.dim(); ++t) projection.set_column(t, project(unit_vector(m.dim(), t)));
  std::vector<Matrix> acts;
  for (std::size_t var = 0; var < m.actions().size(); ++var) {
    Matrix a(q, q);
    for (std::size_t j = 0; j < q; ++j) a.set_column(j, project(m.act(var, unit_vector(m.dim(), free_cols[j]))));
    acts.push_back(std::move(a));
  }
  std::vector<Vector> gens;
  for (const auto& g : m.generators()) gens.push_back(project(g));
  return QuotientModule{FinModule(m.algebra(), q, std::move(acts), Provenance::subquotient, std::move(gens)),
                        std::move(projection)};
}

QuotientModule cokernel_presentation(AlgebraPtr algebra, const PolyMatrix& matrix) {
  const std::size_t rows = matrix.size();
  if (rows == 0) throw InvalidArgument("presentation matrix needs at least one row");
  const std::size_t cols = matrix.front().size();
  for (const auto& r : matrix)
    if (r.size() != cols) throw DimensionMismatch("presentation matrix is ragged");
  const std::size_t d = algebra->degree();
  FinModule free = free_module(algebra, rows);
  Subspace relations(algebra->field(), free.dim());
  for (std::size_t c = 0; c < cols; ++c) {
    Vector col(free.dim());
    for (std::size_t r = 0; r < rows; ++r) {
      Vector e = algebra->element_vector(matrix[r][c]);
      for (std::size_t b = 0; b < d; ++b) col[r * d + b] = e[b];
    }
    relations.insert(std::move(col));
  }
  QuotientModule q = quotient_by_subspace(free, submodule_closure(free, relations));
  q.module = FinModule(q.module.algebra(), q.module.dim(), q.module.actions(), Provenance::cokernel,
                       q.module.generators());
  return q;
}

std::vector<Vector> generating_set(const FinModule& m) {
  if (!m.generators().empty() || m.dim() == 0) return m.generators();
  std::vector<Vector> gens;
  Subspace span(m.field(), m.dim());
  for (std::size_t t = 0; t < m.dim() && span.dim() < m.dim(); ++t) {
    Vector e = unit_vector(m.dim(), t);
    if (span.contains(e)) continue;
    gens.push_back(e);
    for (auto& w : m.orbit(e)) span.insert(std::move(w));
    span = submodule_closure(m, span);
  }
  return gens;
}

Vector HomModule::values_of(const Vector& coords) const {
  if (coords.size() != values.dim()) throw DimensionMismatch("hom element has wrong length");
  Vector out(values.ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) linalg::axpy(out, coords[i], values.basis()[i], values.field());
  return out;
}

Matrix HomModule::linear_map(const Vector& coords) const {
  const FieldSpec& F = values.field();
  const std::size_t s = source_generators.size();
  const std::size_t d = target_monomial_actions.size();
  Vector vals = values_of(coords);
  // orbit[i][b] = b * phi(g_i)
  std::vector<std::vector<Vector>> orbit(s, std::vector<Vector>(d));
  for (std::size_t i = 0; i < s; ++i) {
    Vector vi(vals.begin() + static_cast<std::ptrdiff_t>(i * target_dim),
              vals.begin() + static_cast<std::ptrdiff_t>((i + 1) * target_dim));
    for (std::size_t b = 0; b < d; ++b) orbit[i][b] = linalg::apply(target_monomial_actions[b], vi, F);
  }
  Matrix out(target_dim, source_dim);
  for (std::size_t t = 0; t < source_dim; ++t) {
    Vector col(target_dim);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t b = 0; b < d; ++b) linalg::axpy(col, source_lift(i * d + b, t), orbit[i][b], F);
    out.set_column(t, col);
  }
  return out;
}

HomModule hom_module(const FinModule& m, const FinModule& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw DimensionMismatch("modules over different algebras");
  const FieldSpec& F = m.field();
  const AlgebraPtr& alg = m.algebra();
  const std::size_t d = alg->degree();
  const std::size_t nd = n.dim();
  std::vector<Vector> gens = generating_set(m);
  const std::size_t s = gens.size();

  HomModule hom{FinModule(alg, 0, std::vector<Matrix>(alg->nvars()), Provenance::hom),
                gens,
                Subspace(F, s * nd),
                Matrix(s * d, m.dim()),
                m.dim(),
                nd,
                n.monomial_actions()};

  if (s == 0) {
    hom.values = Subspace(F, 0);
    return hom;
  }

  // A^s -> M, (a_i) -> sum a_i g_i.
  Matrix gmap(m.dim(), s * d);
  for (std::size_t i = 0; i < s; ++i) {
    auto orb = m.orbit(gens[i]);
    for (std::size_t b = 0; b < d; ++b) gmap.set_column(i * d + b, orb[b]);
  }

  // Right inverse of gmap from one elimination of [gmap | I].
  {
    Matrix aug(m.dim(), s * d + m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < s * d; ++c) aug(r, c) = gmap(r, c);
      aug(r, s * d + r) = 1;
    }
    auto piv = linalg::rref(aug, F);
    if (piv.size() != m.dim() || (!piv.empty() && piv.back() >= s * d))
      throw InvalidArgument("generating set does not span the module");
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t t = 0; t < m.dim(); ++t) hom.source_lift(piv[i], t) = aug(i, s * d + t);
  }

  // Relations among the generators. Only A-module generators of the
  // relation module are needed: phi kills a*c once it kills c.
  Matrix rel = linalg::kernel(gmap, F);
  FinModule free = free_module(alg, s);
  Subspace rel_span(F, s * d);
  std::vector<Vector> rel_gens;
  for (std::size_t k = 0; k < rel.cols() && rel_span.dim() < rel.cols(); ++k) {
    Vector c = rel.column(k);
    if (rel_span.contains(c)) continue;
    for (auto& w : free.orbit(c)) rel_span.insert(std::move(w));
    rel_gens.push_back(std::move(c));
  }

  Matrix eqs(rel_gens.size() * nd, s * nd);
  for (std::size_t k = 0; k < rel_gens.size(); ++k)
    for (std::size_t i = 0; i < s; ++i) {
      Matrix block(nd, nd);
      for (std::size_t b = 0; b < d; ++b) {
        const Scalar& c = rel_gens[k][i * d + b];
        if (sgn(c) != 0) block = linalg::add(block, linalg::scaled(hom.target_monomial_actions[b], c, F), F);
      }
      for (std::size_t r = 0; r < nd; ++r)
        for (std::size_t col = 0; col < nd; ++col) eqs(k * nd + r, i * nd + col) = block(r, col);
    }
  Matrix sol = linalg::kernel(eqs, F);
  for (std::size_t c = 0; c < sol.cols(); ++c) hom.values.insert(sol.column(c));

  const std::size_t h = hom.values.dim();
  std::vector<Matrix> acts;
  for (std::size_t var = 0; var < alg->nvars(); ++var) {
    Matrix a(h, h);
    for (std::size_t t = 0; t < h; ++t) {
      const Vector& u = hom.values.basis()[t];
      Vector w(s * nd);
      for (std::size_t i = 0; i < s; ++i) {
        Vector vi(u.begin() + static_cast<std::ptrdiff_t>(i * nd), u.begin() + static_cast<std::ptrdiff_t>((i + 1) * nd));
        Vector xi = n.act(var, vi);
        for (std::size_t r = 0; r < nd; ++r) w[i * nd + r] = xi[r];
      }
      a.set_column(t, hom.values.coordinates(w));
    }
    acts.push_back(std::move(a));
  }
  hom.module = FinModule(alg, h, std::move(acts), Provenance::hom);
  return hom;
}

Subspace hom_by_commutation(const FinModule& m, const FinModule& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw DimensionMismatch("modules over different algebras");
  const FieldSpec& F = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  const std::size_t nv = m.actions().size();
  Matrix eqs(nv * dn * dm, dn * dm);
  for (std::size_t var = 0; var < nv; ++var) {
    const Matrix& a = m.action(var);
    const Matrix& b = n.action(var);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        std::size_t row = (var * dn + r) * dm + c;
        // (phi a)(r, c) - (b phi)(r, c)
        for (std::size_t k = 0; k < dm; ++k) eqs(row, r * dm + k) = F.add(eqs(row, r * dm + k), a(k, c));
        for (std::size_t k = 0; k < dn; ++k) eqs(row, k * dm + c) = F.sub(eqs(row, k * dm + c), b(r, k));
      }
  }
  Matrix sol = linalg::kernel(eqs, F);
  Subspace out(F, dn * dm);
  for (std::size_t c = 0; c < sol.cols(); ++c) out.insert(sol.column(c));
  return out;
}

MapRank induced_map_dim(const FinModule& m, const FinModule& n, const Matrix& f) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InvalidArgument("modules over different algebras");
  if (f.rows() != n.dim() || f.cols() != m.dim()) throw InvalidArgument("map has wrong shape");
  const FieldSpec& F = m.field();
  for (std::size_t var = 0; var < m.actions().size(); ++var)
    if (!(linalg::multiply(f, m.action(var), F) == linalg::multiply(n.action(var), f, F)))
      throw InvalidArgument("map is not A-linear");
  std::size_t r = linalg::rank(f, F);
  return MapRank{r, m.dim() - r, n.dim() - r};
}

}  // namespace fiberbound
