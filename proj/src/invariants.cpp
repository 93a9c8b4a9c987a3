#include "fiberbound/invariants.hpp"

#include "fiberbound/errors.hpp"

namespace fiberbound {

namespace {

// Column j holds the gradient of gens[j].
PolyMatrix jacobian(const std::vector<Poly>& gens, std::size_t nvars) {
  PolyMatrix m(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    for (const auto& f : gens) m[i].push_back(f.derivative(i));
  return m;
}

struct Embedded {
  AlgebraPtr ambient;
  Subspace span;
  FinModule module;
};

// The submodule of R/ambient_ideal generated by gens, viewed as a module
// over `base`. base's ideal must annihilate it.
Embedded embed(const AlgebraPtr& base, const Ideal& ambient_ideal, const std::vector<Poly>& gens) {
  AlgebraPtr ambient = quotient_algebra(ambient_ideal);
  FinModule amb = free_module(ambient, 1);
  Subspace seed(ambient->field(), ambient->degree());
  for (const auto& g : gens) seed.insert(ambient->element_vector(g));
  Subspace span = submodule_closure(amb, seed);
  FinModule restricted = restrict_to_submodule(amb, span);
  std::vector<Vector> coords;
  for (const auto& g : gens) coords.push_back(span.coordinates(ambient->element_vector(g)));
  FinModule m(base, span.dim(), restricted.actions(), Provenance::subquotient, std::move(coords));
  if (!satisfies_module_axioms(m)) throw Error("embedded module is not annihilated by the base ideal");
  return Embedded{std::move(ambient), std::move(span), std::move(m)};
}

FinModule restricted_omega(const AlgebraPtr& base, const Ideal& ideal) {
  return cokernel_presentation(base, jacobian(ideal.generators(), base->nvars())).module;
}

Vector block(const Vector& v, std::size_t i, std::size_t len) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(i * len), v.begin() + static_cast<std::ptrdiff_t>((i + 1) * len));
}

}  // namespace

FinModule kaehler(const AlgebraPtr& algebra) { return restricted_omega(algebra, algebra->ideal()); }

FinModule kaehler(const Ideal& ideal) { return kaehler(quotient_algebra(ideal)); }

std::size_t tangent_degree(const AlgebraPtr& algebra) {
  return hom_module(kaehler(algebra), free_module(algebra, 1)).module.dim();
}

std::size_t tangent_degree(const Ideal& ideal) { return tangent_degree(quotient_algebra(ideal)); }

Vector Conormal::coordinates_of(const Poly& h) const {
  if (!algebra->ideal().contains(h)) throw InvalidArgument("polynomial is not in the ideal");
  return span.coordinates(square->element_vector(h));
}

Conormal conormal(const AlgebraPtr& algebra) {
  const Ideal& I = algebra->ideal();
  Embedded e = embed(algebra, ideal_power(I, 2), I.generators());
  return Conormal{algebra, std::move(e.ambient), std::move(e.span), std::move(e.module)};
}

Conormal conormal(const Ideal& ideal) { return conormal(quotient_algebra(ideal)); }

HomModule normal_module(const Conormal& c) { return hom_module(c.module, free_module(c.algebra, 1)); }

HomModule normal_module(const Ideal& ideal) { return normal_module(conormal(ideal)); }

FixedOmegaDeformations deformations_fixing_omega(const Ideal& ideal) {
  AlgebraPtr A = quotient_algebra(ideal);
  const FieldSpec& F = A->field();
  const RingPtr& R = A->ring();
  const std::size_t n = A->nvars();
  const std::size_t d = A->degree();
  const std::vector<Poly>& f = ideal.generators();
  const std::size_t g = f.size();

  Conormal C = conormal(A);
  HomModule N = normal_module(C);
  const std::vector<Matrix>& mono = N.target_monomial_actions;

  // a[j][i] = NF(d f_j / d x_i); lower[j][i] = coordinates of d f_j/dx_i - a[j][i] in I/I^2;
  // upper[j][b][i] = coordinates of b * a[j][i] - NF(b * a[j][i]).
  std::vector<std::vector<Vector>> a(g, std::vector<Vector>(n));
  std::vector<std::vector<Vector>> lower(g, std::vector<Vector>(n));
  std::vector<std::vector<std::vector<Vector>>> upper(g, std::vector<std::vector<Vector>>(d, std::vector<Vector>(n)));
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Poly df = f[j].derivative(i);
      a[j][i] = A->element_vector(df);
      Poly nf = A->element_poly(a[j][i]);
      lower[j][i] = C.coordinates_of(df - nf);
      for (std::size_t b = 0; b < d; ++b) {
        Poly prod = Poly::monomial(R, A->basis()[b]) * nf;
        upper[j][b][i] = C.coordinates_of(prod - A->element_poly(A->element_vector(prod)));
      }
    }

  // Derivatives of the basis monomials, reduced into A.
  std::vector<Matrix> D(n, Matrix(d, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < d; ++b) D[i].set_column(b, A->element_vector(Poly::monomial(R, A->basis()[b]).derivative(i)));

  // P: A^g -> A^n, e_j b -> b * grad f_j. Column (j, b), row (i, c).
  Matrix P(n * d, g * d);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        Vector col = linalg::apply(mono[b], a[j][i], F);
        for (std::size_t c = 0; c < d; ++c) P(i * d + c, j * d + b) = col[c];
      }
  Matrix K = linalg::kernel(P, F);
  Matrix L = linalg::left_kernel(P, F);

  const std::size_t dn = N.module.dim();
  Matrix constraints(L.rows() * K.cols(), dn);
  for (std::size_t t = 0; t < dn && constraints.rows() > 0; ++t) {
    Vector e(dn);
    e[t] = 1;
    Matrix phi = N.linear_map(e);
    Vector vals = N.values_of(e);
    Matrix Q(n * d, g * d);
    for (std::size_t j = 0; j < g; ++j) {
      Vector vj = block(vals, j, d);
      for (std::size_t i = 0; i < n; ++i) {
        Vector base = linalg::apply(D[i], vj, F);
        linalg::axpy(base, F.neg(1), linalg::apply(phi, lower[j][i], F), F);
        for (std::size_t b = 0; b < d; ++b) {
          Vector col = linalg::apply(mono[b], base, F);
          linalg::axpy(col, F.neg(1), linalg::apply(phi, upper[j][b][i], F), F);
          for (std::size_t c = 0; c < d; ++c) Q(i * d + c, j * d + b) = col[c];
        }
      }
    }
    Matrix W = linalg::multiply(linalg::multiply(L, Q, F), K, F);
    for (std::size_t r = 0; r < W.rows(); ++r)
      for (std::size_t c = 0; c < W.cols(); ++c) constraints(r * W.cols() + c, t) = W(r, c);
  }

  Subspace space(F, dn);
  if (constraints.rows() == 0) {
    space = Subspace::full(F, dn);
  } else {
    Matrix sol = linalg::kernel(constraints, F);
    for (std::size_t c = 0; c < sol.cols(); ++c) space.insert(sol.column(c));
  }
  Subspace closure = submodule_closure(N.module, space);
  return FixedOmegaDeformations{std::move(C), std::move(N), std::move(space), std::move(closure)};
}

Vector translation_direction(const FixedOmegaDeformations& def, std::size_t var) {
  const AlgebraPtr& A = def.conormal.algebra;
  if (var >= A->nvars()) throw InvalidArgument("variable index out of range");
  const auto& f = A->ideal().generators();
  const std::size_t d = A->degree();
  Vector vals(f.size() * d);
  for (std::size_t j = 0; j < f.size(); ++j) {
    Vector v = A->element_vector(f[j].derivative(var));
    for (std::size_t b = 0; b < d; ++b) vals[j * d + b] = v[b];
  }
  if (!def.normal.values.contains(vals)) throw Error("translation does not define a normal vector");
  return def.normal.values.coordinates(vals);
}

Subspace nilradical(const AlgebraPtr& algebra) {
  const FieldSpec& F = algebra->field();
  if (!F.is_rationals()) throw InvalidArgument("nilradical via the trace form needs characteristic zero");
  const std::size_t d = algebra->degree();
  std::vector<Matrix> mono = free_module(algebra, 1).monomial_actions();
  Vector tr(d);
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t r = 0; r < d; ++r) tr[e] = F.add(tr[e], mono[e](r, r));
  // Tr(b * c) = sum_e (b c)_e Tr(e).
  Matrix form(d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t e = 0; e < d; ++e)
        if (sgn(mono[b](e, c)) != 0) F.add_mul(form(b, c), mono[b](e, c), tr[e]);
  Matrix ker = linalg::kernel(form, F);
  Subspace out(F, d);
  for (std::size_t c = 0; c < ker.cols(); ++c) out.insert(ker.column(c));
  return out;
}

bool is_reduced(const AlgebraPtr& algebra) { return nilradical(algebra).dim() == 0; }

bool is_free(const FinModule& m, std::size_t rank) {
  const std::size_t d = m.algebra()->degree();
  if (m.dim() != rank * d) return false;
  if (rank == 0) return true;
  Subspace J = nilradical(m.algebra());
  Subspace jm(m.field(), m.dim());
  for (std::size_t t = 0; t < m.dim(); ++t) {
    Vector e(m.dim());
    e[t] = 1;
    auto orb = m.orbit(e);
    for (const auto& j : J.basis()) {
      Vector w(m.dim());
      for (std::size_t b = 0; b < d; ++b) linalg::axpy(w, j[b], orb[b], m.field());
      jm.insert(std::move(w));
    }
  }
  const std::size_t red = d - J.dim();
  QuotientModule top = quotient_by_subspace(m, jm);
  if (top.module.dim() != rank * red) return false;
  return hom_module(top.module, top.module).module.dim() == rank * rank * red;
}

QInvariant q_invariant(const Ideal& ix, const Ideal& iy, std::optional<std::size_t> dim_x) {
  if (!same_ring(ix.ring(), iy.ring())) throw RingMismatch();
  Ideal iz = ideal_sum(ix, iy);
  if (!is_zero_dimensional(iz)) throw NotZeroDimensional();
  const int kx = krull_dimension(ix);
  const int ky = krull_dimension(iy);
  if (kx < 0 || ky < 0) throw ImproperIdeal();
  if (dim_x && *dim_x != static_cast<std::size_t>(kx))
    throw InvalidArgument("declared dim X = " + std::to_string(*dim_x) + " but the ideal has dimension " +
                          std::to_string(kx));
  const std::size_t n = ix.ring()->nvars();
  const std::size_t codim_y = n - static_cast<std::size_t>(ky);
  if (iy.generators().size() != codim_y)
    throw InvalidArgument("Y must be given by codim Y = " + std::to_string(codim_y) + " generators");
  if (codim_y == static_cast<std::size_t>(kx)) throw ZeroDenominator("codim Y equals dim X");
  if (codim_y < static_cast<std::size_t>(kx)) throw InvalidArgument("codim Y - dim X must be positive");

  AlgebraPtr oz = quotient_algebra(iz);
  Embedded s = embed(oz, ideal_sum(ix, ideal_power(iy, 2)), iy.generators());
  HomModule hom = hom_module(s.module, free_module(oz, 1));
  // Hom(I_Y/I_Y^2, O_Z) = O_Z^codim, and the precomposition map sends phi
  // to its values on the generators of I_Y, which is how hom stores phi.
  const std::size_t target = codim_y * oz->degree();
  const std::size_t coker = target - hom.values.dim();
  Scalar q(static_cast<unsigned long>(coker), static_cast<unsigned long>(codim_y - static_cast<std::size_t>(kx)));
  q.canonicalize();
  return QInvariant{oz->degree(), static_cast<std::size_t>(kx), codim_y, hom.values.dim(), target, coker, q};
}

LciCheck check_lci_hypotheses(const Ideal& ix, const Ideal& iy) {
  if (!same_ring(ix.ring(), iy.ring())) throw RingMismatch();
  Ideal iz = ideal_sum(ix, iy);
  if (!is_zero_dimensional(iz)) throw NotZeroDimensional();
  const int kx = krull_dimension(ix);
  const int ky = krull_dimension(iy);
  if (kx < 0 || ky < 0) throw ImproperIdeal();
  AlgebraPtr oz = quotient_algebra(iz);
  LciCheck out{};
  out.x_smooth = is_free(restricted_omega(oz, ix), static_cast<std::size_t>(kx));
  out.y_smooth = is_free(restricted_omega(oz, iy), static_cast<std::size_t>(ky));
  Embedded s = embed(oz, ideal_sum(ix, ideal_power(iy, 2)), iy.generators());
  out.z_lci_in_x = is_free(s.module, static_cast<std::size_t>(kx));
  return out;
}

SchemeInvariants scheme_invariants(const Ideal& ideal) {
  AlgebraPtr A = quotient_algebra(ideal);
  FinModule omega = kaehler(A);
  SchemeInvariants out{};
  out.degree = A->degree();
  out.omega_degree = omega.dim();
  out.tangent_degree = hom_module(omega, free_module(A, 1)).module.dim();
  out.normal_degree = normal_module(conormal(A)).module.dim();
  if (A->field().is_rationals()) {
    const bool reduced = is_reduced(A);
    if ((out.omega_degree == 0) != reduced) throw Error("omega vanishes but the algebra is not reduced, or conversely");
    if ((out.tangent_degree == 0) != (out.omega_degree == 0)) throw Error("tangent and omega disagree on vanishing");
  }
  return out;
}

}  // namespace fiberbound
