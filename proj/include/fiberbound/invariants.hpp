#ifndef FIBERBOUND_INVARIANTS_HPP
#define FIBERBOUND_INVARIANTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fiberbound/artin.hpp"
#include "fiberbound/finmod.hpp"

namespace fiberbound {

/// Omega of A = R/I: A^n modulo the columns grad(f_j), n = number of
/// variables. Generators are the images of dx_1..dx_n.
FinModule kaehler(const AlgebraPtr& algebra);
FinModule kaehler(const Ideal& ideal);

/// dim Hom_A(Omega, A).
std::size_t tangent_degree(const AlgebraPtr& algebra);
std::size_t tangent_degree(const Ideal& ideal);

/// I/I^2 as a module over A = R/I, realized inside B = R/I^2.
struct Conormal {
  AlgebraPtr algebra;  // A
  AlgebraPtr square;   // B
  /// I/I^2 as a subspace of B.
  Subspace span;
  /// Coordinates are echelon coordinates in `span`; generators are the
  /// images of the ideal's generators, in order.
  FinModule module;

  /// Coordinates of the class of h in I/I^2. Throws InvalidArgument if
  /// h is not in I.
  Vector coordinates_of(const Poly& h) const;
};

Conormal conormal(const AlgebraPtr& algebra);
Conormal conormal(const Ideal& ideal);

/// Hom_A(I/I^2, A). An element is stored through its values phi(f_j).
HomModule normal_module(const Conormal& conormal);
HomModule normal_module(const Ideal& ideal);

struct FixedOmegaDeformations {
  Conormal conormal;
  HomModule normal;
  /// V', in the coordinates of normal.module.
  Subspace space;
  /// Smallest submodule of the normal module containing V'.
  Subspace closure;
};

/// First-order embedded deformations f_j + eps*phi(f_j) along which Omega
/// stays flat over k[eps]/(eps^2). Writing the Jacobian presentation of
/// the deformed Omega as [[P, 0], [Q_phi, P]], phi qualifies iff Q_phi
/// maps ker P into im P.
FixedOmegaDeformations deformations_fixing_omega(const Ideal& ideal);

/// The element of the normal module sending f_j to d f_j / d x_var.
Vector translation_direction(const FixedOmegaDeformations& def, std::size_t var);

/// Nilradical of A as a subspace of A, via the radical of the trace form.
/// Characteristic zero only (throws InvalidArgument otherwise).
Subspace nilradical(const AlgebraPtr& algebra);
bool is_reduced(const AlgebraPtr& algebra);

/// M is isomorphic to A^rank. Uses dim M = rank * deg A together with
/// dim M/JM = rank * dim A/J and dim End(M/JM) = rank^2 * dim A/J
/// (J the nilradical), which forces every local rank to equal `rank`.
bool is_free(const FinModule& m, std::size_t rank);

struct QInvariant {
  std::size_t degree_z;
  std::size_t dim_x;
  std::size_t codim_y;
  std::size_t hom_dim;      // dim Hom(I_{Z/X}/I^2, O_Z)
  std::size_t target_dim;   // codim Y * deg Z
  std::size_t cokernel_dim;
  Scalar q;
};

/// q(X, Y) for X = V(ix) and a complete intersection Y = V(iy) meeting in
/// a zero-dimensional Z. The ambient is the common polynomial ring. If
/// dim_x is given it must agree with the dimension computed from the
/// leading-term ideal. Throws NotZeroDimensional, ZeroDenominator, or
/// InvalidArgument (iy not a complete intersection, declared dim wrong).
QInvariant q_invariant(const Ideal& ix, const Ideal& iy, std::optional<std::size_t> dim_x = std::nullopt);

/// The hypotheses under which q(X, Y) = deg Z: X and Y smooth along Z,
/// and Z a local complete intersection in X. Characteristic zero only.
struct LciCheck {
  bool x_smooth;
  bool y_smooth;
  bool z_lci_in_x;
  bool holds() const { return x_smooth && y_smooth && z_lci_in_x; }
};
LciCheck check_lci_hypotheses(const Ideal& ix, const Ideal& iy);

struct SchemeInvariants {
  std::size_t degree;
  std::size_t omega_degree;
  std::size_t tangent_degree;
  std::size_t normal_degree;
};

/// Over the rationals also checks omega = 0 iff reduced iff tangent = 0,
/// throwing Error on a violation.
SchemeInvariants scheme_invariants(const Ideal& ideal);

}  // namespace fiberbound

#endif  // FIBERBOUND_INVARIANTS_HPP
