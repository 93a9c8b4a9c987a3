#ifndef FIBERBOUND_FINMOD_HPP
#define FIBERBOUND_FINMOD_HPP

#include <cstddef>
#include <vector>

#include "fiberbound/artin.hpp"
#include "fiberbound/linalg.hpp"

namespace fiberbound {

enum class Provenance { free, cokernel, hom, subquotient, other };

/// Finite module over an ArtinAlgebra: a k-vector space of dimension dim()
/// with one commuting action matrix per ring variable.
///
/// A module may carry a list of A-module generators (in its own
/// coordinates). Constructions that know natural generators record them;
/// hom_module uses them as the source presentation.
class FinModule {
 public:
  /// Throws DimensionMismatch if the action list does not fit the algebra.
  FinModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions,
            Provenance provenance = Provenance::other, std::vector<Vector> generators = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  const FieldSpec& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t var) const { return actions_.at(var); }
  const std::vector<Matrix>& actions() const { return actions_; }
  Provenance provenance() const { return provenance_; }
  const std::vector<Vector>& generators() const { return generators_; }

  Vector act(std::size_t var, const Vector& v) const;
  /// b * v for every basis monomial b of the algebra, in basis order.
  std::vector<Vector> orbit(const Vector& v) const;
  /// a * v for an algebra element a given by its coordinates.
  Vector act(const Vector& a, const Vector& v) const;
  /// Action matrices of all basis monomials of the algebra.
  std::vector<Matrix> monomial_actions() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> actions_;
  Provenance provenance_;
  std::vector<Vector> generators_;
};

/// Pairwise commuting actions, and every Gröbner basis element of the
/// algebra's ideal acting as zero.
bool satisfies_module_axioms(const FinModule& m);

/// A^rank with coordinates ordered generator-major: index = i * deg A + b.
FinModule free_module(AlgebraPtr algebra, std::size_t rank);

/// Module given by a subspace of M that is stable under the actions,
/// in the subspace's echelon coordinates. Throws NotASubmodule.
FinModule restrict_to_submodule(const FinModule& m, const Subspace& s);

/// Smallest action-stable subspace containing v.
Subspace submodule_closure(const FinModule& m, const Subspace& v);
bool is_submodule(const FinModule& m, const Subspace& s);

struct QuotientModule {
  FinModule module;
  /// dim(quotient) x dim(M).
  Matrix projection;
};

/// M / S, using the non-pivot coordinates of S's echelon basis as the
/// quotient basis. Throws NotASubmodule.
QuotientModule quotient_by_subspace(const FinModule& m, const Subspace& s);

/// Matrix with `rows` rows and `cols` columns of ring elements.
using PolyMatrix = std::vector<std::vector<Poly>>;

/// A^rows modulo the submodule generated by the columns (entries reduced
/// into A). Generators of the result are the images of the free basis.
QuotientModule cokernel_presentation(AlgebraPtr algebra, const PolyMatrix& matrix);

/// Hom_A(M, N). An element is stored through its values on a fixed
/// generating set g_1..g_s of M, i.e. as a vector in N^s.
struct HomModule {
  FinModule module;
  std::vector<Vector> source_generators;
  /// Admissible value tuples (phi(g_1), ..., phi(g_s)) inside N^s. Module
  /// coordinates are coordinates in this subspace.
  Subspace values;
  /// (s * deg A) x dim M; maps m to (a_1..a_s) with sum a_i g_i = m.
  Matrix source_lift;
  std::size_t source_dim;
  std::size_t target_dim;
  /// Action matrices of the algebra's basis monomials on N.
  std::vector<Matrix> target_monomial_actions;

  /// The tuple (phi(g_1), ..., phi(g_s)) of an element.
  Vector values_of(const Vector& coords) const;
  /// The element as a k-linear map, dim N x dim M.
  Matrix linear_map(const Vector& coords) const;
};

/// Throws DimensionMismatch if M and N live over different algebras.
HomModule hom_module(const FinModule& m, const FinModule& n);

/// All k-linear maps commuting with every variable action, found as one
/// linear system in dim N * dim M unknowns. Each basis vector is a
/// row-major flattened dim N x dim M matrix. Independent route to the
/// dimension of Hom, intended for small modules.
Subspace hom_by_commutation(const FinModule& m, const FinModule& n);

/// A-module generators of M: the recorded ones, or a greedy choice among
/// the standard basis vectors.
std::vector<Vector> generating_set(const FinModule& m);

struct MapRank {
  std::size_t rank;
  std::size_t kernel_dim;
  std::size_t cokernel_dim;
};

/// Rank data of an A-linear map f: M -> N given as a dim N x dim M matrix.
/// Throws InvalidArgument if f does not commute with the actions.
MapRank induced_map_dim(const FinModule& m, const FinModule& n, const Matrix& f);

}  // namespace fiberbound

#endif  // FIBERBOUND_FINMOD_HPP
