#ifndef FIBERBOUND_ARTIN_HPP
#define FIBERBOUND_ARTIN_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "fiberbound/groebner.hpp"
#include "fiberbound/linalg.hpp"

namespace fiberbound {

/// Finite-dimensional quotient R/I of a zero-dimensional ideal, as the
/// standard-monomial basis (ascending) and one multiplication matrix per
/// variable. Column b of matrix i holds the coordinates of x_i * b.
class ArtinAlgebra {
 public:
  /// Throws ImproperIdeal / NotZeroDimensional.
  explicit ArtinAlgebra(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const FieldSpec& field() const { return ideal_.ring()->field(); }
  std::size_t degree() const { return basis_.size(); }
  std::size_t nvars() const { return mult_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const Matrix& multiplication(std::size_t var) const { return mult_.at(var); }
  const std::vector<Matrix>& multiplications() const { return mult_; }

  /// Basis monomial b != 1 equals x_var * basis()[index].
  struct Step {
    std::size_t index;
    std::size_t var;
  };
  /// Entry 0 (the monomial 1) is unused.
  const std::vector<Step>& predecessors() const { return pred_; }

  /// Coordinates of the normal form of f.
  Vector element_vector(const Poly& f) const;
  /// The polynomial supported on basis monomials with these coordinates.
  Poly element_poly(const Vector& v) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of multiplication by the element a.
  Matrix multiplication_matrix(const Vector& a) const;
  Vector one() const;

 private:
  Ideal ideal_;
  std::vector<Monomial> basis_;
  std::vector<Matrix> mult_;
  std::vector<Step> pred_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

using AlgebraPtr = std::shared_ptr<const ArtinAlgebra>;

AlgebraPtr quotient_algebra(const Ideal& ideal);
std::size_t degree(const ArtinAlgebra& algebra);

}  // namespace fiberbound

#endif  // FIBERBOUND_ARTIN_HPP
