#ifndef FIBERBOUND_GROEBNER_HPP
#define FIBERBOUND_GROEBNER_HPP

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fiberbound/poly.hpp"

namespace fiberbound {

/// Full reduction of f by an arbitrary list of divisors. With a Gröbner
/// basis as divisors this is the normal form.
Poly reduce(const Poly& f, std::span<const Poly> divisors);

/// Reduced Gröbner basis in the ring's order, sorted by ascending leading
/// monomial. Uses the normal selection strategy with Buchberger's product
/// and chain criteria. Throws InvalidArgument if all inputs are zero.
std::vector<Poly> buchberger(std::span<const Poly> gens);

/// Generator list plus a lazily computed reduced Gröbner basis. Copies
/// share the cache; the basis is computed at most once.
class Ideal {
 public:
  /// Throws InvalidArgument for an empty list, RingMismatch for mixed rings.
  explicit Ideal(std::vector<Poly> gens);
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Poly>& groebner_basis() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool is_proper() const;
  /// Equal as ideals (identical reduced bases).
  bool same_as(const Ideal& other) const;
  /// The same generators in a ring that differs only in monomial order.
  Ideal in_ring(RingPtr other) const;

 private:
  void validate() const;

  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

enum class IdealOp { sum, product };
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// k-fold product, k >= 1.
Ideal ideal_power(const Ideal& a, unsigned k);
Ideal ideal_ops(IdealOp op, const Ideal& a, const Ideal& b);

/// True iff every variable has a pure power among the leading monomials.
/// Throws ImproperIdeal for the unit ideal.
bool is_zero_dimensional(const Ideal& ideal);

/// Monomials outside the leading-term ideal, ascending. Throws
/// ImproperIdeal or NotZeroDimensional.
std::vector<Monomial> standard_monomials(const Ideal& ideal);

/// Krull dimension of R/I from the leading-term ideal (largest set of
/// variables carrying no leading monomial); -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

}  // namespace fiberbound

#endif  // FIBERBOUND_GROEBNER_HPP
