#ifndef FIBERBOUND_BOUNDS_HPP
#define FIBERBOUND_BOUNDS_HPP

#include <map>
#include <string>
#include <vector>

#include "fiberbound/groebner.hpp"

namespace fiberbound {

/// n: dimension of the projected variety, c: codimension increment of the
/// projection target, m: dimension of the parameter space of a family.
struct FiberScenario {
  long n = 1;
  long c = 1;
  long m = 0;

  /// Throws InvalidArgument unless n >= 1, c >= 1, m >= 0.
  void validate() const;
};

enum class BoundKind { subscheme, thom_boardman, family, fiber };
std::string to_string(BoundKind kind);

/// One evaluation of lhs <= rhs. margin = rhs - lhs.
struct BoundReport {
  BoundKind kind;
  Scalar lhs;
  Scalar rhs;
  bool satisfied;
  Scalar margin;
  /// Scalar inputs echoed back (n, c, m, deg_y, ...), and the corank list
  /// for the Thom-Boardman bound.
  std::map<std::string, long> inputs;
  std::vector<long> coranks;
};

/// deg Y + deg T_Y / c <= n/c + 1.
BoundReport check_subscheme_bound(long deg_y, long deg_t, const FiberScenario& s);

/// sum over the points of (d^2/c + d + 1) <= n/c + 1, d the corank.
BoundReport check_thom_boardman(const std::vector<long>& coranks, const FiberScenario& s);

/// (1 - m/c) deg U + min deg T / c <= n/c + 1.
BoundReport check_family_bound(long deg_u, long min_deg_t, const FiberScenario& s);

/// deg Z <= deg(O_Z V) / (n + c) + 1. Throws InvalidArgument if the
/// closure is larger than the free module O_Z^(n+c) allows.
BoundReport check_fiber_bound(long deg_z, long deg_closure, const FiberScenario& s);

/// Least n with (c - m) deg Y + deg T - c <= n. Not clamped to n >= 1.
long min_n_for_subscheme(long deg_y, long deg_t, long c, long m);

/// Same, with deg Y and deg T computed from the ideal. For a family, the
/// given member's deg T stands in for the minimum over the family; deg T
/// is upper semicontinuous, so the true minimum can only be lower.
long min_n_for_subscheme(const Ideal& ideal, long c, long m);

/// m^2 in the first d variables; remaining variables are added as linear
/// generators so the scheme is the point A_d inside the given ring.
Ideal corank_scheme(long d, const RingPtr& ring);

/// (x_1)^t_1 + (x_1, x_2)^t_2 + ... + (x_1..x_k)^t_k, plus the remaining
/// variables as linear generators. t must be nonempty, nonincreasing, >= 1.
Ideal boardman_scheme(const std::vector<long>& t, const RingPtr& ring);

}  // namespace fiberbound

#endif  // FIBERBOUND_BOUNDS_HPP
