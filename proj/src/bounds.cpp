#include "fiberbound/bounds.hpp"

#include "fiberbound/artin.hpp"
#include "fiberbound/errors.hpp"
#include "fiberbound/invariants.hpp"

namespace fiberbound {

namespace {

Scalar ratio(long p, long q) {
  Scalar r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

BoundReport make_report(BoundKind kind, Scalar lhs, Scalar rhs, const FiberScenario& s) {
  BoundReport r{kind, lhs, rhs, lhs <= rhs, rhs - lhs, {}, {}};
  r.inputs["n"] = s.n;
  r.inputs["c"] = s.c;
  return r;
}

Ideal with_linear_rest(std::vector<Poly> gens, std::size_t used, const RingPtr& ring) {
  for (std::size_t v = used; v < ring->nvars(); ++v) gens.push_back(Poly::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

// Generators of (x_0..x_{k-1})^e.
std::vector<Poly> power_of_coordinate_ideal(const RingPtr& ring, std::size_t k, long e) {
  std::vector<Poly> lin;
  for (std::size_t v = 0; v < k; ++v) lin.push_back(Poly::variable(ring, v));
  return ideal_power(Ideal(ring, lin), static_cast<unsigned>(e)).generators();
}

}  // namespace

void FiberScenario::validate() const {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (c < 1) throw InvalidArgument("c must be at least 1");
  if (m < 0) throw InvalidArgument("m must be nonnegative");
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::subscheme: return "subscheme";
    case BoundKind::thom_boardman: return "tb";
    case BoundKind::family: return "family";
    case BoundKind::fiber: return "fiber";
  }
  return "?";
}

BoundReport check_subscheme_bound(long deg_y, long deg_t, const FiberScenario& s) {
  s.validate();
  if (deg_y < 1) throw InvalidArgument("deg Y must be at least 1");
  if (deg_t < 0) throw InvalidArgument("deg T must be nonnegative");
  auto r = make_report(BoundKind::subscheme, deg_y + ratio(deg_t, s.c), ratio(s.n, s.c) + 1, s);
  r.inputs["deg_y"] = deg_y;
  r.inputs["deg_t"] = deg_t;
  return r;
}

BoundReport check_thom_boardman(const std::vector<long>& coranks, const FiberScenario& s) {
  s.validate();
  Scalar lhs = 0;
  for (long d : coranks) {
    if (d < 0) throw InvalidArgument("coranks must be nonnegative");
    lhs += ratio(d * d, s.c) + d + 1;
  }
  auto r = make_report(BoundKind::thom_boardman, lhs, ratio(s.n, s.c) + 1, s);
  r.coranks = coranks;
  return r;
}

BoundReport check_family_bound(long deg_u, long min_deg_t, const FiberScenario& s) {
  s.validate();
  if (deg_u < 1) throw InvalidArgument("deg U must be at least 1");
  if (min_deg_t < 0) throw InvalidArgument("deg T must be nonnegative");
  Scalar lhs = (1 - ratio(s.m, s.c)) * deg_u + ratio(min_deg_t, s.c);
  auto r = make_report(BoundKind::family, lhs, ratio(s.n, s.c) + 1, s);
  r.inputs["m"] = s.m;
  r.inputs["deg_u"] = deg_u;
  r.inputs["min_deg_t"] = min_deg_t;
  return r;
}

BoundReport check_fiber_bound(long deg_z, long deg_closure, const FiberScenario& s) {
  s.validate();
  if (deg_z < 1) throw InvalidArgument("deg Z must be at least 1");
  if (deg_closure < 0) throw InvalidArgument("closure degree must be nonnegative");
  if (deg_closure > (s.n + s.c) * deg_z)
    throw InvalidArgument("closure degree exceeds (n + c) * deg Z, the degree of the free module");
  auto r = make_report(BoundKind::fiber, Scalar(deg_z), ratio(deg_closure, s.n + s.c) + 1, s);
  r.inputs["deg_z"] = deg_z;
  r.inputs["deg_closure"] = deg_closure;
  return r;
}

long min_n_for_subscheme(long deg_y, long deg_t, long c, long m) {
  if (c < 1) throw InvalidArgument("c must be at least 1");
  if (m < 0) throw InvalidArgument("m must be nonnegative");
  return (c - m) * deg_y + deg_t - c;
}

long min_n_for_subscheme(const Ideal& ideal, long c, long m) {
  AlgebraPtr A = quotient_algebra(ideal);
  return min_n_for_subscheme(static_cast<long>(A->degree()), static_cast<long>(tangent_degree(A)), c, m);
}

Ideal corank_scheme(long d, const RingPtr& ring) {
  if (d < 1) throw InvalidArgument("corank must be at least 1");
  if (static_cast<std::size_t>(d) > ring->nvars()) throw InvalidArgument("ring has fewer than d variables");
  return with_linear_rest(power_of_coordinate_ideal(ring, static_cast<std::size_t>(d), 2), static_cast<std::size_t>(d),
                          ring);
}

Ideal boardman_scheme(const std::vector<long>& t, const RingPtr& ring) {
  if (t.empty()) throw InvalidArgument("Boardman symbol must be nonempty");
  if (t.size() > ring->nvars()) throw InvalidArgument("ring has fewer variables than the Boardman symbol");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1) throw InvalidArgument("Boardman symbol entries must be positive");
    if (i > 0 && t[i] > t[i - 1]) throw InvalidArgument("Boardman symbol must be nonincreasing");
  }
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (auto& p : power_of_coordinate_ideal(ring, i + 1, t[i])) gens.push_back(std::move(p));
  return with_linear_rest(std::move(gens), t.size(), ring);
}

}  // namespace fiberbound
