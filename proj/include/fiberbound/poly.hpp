#ifndef FIBERBOUND_POLY_HPP
#define FIBERBOUND_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fiberbound/field.hpp"

namespace fiberbound {

enum class MonomialOrder { grevlex, grlex, lex };

std::string to_string(MonomialOrder order);
/// Accepts "grevlex", "grlex", "lex".
std::optional<MonomialOrder> parse_order(std::string_view name);

/// Exponent vector with its total degree cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.exps_[i] = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Only meaningful when divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial times_variable(std::size_t i) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

/// Total order used by all sorted containers of the library. Throws
/// DimensionMismatch if the exponent vectors differ in length.
std::strong_ordering order_compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Field, ordered variable names and a monomial order. Rings are compared
/// structurally: two polynomials are compatible iff their rings are equal.
class PolyRing {
 public:
  /// Throws InvalidArgument on empty, malformed or duplicate variable names.
  static std::shared_ptr<const PolyRing> make(FieldSpec field, std::vector<std::string> vars,
                                              MonomialOrder order = MonomialOrder::grevlex);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_compare(a, b, order_);
  }

  /// Same field and variables, different order.
  std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  PolyRing(FieldSpec field, std::vector<std::string> vars, MonomialOrder order)
      : field_(field), vars_(std::move(vars)), order_(order) {}

  FieldSpec field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse polynomial in canonical form: terms strictly decreasing in the
/// ring's monomial order, no zero coefficients.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, combines like terms and drops zeros.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, std::size_t i);
  static Poly monomial(RingPtr ring, Monomial m, const Scalar& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Leading term; precondition: nonzero.
  const Term& leading() const { return terms_.front(); }
  std::uint64_t total_degree() const;

  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  Poly monic() const;
  Poly pow(unsigned k) const;
  Poly derivative(std::size_t var) const;
  /// Same polynomial re-sorted in another ring with identical field and variables.
  Poly in_ring(RingPtr other) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Canonical text, readable back by parse_poly when coefficients are integers.
  std::string render() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

enum class ArithOp { add, sub, mul };
Poly poly_arith(ArithOp op, const Poly& f, const Poly& g);

/// Expression grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := var | int | '(' expr ')'
/// Throws ParseError with a 1-based column.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace fiberbound

#endif  // FIBERBOUND_POLY_HPP
