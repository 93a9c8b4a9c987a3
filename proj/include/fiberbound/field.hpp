#ifndef FIBERBOUND_FIELD_HPP
#define FIBERBOUND_FIELD_HPP

#include <gmpxx.h>

#include <string>

namespace fiberbound {

using Scalar = mpq_class;

enum class FieldKind { rationals, prime };

/// Coefficient field: exact rationals (characteristic 0) or F_p.
///
/// Scalars are always mpq_class. Over F_p they are kept as integers in
/// [0, p), so every arithmetic result has to go through the methods below.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }
  /// Throws InvalidArgument unless p is a prime >= 2.
  static FieldSpec prime(unsigned long p);

  FieldKind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == FieldKind::rationals; }

  Scalar from_integer(const mpz_class& n) const {
    Scalar s(n);
    normalize(s);
    return s;
  }
  /// Maps an arbitrary rational into the field (denominator must be a unit).
  void normalize(Scalar& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const {
    Scalar r = a + b;
    if (p_) reduce(r);
    return r;
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    Scalar r = a - b;
    if (p_) reduce(r);
    return r;
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    Scalar r = a * b;
    if (p_) reduce(r);
    return r;
  }
  Scalar neg(const Scalar& a) const {
    Scalar r = -a;
    if (p_) reduce(r);
    return r;
  }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // acc += a*b / acc -= a*b
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
    acc += a * b;
    if (p_) reduce(acc);
  }
  void sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
    acc -= a * b;
    if (p_) reduce(acc);
  }

  /// "QQ" or "Fp <p>", the spelling used by scheme files.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}
  void reduce(Scalar& s) const;

  FieldKind kind_;
  unsigned long p_;
};

}  // namespace fiberbound

#endif  // FIBERBOUND_FIELD_HPP
