#include "fiberbound/field.hpp"

#include "fiberbound/errors.hpp"

namespace fiberbound {

FieldSpec FieldSpec::prime(unsigned long p) {
  mpz_class z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::prime, p);
}

void FieldSpec::reduce(Scalar& s) const {
  // Integers only; division goes through inv().
  mpz_class m(p_);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), s.get_num_mpz_t(), m.get_mpz_t());
  s = r;
}

void FieldSpec::normalize(Scalar& s) const {
  if (!p_) {
    s.canonicalize();
    return;
  }
  mpz_class m(p_), num, den;
  mpz_fdiv_r(num.get_mpz_t(), s.get_num_mpz_t(), m.get_mpz_t());
  mpz_fdiv_r(den.get_mpz_t(), s.get_den_mpz_t(), m.get_mpz_t());
  if (den == 0) throw InvalidArgument("denominator vanishes in " + to_string());
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = num * dinv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  s = r;
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw InvalidArgument("division by zero");
  if (!p_) return Scalar(1) / a;
  mpz_class m(p_), r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

std::string FieldSpec::to_string() const {
  return p_ ? "Fp " + std::to_string(p_) : std::string("QQ");
}

}  // namespace fiberbound
