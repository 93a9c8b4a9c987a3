#include <gtest/gtest.h>

#include <random>

#include "fiberbound/artin.hpp"
#include "fiberbound/errors.hpp"
#include "support.hpp"

using namespace fiberbound;
namespace fbt = fiberbound::testing;
using fiberbound::testing::ideal;
using fiberbound::testing::P;
using fiberbound::testing::ring;

TEST(Artin, ReducedPoint) {
  auto A = quotient_algebra(ideal(ring({"x", "y"}), {"x", "y"}));
  EXPECT_EQ(A->degree(), 1u);
  for (const auto& m : A->multiplications()) EXPECT_TRUE(m.is_zero());
  EXPECT_EQ(A->one(), Vector{1});
}

TEST(Artin, Degrees) {
  auto R = ring({"x", "y"});
  EXPECT_EQ(degree(*quotient_algebra(ideal(R, {"x^4 + y^4", "x*y*(x - y)*(x + y)*(x - 2*y)"}))), 20u);
  // m^5 in three variables: monomials of degree < 5.
  auto S = ring({"x", "y", "z"});
  EXPECT_EQ(degree(*quotient_algebra(ideal_power(ideal(S, {"x", "y", "z"}), 5))), 35u);
  EXPECT_EQ(quotient_algebra(ideal(R, {"x^2", "x*y", "y^2"}))->degree(), 3u);
  EXPECT_EQ(quotient_algebra(fbt::corpus_ideal(fbt::corpus()[9]))->degree(), 31u);
  EXPECT_THROW(ArtinAlgebra(ideal(R, {"y - x^2"})), NotZeroDimensional);
  EXPECT_THROW(ArtinAlgebra(ideal(R, {"1 + x", "x"})), ImproperIdeal);
}

TEST(Artin, SquareRootOfTwo) {
  auto R = ring({"x"});
  auto A = quotient_algebra(ideal(R, {"x^2 - 2"}));
  Vector x = A->element_vector(P(R, "x"));
  EXPECT_EQ(A->multiply(x, x), A->element_vector(P(R, "2")));
  EXPECT_EQ(A->element_poly(A->multiply(x, x)), P(R, "2"));
  Matrix mx = A->multiplication(0);
  EXPECT_EQ(mx(0, 1), 2);
  EXPECT_EQ(mx(1, 0), 1);
}

TEST(Artin, MultiplicationMatricesCommute) {
  for (const auto& e : fbt::corpus()) {
    auto A = quotient_algebra(fbt::corpus_ideal(e));
    const auto& F = A->field();
    for (std::size_t i = 0; i < A->nvars(); ++i)
      for (std::size_t j = i + 1; j < A->nvars(); ++j)
        EXPECT_EQ(linalg::multiply(A->multiplication(i), A->multiplication(j), F),
                  linalg::multiply(A->multiplication(j), A->multiplication(i), F))
            << e.name;
  }
}

TEST(Artin, ElementVectorIsMultiplicative) {
  std::mt19937_64 rng(3);
  for (const auto& e : fbt::corpus()) {
    auto A = quotient_algebra(fbt::corpus_ideal(e));
    const RingPtr& R = A->ring();
    for (int k = 0; k < 8; ++k) {
      Poly f = fbt::random_poly(R, rng, 4, 4);
      Poly g = fbt::random_poly(R, rng, 4, 4);
      Vector vf = A->element_vector(f), vg = A->element_vector(g);
      EXPECT_EQ(A->element_vector(f * g), A->multiply(vf, vg)) << e.name;
      EXPECT_EQ(linalg::apply(A->multiplication_matrix(vf), vg, A->field()), A->multiply(vf, vg)) << e.name;
      EXPECT_EQ(A->element_vector(A->element_poly(vf)), vf);
      EXPECT_EQ(A->multiply(A->one(), vf), vf);
    }
  }
}

TEST(Artin, DegreeEqualsStandardMonomialCount) {
  for (const auto& e : fbt::corpus())
    for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex, MonomialOrder::lex}) {
      Ideal I = fbt::corpus_ideal(e, o);
      auto A = quotient_algebra(I);
      EXPECT_EQ(A->basis(), standard_monomials(I)) << e.name;
      // The degree does not depend on the order.
      EXPECT_EQ(A->degree(), quotient_algebra(fbt::corpus_ideal(e))->degree()) << e.name;
    }
}

TEST(Artin, PredecessorsRebuildTheBasis) {
  auto A = quotient_algebra(fbt::corpus_ideal(fbt::corpus()[3]));
  const auto& pred = A->predecessors();
  for (std::size_t b = 1; b < A->degree(); ++b)
    EXPECT_EQ(A->basis()[pred[b].index].times_variable(pred[b].var), A->basis()[b]);
}

TEST(Artin, PrimeField) {
  auto R = ring({"x"}, MonomialOrder::grevlex, FieldSpec::prime(5));
  auto A = quotient_algebra(ideal(R, {"x^5 - 1"}));
  Vector x = A->element_vector(P(R, "x + 1"));
  Vector p = A->one();
  for (int k = 0; k < 5; ++k) p = A->multiply(p, x);
  // (x + 1)^5 = x^5 + 1 = 2.
  EXPECT_EQ(p, A->element_vector(P(R, "2")));
}
