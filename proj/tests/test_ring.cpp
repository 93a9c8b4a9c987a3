#include <gtest/gtest.h>

#include <random>

#include "fiberbound/errors.hpp"
#include "fiberbound/poly.hpp"
#include "support.hpp"

using namespace fiberbound;
namespace fbt = fiberbound::testing;
using fiberbound::testing::P;
using fiberbound::testing::ring;

TEST(Field, PrimeFieldRejectsComposites) {
  EXPECT_THROW(FieldSpec::prime(1), InvalidArgument);
  EXPECT_THROW(FieldSpec::prime(15), InvalidArgument);
  EXPECT_EQ(FieldSpec::prime(32003).characteristic(), 32003u);
  EXPECT_EQ(FieldSpec::rationals().characteristic(), 0u);
}

TEST(Field, PrimeArithmeticWrapsAround) {
  auto F = FieldSpec::prime(7);
  EXPECT_EQ(F.add(5, 4), 2);
  EXPECT_EQ(F.mul(3, 5), 1);
  EXPECT_EQ(F.inv(3), 5);
  EXPECT_EQ(F.neg(2), 5);
}

TEST(Parse, TwoTermQuartic) {
  auto R = ring({"x", "y"});
  Poly f = P(R, "x^4+y^4");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.terms()[0].mono, Monomial({4, 0}));
  EXPECT_EQ(f.terms()[1].mono, Monomial({0, 4}));
  EXPECT_EQ(f.terms()[0].coef, 1);
}

TEST(Parse, ZeroIsEmpty) { EXPECT_TRUE(P(ring({"x"}), "0").is_zero()); }

TEST(Parse, QuinticProductExpansion) {
  auto R = ring({"x", "y"});
  Poly f = P(R, "x*y*(x-y)*(x+y)*(x-2*y)");
  EXPECT_EQ(f, P(R, "x^4*y - 2*x^3*y^2 - x^2*y^3 + 2*x*y^4"));
  EXPECT_EQ(f.size(), 4u);
  // Evaluate both forms at random rational points.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int k = 0; k < 5; ++k) {
    Scalar px(num(rng), den(rng)), py(num(rng), den(rng));
    px.canonicalize();
    py.canonicalize();
    Scalar expect = px * py * (px - py) * (px + py) * (px - 2 * py);
    std::vector<Scalar> pt{px, py};
    EXPECT_EQ(f.evaluate(pt), expect);
  }
}

TEST(Parse, UnaryMinusAndPrecedence) {
  auto R = ring({"x", "y"});
  EXPECT_EQ(P(R, "-x^2 + 3*y"), P(R, "3*y - x*x"));
  EXPECT_EQ(P(R, "(x+1)^2"), P(R, "x^2 + 2*x + 1"));
  EXPECT_EQ(P(R, "2^3*x"), P(R, "8*x"));
}

TEST(Parse, RationalLiterals) {
  auto R = ring({"x", "y"});
  Poly f = P(R, "2/3*x - 4/6*y + 1/1");
  EXPECT_EQ(f.terms()[0].coef, Scalar(2, 3));
  EXPECT_EQ(f.terms()[1].coef, Scalar(-2, 3));
  EXPECT_EQ(P(R, "3*(1/3*x)"), P(R, "x"));
  // In F_7, 1/3 = 5.
  auto S = ring({"x"}, MonomialOrder::grevlex, FieldSpec::prime(7));
  EXPECT_EQ(P(S, "1/3*x"), P(S, "5*x"));
  EXPECT_THROW(P(S, "1/7*x"), ParseError);
  EXPECT_THROW(P(R, "1/0"), ParseError);
}

TEST(Parse, Errors) {
  auto R = ring({"x", "y"});
  try {
    P(R, "x + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
    EXPECT_NE(std::string(e.what()).find("unknown variable 'q'"), std::string::npos);
  }
  EXPECT_THROW(P(R, "x^-1"), ParseError);
  EXPECT_THROW(P(R, "x^y"), ParseError);
  EXPECT_THROW(P(R, "(x + y"), ParseError);
  EXPECT_THROW(P(R, "x y"), ParseError);
  EXPECT_THROW(P(R, ""), ParseError);
  EXPECT_THROW(P(R, "x / y"), ParseError);
}

TEST(Arith, Examples) {
  auto R = ring({"x", "y"});
  Poly f = P(R, "x^2 - 3*x*y + 7");
  EXPECT_EQ(poly_arith(ArithOp::add, f, Poly(R)), f);
  EXPECT_EQ(poly_arith(ArithOp::mul, P(R, "x+y"), P(R, "x-y")), P(R, "x^2 - y^2"));
  EXPECT_EQ(poly_arith(ArithOp::sub, f, f), Poly(R));
}

TEST(Arith, FrobeniusOverF5) {
  auto R = ring({"x"}, MonomialOrder::grevlex, FieldSpec::prime(5));
  Poly base = P(R, "x + 1");
  Poly brute = base;
  for (int k = 1; k < 5; ++k) brute = poly_arith(ArithOp::mul, brute, base);
  EXPECT_EQ(brute, P(R, "x^5 + 1"));
  EXPECT_EQ(base.pow(5), brute);
}

TEST(Arith, RingMismatch) {
  auto R = ring({"x", "y"});
  auto S = ring({"x", "z"});
  EXPECT_THROW(P(R, "x") + P(S, "x"), RingMismatch);
  auto T = ring({"x", "y"}, MonomialOrder::lex);
  EXPECT_THROW(P(R, "x") * P(T, "x"), RingMismatch);
}

TEST(Arith, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(2024);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    auto R = ring({"x", "y", "z"}, MonomialOrder::grevlex, field);
    for (int k = 0; k < 60; ++k) {
      Poly a = fbt::random_poly(R, rng, 4, 5);
      Poly b = fbt::random_poly(R, rng, 4, 5);
      Poly c = fbt::random_poly(R, rng, 4, 5);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, Poly(R));
    }
  }
}

TEST(Order, Examples) {
  EXPECT_EQ(order_compare(Monomial({2, 0}), Monomial({1, 1}), MonomialOrder::grevlex), std::strong_ordering::greater);
  EXPECT_EQ(order_compare(Monomial({0, 3}), Monomial({1, 0}), MonomialOrder::lex), std::strong_ordering::less);
  for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex, MonomialOrder::lex})
    EXPECT_EQ(order_compare(Monomial({1, 2}), Monomial({1, 2}), o), std::strong_ordering::equal);
  // In three variables grevlex and grlex part ways: x*y^2 against x^2*z.
  EXPECT_EQ(order_compare(Monomial({1, 2, 0}), Monomial({2, 0, 1}), MonomialOrder::grevlex),
            std::strong_ordering::greater);
  EXPECT_EQ(order_compare(Monomial({1, 2, 0}), Monomial({2, 0, 1}), MonomialOrder::grlex), std::strong_ordering::less);
  EXPECT_THROW(order_compare(Monomial(std::vector<std::uint32_t>{1}), Monomial({1, 0}), MonomialOrder::lex), DimensionMismatch);
}

TEST(Order, DegreeThreeTableInTwoVariables) {
  // Monomials of degree <= 3 in x > y, ascending, written out by hand.
  const std::vector<std::vector<std::uint32_t>> grevlex = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1},
                                                           {2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}};
  const std::vector<std::vector<std::uint32_t>> lex = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0},
                                                       {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}};
  for (std::size_t i = 0; i + 1 < grevlex.size(); ++i) {
    EXPECT_EQ(order_compare(Monomial(grevlex[i]), Monomial(grevlex[i + 1]), MonomialOrder::grevlex),
              std::strong_ordering::less);
    EXPECT_EQ(order_compare(Monomial(grevlex[i]), Monomial(grevlex[i + 1]), MonomialOrder::grlex),
              std::strong_ordering::less);
    EXPECT_EQ(order_compare(Monomial(lex[i]), Monomial(lex[i + 1]), MonomialOrder::lex), std::strong_ordering::less);
  }
}

TEST(Order, ExhaustivePropertiesUpToDegreeFour) {
  std::vector<Monomial> all;
  for (std::uint32_t a = 0; a <= 4; ++a)
    for (std::uint32_t b = 0; a + b <= 4; ++b)
      for (std::uint32_t c = 0; a + b + c <= 4; ++c) all.emplace_back(std::vector<std::uint32_t>{a, b, c});
  ASSERT_EQ(all.size(), 35u);
  const Monomial one(3);
  for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex, MonomialOrder::lex}) {
    for (const auto& a : all) {
      EXPECT_NE(order_compare(one, a, o), std::strong_ordering::greater);
      for (const auto& b : all) {
        auto ab = order_compare(a, b, o);
        auto ba = order_compare(b, a, o);
        EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
        EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
        for (const auto& c : all) {
          if (ab == std::strong_ordering::less) EXPECT_EQ(order_compare(a * c, b * c, o), std::strong_ordering::less);
          if (ab == std::strong_ordering::less && order_compare(b, c, o) == std::strong_ordering::less)
            EXPECT_EQ(order_compare(a, c, o), std::strong_ordering::less);
        }
      }
    }
  }
}

TEST(Render, RoundTrip) {
  std::mt19937_64 rng(99);
  for (auto o : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    auto R = ring({"x", "y", "z"}, o);
    for (int k = 0; k < 200; ++k) {
      Poly f = fbt::random_poly(R, rng, 5, 6);
      EXPECT_EQ(parse_poly(f.render(), R), f) << f.render();
    }
  }
  auto R = ring({"x", "y"});
  EXPECT_EQ(P(R, "x*y*(x-y)*(x+y)*(x-2*y)").render(), "x^4*y - 2*x^3*y^2 - x^2*y^3 + 2*x*y^4");
  EXPECT_EQ(Poly(R).render(), "0");
  EXPECT_EQ(P(R, "-1").render(), "-1");
}

TEST(Ring, VariableNamesValidated) {
  EXPECT_THROW(ring({"x", "x"}), InvalidArgument);
  EXPECT_THROW(ring({}), InvalidArgument);
  EXPECT_THROW(ring({"2x"}), InvalidArgument);
}

TEST(Poly, Derivative) {
  auto R = ring({"x", "y"});
  EXPECT_EQ(P(R, "x^3*y + 5*y^2 + 1").derivative(0), P(R, "3*x^2*y"));
  EXPECT_EQ(P(R, "x^3*y + 5*y^2 + 1").derivative(1), P(R, "x^3 + 10*y"));
  auto F = ring({"x"}, MonomialOrder::grevlex, FieldSpec::prime(3));
  EXPECT_TRUE(P(F, "x^3").derivative(0).is_zero());
}
