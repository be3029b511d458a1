#include <random>

#include <gtest/gtest.h>

#include "towerlab/errors.hpp"
#include "towerlab/linalg.hpp"
#include "towerlab/rational_function.hpp"

using namespace towerlab;

namespace {

const std::vector<std::string> kDelta{"delta"};
const std::vector<std::string> kRhoQ{"rho", "q"};

Scalar var(int nvars, int i) { return Scalar::variable(nvars, i); }

MultiPoly random_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4), nterms(1, max_terms);
  MultiPoly p(nvars);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Exponents e{};
    for (int i = 0; i < nvars; ++i) e[i] = deg(rng);
    p += MultiPoly::monomial(nvars, e, coef(rng));
  }
  return p;
}

}  // namespace

TEST(RationalFunction, ExactQuotient) {
  Scalar d = var(1, 0);
  Scalar r = (d * d - 1) / (d - 1);
  EXPECT_EQ(r, d + 1);
  EXPECT_EQ(r.to_string(kDelta), "delta + 1");
}

TEST(RationalFunction, CommonDenominator) {
  Scalar d = var(1, 0);
  Scalar r = Scalar(1) / (d - 1) + Scalar(1) / (d + 1);
  EXPECT_EQ(r, Scalar(2) * d / (d * d - 1));
  EXPECT_EQ(r.to_string(kDelta), "(2*delta)/(delta^2 - 1)");
}

TEST(RationalFunction, MonomialCancellation) {
  Scalar q = var(2, 1);
  Scalar z = q - q.inverse();
  EXPECT_EQ(z.to_string(kRhoQ), "(q^2 - 1)/(q)");
  EXPECT_EQ(z * q, q * q - 1);
}

TEST(RationalFunction, DivisionByZeroThrows) {
  Scalar d = var(1, 0);
  EXPECT_THROW(d / Scalar(0), DivisionByZero);
  EXPECT_THROW((d - d).inverse(), DivisionByZero);
}

TEST(PolyGcd, Examples) {
  MultiPoly x = MultiPoly::variable(1, 0), one = MultiPoly::constant(1, 1);
  MultiPoly a = x * x - one, b = x * x + x.scaled(2) + one;
  EXPECT_EQ(poly_gcd(a, b), x + one);
  MultiPoly p = x.scaled(3) + one.scaled(6);
  EXPECT_EQ(poly_gcd(p, MultiPoly(1)), p.monic());
  EXPECT_EQ(poly_gcd(MultiPoly::constant(0, 3), MultiPoly::constant(0, 6)), MultiPoly::constant(0, 1));
}

TEST(PolyGcd, DividesBothRandomised) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int nv = 1 + trial % 3;
    MultiPoly common = random_poly(rng, nv, 2, 3);
    MultiPoly a = common * random_poly(rng, nv, 2, 3);
    MultiPoly b = common * random_poly(rng, nv, 2, 3);
    MultiPoly g = poly_gcd(a, b);
    if (a.is_zero() && b.is_zero()) continue;
    ASSERT_TRUE(try_divide(a, g).has_value());
    ASSERT_TRUE(try_divide(b, g).has_value());
    if (!common.is_zero()) ASSERT_TRUE(try_divide(g, common.monic()).has_value());
  }
}

TEST(RationalFunction, NormalFormUniqueness) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int nv = 1 + trial % 3;
    MultiPoly p = random_poly(rng, nv, 2, 3), q = random_poly(rng, nv, 2, 3);
    if (q.is_zero()) continue;
    Scalar sp(p, MultiPoly::constant(nv, 1)), sq(q, MultiPoly::constant(nv, 1));
    ASSERT_EQ((sp * sq) / sq, sp);
  }
}

TEST(Specialize, Examples) {
  RingContext q_ctx{{"q"}, Mode::Specialized, {mpq_class(2)}};
  Scalar q = var(1, 0);
  EXPECT_EQ(specialize(q - q.inverse(), q_ctx), mpq_class(3, 2));
  RingContext d_one{{"delta"}, Mode::Specialized, {mpq_class(1)}};
  Scalar d = var(1, 0);
  EXPECT_THROW(specialize(Scalar(1) / (d - 1), d_one), GenericityViolation);
  RingContext d_ctx{{"delta"}, Mode::Specialized, {mpq_class(7, 3)}};
  EXPECT_EQ(specialize(d * d, d_ctx), mpq_class(49, 9));
}

TEST(Specialize, HomomorphismRandomised) {
  std::mt19937 rng(5);
  RingContext ctx{{"rho", "q"}, Mode::Specialized, {mpq_class(5, 3), mpq_class(3, 2)}};
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    MultiPoly a = random_poly(rng, 2, 2, 2), b = random_poly(rng, 2, 2, 2);
    MultiPoly c = random_poly(rng, 2, 1, 2), d = random_poly(rng, 2, 1, 2);
    if (b.is_zero() || d.is_zero()) continue;
    if (b.evaluate(ctx.values) == 0 || d.evaluate(ctx.values) == 0) continue;
    Scalar x(a, b), y(c, d);
    mpq_class sx = specialize(x, ctx), sy = specialize(y, ctx);
    ASSERT_EQ(specialize(x + y, ctx), sx + sy);
    ASSERT_EQ(specialize(x * y, ctx), sx * sy);
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(Linalg, CharacteristicPolynomialAndRoots) {
  Scalar d = var(1, 0);
  Matrix t(3, 3);
  t(0, 0) = d;
  t(0, 1) = 1;
  t(1, 1) = Scalar(1) - d;
  t(1, 2) = 3;
  t(2, 2) = d * d;
  Matrix p(3, 3);
  p(0, 0) = 1;
  p(1, 0) = 2;
  p(1, 1) = 1;
  p(2, 0) = d;
  p(2, 1) = 5;
  p(2, 2) = 1;
  p(0, 2) = 1;
  Matrix m = p * t * inverse(p);
  auto c = characteristic_polynomial(m);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_FALSE(divide_out_root(c, Scalar(7)));
  EXPECT_TRUE(divide_out_root(c, d));
  EXPECT_TRUE(divide_out_root(c, Scalar(1) - d));
  EXPECT_TRUE(divide_out_root(c, d * d));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].is_one());
}

TEST(Linalg, InverseNullspaceSolve) {
  Scalar d = var(1, 0);
  Matrix m(2, 2);
  m(0, 0) = d;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = d;
  EXPECT_EQ(m * inverse(m), Matrix::identity(2));
  Matrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = d;
  s(1, 0) = 2;
  s(1, 1) = d * 2;
  EXPECT_EQ(rank(s), 1u);
  Matrix k = nullspace(s);
  EXPECT_EQ(k.cols(), 1u);
  EXPECT_TRUE((s * k).is_zero());
  EXPECT_THROW(inverse(s), SingularSystem);
}

TEST(Linalg, EchelonTags) {
  EchelonBasis e(4);
  SparseVec a = SparseVec::unit(0) + SparseVec::unit(2, 3);
  SparseVec b = SparseVec::unit(0, 2) + SparseVec::unit(1);
  EXPECT_TRUE(e.insert(a, SparseVec::unit(0)));
  EXPECT_TRUE(e.insert(b, SparseVec::unit(1)));
  SparseVec c = a.scaled(5) - b.scaled(7);
  auto red = e.reduce(c);
  EXPECT_TRUE(red.residual.empty());
  EXPECT_EQ(red.tag, SparseVec::unit(0, 5) + SparseVec::unit(1, -7));
  EXPECT_FALSE(e.insert(c));
}
