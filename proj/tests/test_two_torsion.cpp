#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "k3auto/two_torsion.hpp"

using namespace k3auto;

namespace {

RationalPolynomial tp(long long c, unsigned e) { return RationalPolynomial::monomial(Rational(c), e); }
RationalPolynomial cst(long long c) { return RationalPolynomial(Rational(c)); }

Rational eval(const RationalPolynomial& p, const Rational& t) {
  Rational s;
  for (const auto& [k, c] : p.terms()) {
    Rational pw(1);
    for (unsigned i = 0; i < k; ++i) pw *= t;
    s += c * pw;
  }
  return s;
}

std::complex<double> eval(const RationalPolynomial& p, std::complex<double> t) {
  std::complex<double> s = 0.0;
  for (const auto& [k, c] : p.terms()) {
    s += (static_cast<double>(c.numerator()) / static_cast<double>(c.denominator())) * std::pow(t, static_cast<int>(k));
  }
  return s;
}

// alpha t^4 and beta t^8 + gamma
TwoTorsionFibration ex4(long long al, long long be, long long ga) {
  return TwoTorsionFibration::make(tp(al, 4), tp(be, 8) + cst(ga));
}

}  // namespace

TEST(TwoTorsion, MakeRejectsBadData) {
  EXPECT_THROW(TwoTorsionFibration::make(tp(1, 5), cst(1)), InvalidDatum);
  EXPECT_THROW(TwoTorsionFibration::make(cst(1), tp(1, 9)), InvalidDatum);
  EXPECT_THROW(TwoTorsionFibration::make(cst(1), RationalPolynomial()), InvalidDatum);
}

TEST(TwoTorsion, ShortFormBySubstitution) {
  // With X = 3x + a: 27 (x^3 + a x^2 + b x) = X^3 + A X + B at sample points.
  const auto f = ex4(3, 1, 1);
  const auto s = f.short_form();
  for (int ti = -3; ti <= 3; ++ti) {
    for (int xi = -4; xi <= 4; ++xi) {
      const Rational t(ti), x = Rational(BigInt(xi), BigInt(3));
      const Rational a = eval(f.a, t), b = eval(f.b, t);
      const Rational X = Rational(3) * x + a;
      const Rational lhs = Rational(27) * (x * x * x + a * x * x + b * x);
      const Rational rhs = X * X * X + eval(s.a, t) * X + eval(s.b, t);
      ASSERT_EQ(lhs, rhs) << "t=" << ti << " x=" << xi;
    }
  }
  EXPECT_EQ(s.a, cst(9) * f.b - cst(3) * f.a * f.a);
  EXPECT_EQ(s.b, cst(2) * f.a * f.a * f.a - cst(9) * f.a * f.b);
}

TEST(TwoTorsion, DiscriminantFactorsThroughTheCubic) {
  // 4A^3 + 27B^2 is a constant multiple of b^2 (a^2 - 4b).
  for (auto [al, be, ga] : {std::array<long long, 3>{3, 1, 1}, {2, 1, 1}, {1, 0, 1}, {5, -2, 7}}) {
    const auto f = ex4(al, be, ga);
    const auto d = f.short_form().delta();
    const auto target = f.b * f.b * (f.a * f.a - cst(4) * f.b);
    auto [q, r] = RationalPolynomial::divmod(d, target);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q.degree(), 0);
    EXPECT_EQ(q.coefficient(0), Rational(-729));
  }
}

TEST(TwoTorsion, TorsionPointSitsAtXEqualsA) {
  const auto f = ex4(3, 1, 1);
  const auto s = f.short_form();
  // X = a is a root of X^3 + A X + B, so (a, 0) is a point of order two.
  const auto X = f.torsion_x();
  EXPECT_TRUE((X * X * X + s.a * X + s.b).is_zero());
}

TEST(TwoTorsion, ExactTranslationIdentities) {
  for (auto [al, be, ga] : {std::array<long long, 3>{3, 1, 1}, {2, 1, 1}, {1, 0, 1}}) {
    const auto f = ex4(al, be, ga);
    const auto c = check_translation(f, {4, 2, 7});
    EXPECT_TRUE(c.on_curve);
    EXPECT_TRUE(c.involution);
    EXPECT_TRUE(c.section_swap);
    EXPECT_TRUE(c.commutes);
    EXPECT_TRUE(c.chord_agrees);
    EXPECT_TRUE(c.all());
  }
}

TEST(TwoTorsion, ChordMapWithPlusSignIsNotTheTranslation) {
  const auto f = ex4(3, 1, 1);
  const auto F = f.curve_rhs<Cyc8>();
  EXPECT_FALSE(equal_on_curve(chord_map<Cyc8>(f, 1), translation_map<Cyc8>(f), F));
  EXPECT_TRUE(equal_on_curve(chord_map<Cyc8>(f, -1), translation_map<Cyc8>(f), F));
}

TEST(TwoTorsion, NonCommutingDiagonalMapIsDetected) {
  // x -> i x does not preserve y^2 = x(x^2 + a x + b) with a != 0.
  const auto f = ex4(3, 1, 1);
  const auto F = f.curve_rhs<Cyc8>();
  const auto tau = translation_map<Cyc8>(f);
  const auto g = diagonal_map<Cyc8>({2, 1, 1});
  EXPECT_FALSE(equal_on_curve(compose(g, tau), compose(tau, g), F));
}

TEST(TwoTorsion, NumericChordAndTangentOracle) {
  // P + T through the group law: the line through P and T = (0,0) has slope
  // m = y/x, meets the cubic again at x3 = m^2 - a - x, and P + T = (x3, -m x3).
  const auto f = ex4(3, 1, 1);
  const auto tau = translation_map<Cyc8>(f);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 50; ++i) {
    const std::complex<double> t(u(rng), u(rng)), x(u(rng), u(rng));
    const auto a = eval(f.a, t), b = eval(f.b, t);
    const auto y = std::sqrt(x * (x * x + a * x + b));
    const auto m = y / x;
    const auto x3 = m * m - a - x;
    const auto y3 = -m * x3;
    const auto img = apply_numeric(tau, x, y, t);
    EXPECT_LT(std::abs(img[0] - x3), 1e-9 * (1 + std::abs(x3)));
    EXPECT_LT(std::abs(img[1] - y3), 1e-9 * (1 + std::abs(y3)));
    EXPECT_LT(std::abs(img[2] - t), 1e-12);
    const auto back = apply_numeric(tau, img[0], img[1], img[2]);
    EXPECT_LT(std::abs(back[0] - x), 1e-9 * (1 + std::abs(x)));
    EXPECT_LT(std::abs(back[1] - y), 1e-9 * (1 + std::abs(y)));
  }
}

TEST(TwoTorsion, TorsionSectionAvoidsTheNodeWhenTheCubicHasADoubleRoot) {
  // alpha^2 = 4 beta: at infinity the cubic is x (x + alpha/2)^2. The node is
  // at x = -alpha/2 while the section is at x = 0, so the section meets the
  // zero component. In short-form coordinates X = 3x + alpha.
  const auto f = ex4(2, 1, 1);
  const auto s = f.short_form();
  const auto c = infinity_transform(s.a, s.b);
  const Rational A0 = c.a.coefficient(0), B0 = c.b.coefficient(0);
  const Rational node = Rational(-3) * B0 / (Rational(2) * A0);
  EXPECT_EQ(node, Rational(3) * Rational(-1) + Rational(2));
  EXPECT_EQ(f.torsion_x().reversed(4).coefficient(0), Rational(2));
  EXPECT_NE(node, f.torsion_x().reversed(4).coefficient(0));
  EXPECT_EQ(valuation_at(c.delta, Place::rational(0)), 8);
}
