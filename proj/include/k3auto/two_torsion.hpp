#ifndef K3AUTO_TWO_TORSION_HPP
#define K3AUTO_TWO_TORSION_HPP

#include <array>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3auto/weierstrass.hpp"

namespace k3auto {

/// Polynomial in x, y, t with coefficients in C (Rational or Cyc8).
template <class C>
class Poly3 {
 public:
  using Exp = std::array<unsigned, 3>;

  Poly3() = default;
  explicit Poly3(const C& c) {
    if (!is_zero_coeff(c)) terms_[{0, 0, 0}] = c;
  }

  static Poly3 monomial(const C& c, unsigned ex, unsigned ey, unsigned et) {
    Poly3 p;
    if (!is_zero_coeff(c)) p.terms_[{ex, ey, et}] = c;
    return p;
  }
  static Poly3 x() { return monomial(C(1), 1, 0, 0); }
  static Poly3 y() { return monomial(C(1), 0, 1, 0); }
  static Poly3 t() { return monomial(C(1), 0, 0, 1); }
  static Poly3 from_t(const RationalPolynomial& p) {
    Poly3 out;
    for (const auto& [k, c] : p.terms()) out.terms_[{0, 0, k}] = C(c);
    return out;
  }

  const std::map<Exp, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned y_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[1]);
    return d;
  }
  /// Degree with weights (2, 3, 0) on (x, y, t); -1 for zero.
  int weighted_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(2 * e[0] + 3 * e[1]));
    return d;
  }

  Poly3 operator-() const {
    Poly3 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Poly3& operator+=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly3& operator-=(const Poly3& o) { return *this += -o; }
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
    return out;
  }
  friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }

  /// Replaces y^2 by `f` (a polynomial in x and t) until deg_y <= 1.
  Poly3 reduce(const Poly3& f) const {
    Poly3 cur = *this;
    while (cur.y_degree() >= 2) {
      Poly3 next;
      for (const auto& [e, c] : cur.terms_) {
        if (e[1] >= 2) {
          next += monomial(c, e[0], e[1] - 2, e[2]) * f;
        } else {
          next.add_term(e, c);
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  template <class Convert>
  std::complex<double> evaluate(std::complex<double> xv, std::complex<double> yv, std::complex<double> tv,
                                Convert convert) const {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
      s += convert(c) * std::pow(xv, static_cast<int>(e[0])) * std::pow(yv, static_cast<int>(e[1])) *
           std::pow(tv, static_cast<int>(e[2]));
    }
    return s;
  }

 private:
  static bool is_zero_coeff(const C& c) { return c.is_zero(); }
  void add_term(const Exp& e, const C& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!is_zero_coeff(c)) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  std::map<Exp, C> terms_;
};

/// Quotient num / den of polynomials in x, y, t; not kept in lowest terms.
template <class C>
struct RationalFunction {
  Poly3<C> num;
  Poly3<C> den = Poly3<C>(C(1));

  RationalFunction() = default;
  RationalFunction(Poly3<C> n, Poly3<C> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  }
  explicit RationalFunction(Poly3<C> n) : num(std::move(n)) {}

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num.is_zero()) throw DivisionByZero("division by the zero rational function");
    return {a.num * b.den, a.den * b.num};
  }
};

/// A rational self-map (x, y, t) -> (X, Y, T).
template <class C>
struct RationalMap3 {
  std::array<RationalFunction<C>, 3> coords;

  static RationalMap3 identity() {
    return {{RationalFunction<C>(Poly3<C>::x()), RationalFunction<C>(Poly3<C>::y()), RationalFunction<C>(Poly3<C>::t())}};
  }
};

/// p(X, Y, T) for a map (X, Y, T).
template <class C>
RationalFunction<C> substitute(const Poly3<C>& p, const RationalMap3<C>& m) {
  RationalFunction<C> out(Poly3<C>{});
  std::array<std::vector<RationalFunction<C>>, 3> powers;
  auto power = [&](std::size_t v, unsigned e) -> const RationalFunction<C>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(Poly3<C>(C(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * m.coords[v]);
    return cache[e];
  };
  for (const auto& [e, c] : p.terms()) {
    RationalFunction<C> term{Poly3<C>(c)};
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] > 0) term = term * power(v, e[v]);
    }
    out = out + term;
  }
  return out;
}

template <class C>
RationalFunction<C> substitute(const RationalFunction<C>& r, const RationalMap3<C>& m) {
  return substitute(r.num, m) / substitute(r.den, m);
}

/// outer after inner: p -> outer(inner(p)).
template <class C>
RationalMap3<C> compose(const RationalMap3<C>& outer, const RationalMap3<C>& inner) {
  RationalMap3<C> out;
  for (std::size_t i = 0; i < 3; ++i) out.coords[i] = substitute(outer.coords[i], inner);
  return out;
}

/// Equality in the function field of y^2 = f(x, t).
template <class C>
bool equal_on_curve(const RationalFunction<C>& a, const RationalFunction<C>& b, const Poly3<C>& f) {
  return (a.num * b.den - b.num * a.den).reduce(f).is_zero();
}

template <class C>
bool equal_on_curve(const RationalMap3<C>& a, const RationalMap3<C>& b, const Poly3<C>& f) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!equal_on_curve(a.coords[i], b.coords[i], f)) return false;
  }
  return true;
}

/// y^2 = x (x^2 + a(t) x + b(t)) with deg a <= 4 and deg b <= 8; (0, 0) is
/// a 2-torsion section.
struct TwoTorsionFibration {
  RationalPolynomial a;
  RationalPolynomial b;

  static TwoTorsionFibration make(RationalPolynomial a, RationalPolynomial b) {
    if (a.degree() > 4 || b.degree() > 8) throw InvalidDatum("not a K3 Weierstrass datum: deg a <= 4 and deg b <= 8");
    if (b.is_zero()) throw InvalidDatum("b(t) vanishes identically; the cubic is singular");
    return {std::move(a), std::move(b)};
  }

  template <class C>
  Poly3<C> curve_rhs() const {
    const auto x = Poly3<C>::x();
    return x * x * x + Poly3<C>::from_t(a) * x * x + Poly3<C>::from_t(b) * x;
  }

  /// Short form through x = (X - a)/3: 27 y^2 = X^3 + A X + B, a quadratic
  /// twist by 3 that leaves valuations and eigenvalue exponents unchanged.
  WeierstrassFibration short_form() const {
    RationalPolynomial A = RationalPolynomial(9) * b - RationalPolynomial(3) * a * a;
    RationalPolynomial B = RationalPolynomial(2) * a * a * a - RationalPolynomial(9) * a * b;
    return WeierstrassFibration::make(std::move(A), std::move(B));
  }

  /// X-coordinate of the 2-torsion section in the short form.
  RationalPolynomial torsion_x() const { return a; }
};

/// Translation by (0, 0): (x, y) -> (b/x, -b y / x^2), equivalently
/// (y^2/x^2 - a - x, -(y/x) X).
template <class C>
RationalMap3<C> translation_map(const TwoTorsionFibration& f) {
  const auto x = Poly3<C>::x();
  const auto y = Poly3<C>::y();
  const auto b = Poly3<C>::from_t(f.b);
  return {{RationalFunction<C>(b, x), RationalFunction<C>(-(b * y), x * x), RationalFunction<C>(Poly3<C>::t())}};
}

/// The map as displayed through the chord construction, before any sign
/// choice: X = y^2/x^2 - a - x, Y = s (y/x) X with s = +1 or -1.
template <class C>
RationalMap3<C> chord_map(const TwoTorsionFibration& f, int sign) {
  const auto x = Poly3<C>::x();
  const auto y = Poly3<C>::y();
  const auto a = Poly3<C>::from_t(f.a);
  RationalFunction<C> X(y * y - a * x * x - x * x * x, x * x);
  RationalFunction<C> Y = RationalFunction<C>(Poly3<C>(C(sign)) * y, x) * X;
  return {{X, Y, RationalFunction<C>(Poly3<C>::t())}};
}

template <class C>
RationalMap3<C> diagonal_map(const DiagonalAutomorphism& g) {
  return {{RationalFunction<C>(Poly3<C>::monomial(Cyc8::zeta_pow(g.ex), 1, 0, 0)),
           RationalFunction<C>(Poly3<C>::monomial(Cyc8::zeta_pow(g.ey), 0, 1, 0)),
           RationalFunction<C>(Poly3<C>::monomial(Cyc8::zeta_pow(g.et), 0, 0, 1))}};
}

struct TranslationChecks {
  bool on_curve = false;
  bool involution = false;
  bool section_swap = false;
  bool commutes = false;
  bool chord_agrees = false;

  bool all() const { return on_curve && involution && section_swap && commutes && chord_agrees; }
};

inline TranslationChecks check_translation(const TwoTorsionFibration& f, const DiagonalAutomorphism& g) {
  TranslationChecks out;
  const auto F = f.curve_rhs<Cyc8>();
  const auto tau = translation_map<Cyc8>(f);

  // Y^2 = F(X, t) on the image.
  const auto lhs = tau.coords[1] * tau.coords[1];
  const auto rhs = substitute(F, tau);
  out.on_curve = equal_on_curve(lhs, rhs, F);

  out.involution = equal_on_curve(compose(tau, tau), RationalMap3<Cyc8>::identity(), F);

  // (0,0) goes to the zero section: X = b/x has a pole along x = 0.
  // The zero section goes to (0,0): X and Y have negative weight in (x, y).
  const auto& X = tau.coords[0];
  const auto& Y = tau.coords[1];
  const bool pole = equal_on_curve(X * RationalFunction<Cyc8>(Poly3<Cyc8>::x()),
                                   RationalFunction<Cyc8>(Poly3<Cyc8>::from_t(f.b)), F);
  const bool to_origin = X.num.weighted_degree() < X.den.weighted_degree() &&
                         Y.num.weighted_degree() < Y.den.weighted_degree();
  out.section_swap = pole && to_origin;

  const auto sigma = diagonal_map<Cyc8>(g);
  out.commutes = equal_on_curve(compose(sigma, tau), compose(tau, sigma), F);
  out.chord_agrees = equal_on_curve(chord_map<Cyc8>(f, -1), tau, F);
  return out;
}

inline std::complex<double> to_complex_coeff(const Cyc8& c) { return c.to_complex(); }

/// Numeric image of (x, y, t) under a map.
inline std::array<std::complex<double>, 3> apply_numeric(const RationalMap3<Cyc8>& m, std::complex<double> x,
                                                         std::complex<double> y, std::complex<double> t) {
  std::array<std::complex<double>, 3> out;
  auto conv = [](const Cyc8& c) { return to_complex_coeff(c); };
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = m.coords[i].num.evaluate(x, y, t, conv) / m.coords[i].den.evaluate(x, y, t, conv);
  }
  return out;
}

}  // namespace k3auto

#endif  // K3AUTO_TWO_TORSION_HPP
