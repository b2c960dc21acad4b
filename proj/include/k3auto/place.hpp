#ifndef K3AUTO_PLACE_HPP
#define K3AUTO_PLACE_HPP

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "k3auto/polynomial.hpp"

namespace k3auto {

inline constexpr int kInfiniteValuation = INT_MAX;

/// A point of the base P^1, or a Galois-stable group of points.
///
/// `finite_class` holds a monic squarefree polynomial of degree >= 2 with no
/// rational roots. It is not required to be irreducible; callers refine
/// classes until every polynomial of interest has the same valuation at each
/// of its roots, which is all the fiber analysis needs.
struct Place {
  enum class Kind { finite_rational, finite_class, infinity };

  Kind kind = Kind::infinity;
  Rational t0;
  RationalPolynomial factor;

  static Place rational(const Rational& t0) {
    Place p;
    p.kind = Kind::finite_rational;
    p.t0 = t0;
    p.factor = RationalPolynomial::variable() - RationalPolynomial(t0);
    return p;
  }
  static Place root_class(const RationalPolynomial& f) {
    if (f.degree() < 2) throw InvalidDatum("root class needs degree >= 2");
    Place p;
    p.kind = Kind::finite_class;
    p.factor = f.monic();
    return p;
  }
  static Place infinity() { return Place{}; }

  bool is_infinity() const { return kind == Kind::infinity; }
  bool is_origin() const { return kind == Kind::finite_rational && t0.is_zero(); }
  /// Number of geometric points in the class.
  int degree() const { return kind == Kind::finite_class ? factor.degree() : 1; }

  std::string kind_name() const {
    switch (kind) {
      case Kind::finite_rational: return "finite-rational";
      case Kind::finite_class: return "finite-class";
      case Kind::infinity: return "infinity";
    }
    return "";
  }
  std::string to_string() const {
    switch (kind) {
      case Kind::finite_rational: return "t=" + t0.to_string();
      case Kind::finite_class: return "roots of " + factor.to_string();
      case Kind::infinity: return "t=inf";
    }
    return "";
  }

  friend bool operator==(const Place& a, const Place& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::finite_rational) return a.t0 == b.t0;
    if (a.kind == Kind::finite_class) return a.factor == b.factor;
    return true;
  }
};

/// Sort order: rational places by value, then classes by degree and text,
/// then infinity.
inline bool place_less(const Place& a, const Place& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.kind == Place::Kind::finite_rational) return a.t0 < b.t0;
  if (a.kind == Place::Kind::finite_class) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.to_string() < b.factor.to_string();
  }
  return false;
}

/// Order of vanishing of p at a finite place. For a class the minimum over
/// its roots is returned (the largest power of the class polynomial dividing p).
inline int valuation_at(const RationalPolynomial& p, const Place& place) {
  if (place.is_infinity()) throw InvalidDatum("valuation at infinity needs the weighted chart transform");
  if (p.is_zero()) return kInfiniteValuation;
  if (place.kind == Place::Kind::finite_rational && place.t0.is_zero()) return static_cast<int>(p.lowest_exponent());
  int v = 0;
  RationalPolynomial q = p;
  while (true) {
    auto [quo, rem] = RationalPolynomial::divmod(q, place.factor);
    if (!rem.is_zero()) break;
    q = std::move(quo);
    ++v;
  }
  return v;
}

/// Valuation at s = 0 of s^weight * p(1/s).
inline int valuation_at_infinity(const RationalPolynomial& p, int weight) {
  if (p.is_zero()) return kInfiniteValuation;
  if (p.degree() > weight) throw InvalidDatum("not a K3 Weierstrass datum");
  return weight - p.degree();
}

inline RationalPolynomial weierstrass_discriminant(const RationalPolynomial& a, const RationalPolynomial& b) {
  return Rational(4) * a.pow(3) + Rational(27) * b.pow(2);
}

struct ChartAtInfinity {
  RationalPolynomial a;
  RationalPolynomial b;
  RationalPolynomial delta;
};

/// Coefficients in the chart s = 1/t, x' = x s^4, y' = y s^6.
inline ChartAtInfinity infinity_transform(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.degree() > 8 || b.degree() > 12) throw InvalidDatum("not a K3 Weierstrass datum");
  ChartAtInfinity c;
  c.a = a.reversed(8);
  c.b = b.reversed(12);
  c.delta = weierstrass_discriminant(c.a, c.b);
  return c;
}

struct PlaceMultiplicity {
  Place place;
  unsigned multiplicity = 0;
};

/// Squarefree decomposition grouped by place: rational roots become
/// finite-rational places and the rest of each squarefree factor becomes one
/// class. Sum of multiplicity * degree equals deg p.
inline std::vector<PlaceMultiplicity> multiplicity_profile(const RationalPolynomial& p) {
  if (p.is_zero()) throw InvalidDatum("multiplicity profile of the zero polynomial");
  std::vector<PlaceMultiplicity> out;
  for (const auto& sf : squarefree_decomposition(p)) {
    RationalPolynomial rest = sf.factor;
    for (const auto& root : rational_roots(sf.factor)) {
      Place pl = Place::rational(root);
      rest = rest.exact_div(pl.factor);
      out.push_back({pl, sf.multiplicity});
    }
    if (rest.degree() >= 2) out.push_back({Place::root_class(rest), sf.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return place_less(x.place, y.place); });
  return out;
}

/// Splits every class so that each splitter polynomial either vanishes at
/// all roots of the class or at none of them, and with equal multiplicity.
inline std::vector<Place> refine_classes(const std::vector<Place>& places, const std::vector<RationalPolynomial>& splitters) {
  std::vector<RationalPolynomial> pieces;
  for (const auto& s : splitters) {
    if (s.is_zero() || s.degree() <= 0) continue;
    for (const auto& sf : squarefree_decomposition(s)) pieces.push_back(sf.factor);
  }
  std::vector<Place> out;
  for (const auto& pl : places) {
    if (pl.kind != Place::Kind::finite_class) {
      out.push_back(pl);
      continue;
    }
    std::vector<RationalPolynomial> parts{pl.factor};
    for (const auto& piece : pieces) {
      std::vector<RationalPolynomial> next;
      for (const auto& part : parts) {
        RationalPolynomial g = gcd(part, piece);
        if (g.degree() <= 0 || g.degree() == part.degree()) {
          next.push_back(part);
        } else {
          next.push_back(g);
          next.push_back(part.exact_div(g).monic());
        }
      }
      parts = std::move(next);
    }
    for (const auto& part : parts) {
      // Parts of degree one cannot appear: the class had no rational roots.
      out.push_back(Place::root_class(part));
    }
  }
  std::sort(out.begin(), out.end(), place_less);
  return out;
}

}  // namespace k3auto

#endif  // K3AUTO_PLACE_HPP
