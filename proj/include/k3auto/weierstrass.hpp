#ifndef K3AUTO_WEIERSTRASS_HPP
#define K3AUTO_WEIERSTRASS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3auto/classifier.hpp"
#include "k3auto/cyclotomic.hpp"
#include "k3auto/place.hpp"

namespace k3auto {

/// y^2 = x^3 + a(t) x + b(t) with deg a <= 8, deg b <= 12.
struct WeierstrassFibration {
  RationalPolynomial a;
  RationalPolynomial b;

  static WeierstrassFibration make(RationalPolynomial a, RationalPolynomial b) {
    if (a.degree() > 8 || b.degree() > 12) throw InvalidDatum("not a K3 Weierstrass datum: deg a <= 8 and deg b <= 12");
    WeierstrassFibration f{std::move(a), std::move(b)};
    if (f.delta().is_zero()) throw InvalidDatum("not a K3 Weierstrass datum: discriminant vanishes identically");
    return f;
  }
  RationalPolynomial delta() const { return weierstrass_discriminant(a, b); }
};

/// (x, y, t) -> (z^ex x, z^ey y, z^et t), optionally followed by the
/// translation by the 2-torsion section (two-torsion models only).
struct DiagonalAutomorphism {
  int ex = 0;
  int ey = 0;
  int et = 1;
  bool compose_translation = false;

  DiagonalAutomorphism normalized() const { return {mod8(ex), mod8(ey), mod8(et), compose_translation}; }
  DiagonalAutomorphism power(int k) const { return {mod8(ex * k), mod8(ey * k), mod8(et * k), compose_translation && k % 2 != 0}; }
  std::string to_string() const {
    return "(" + std::to_string(mod8(ex)) + "," + std::to_string(mod8(ey)) + "," + std::to_string(mod8(et)) + ")" +
           (compose_translation ? " composed with the 2-torsion translation" : "");
  }
};

struct KodairaType {
  enum class Kind { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
  Kind kind = Kind::I0;
  int n = 0;

  std::string name() const {
    switch (kind) {
      case Kind::I0: return "I_0";
      case Kind::In: return "I_" + std::to_string(n);
      case Kind::II: return "II";
      case Kind::III: return "III";
      case Kind::IV: return "IV";
      case Kind::I0star: return "I_0*";
      case Kind::Instar: return "I_" + std::to_string(n) + "*";
      case Kind::IVstar: return "IV*";
      case Kind::IIIstar: return "III*";
      case Kind::IIstar: return "II*";
    }
    return "";
  }
  bool singular() const { return kind != Kind::I0; }
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// Kodaira type from (v(a), v(b), v(Delta)) in characteristic zero.
inline KodairaType kodaira_from_valuations(int va, int vb, int vd) {
  using K = KodairaType::Kind;
  if (va >= 4 && vb >= 6) {
    throw NonMinimalDatum("non-minimal Weierstrass datum (v(a) >= 4 and v(b) >= 6); rescale (x, y) -> (x/u^2, y/u^3)");
  }
  if (vd == 0) return {K::I0, 0};
  if (va == 0) return {K::In, vd};
  if (va >= 1 && vb == 1 && vd == 2) return {K::II, 0};
  if (va == 1 && vb >= 2 && vd == 3) return {K::III, 0};
  if (va >= 2 && vb == 2 && vd == 4) return {K::IV, 0};
  if (va >= 2 && vb >= 3 && vd == 6) return {K::I0star, 0};
  if (va == 2 && vb == 3 && vd > 6) return {K::Instar, vd - 6};
  if (va >= 3 && vb == 4 && vd == 8) return {K::IVstar, 0};
  if (va == 3 && vb >= 5 && vd == 9) return {K::IIIstar, 0};
  if (va >= 4 && vb == 5 && vd == 10) return {K::IIstar, 0};
  throw InvalidDatum("inconsistent Weierstrass datum: valuations (" + std::to_string(va) + "," + std::to_string(vb) +
                     "," + std::to_string(vd) + ")");
}

struct FiberReport {
  Place place;
  int v_a = 0;
  int v_b = 0;
  int v_delta = 0;
  KodairaType kodaira;
};

/// Coefficients of the model near a place, in a local parameter vanishing there.
struct LocalModel {
  RationalPolynomial a;
  RationalPolynomial b;
  RationalPolynomial delta;
};

inline LocalModel local_model(const WeierstrassFibration& f, const Place& place) {
  if (place.is_infinity()) {
    auto c = infinity_transform(f.a, f.b);
    return {c.a, c.b, c.delta};
  }
  if (!place.is_origin()) throw InvalidDatum("local models are available at t=0 and t=inf");
  return {f.a, f.b, f.delta()};
}

inline FiberReport kodaira_type_at(const WeierstrassFibration& f, const Place& place) {
  FiberReport r;
  r.place = place;
  if (place.is_infinity()) {
    auto c = infinity_transform(f.a, f.b);
    auto origin = Place::rational(0);
    r.v_a = valuation_at(c.a, origin);
    r.v_b = valuation_at(c.b, origin);
    r.v_delta = valuation_at(c.delta, origin);
  } else {
    r.v_a = valuation_at(f.a, place);
    r.v_b = valuation_at(f.b, place);
    r.v_delta = valuation_at(f.delta(), place);
  }
  r.kodaira = kodaira_from_valuations(r.v_a, r.v_b, r.v_delta);
  return r;
}

/// Reports for every singular fiber plus the fibers over 0 and infinity.
inline std::vector<FiberReport> fiber_reports(const WeierstrassFibration& f) {
  std::vector<Place> places;
  bool has_origin = false;
  for (const auto& pm : multiplicity_profile(f.delta())) {
    places.push_back(pm.place);
    has_origin = has_origin || pm.place.is_origin();
  }
  places = refine_classes(places, {f.a, f.b});
  if (!has_origin) places.insert(places.begin(), Place::rational(0));
  std::sort(places.begin(), places.end(), place_less);
  places.push_back(Place::infinity());
  std::vector<FiberReport> out;
  for (const auto& p : places) out.push_back(kodaira_type_at(f, p));
  return out;
}

/// Singular fibers by Kodaira type, counted with the number of points in each place.
inline std::map<std::string, int> fiber_inventory(const std::vector<FiberReport>& reports) {
  std::map<std::string, int> inv;
  for (const auto& r : reports) {
    if (r.kodaira.singular()) inv[r.kodaira.name()] += r.place.degree();
  }
  return inv;
}
inline std::map<std::string, int> fiber_inventory(const WeierstrassFibration& f) { return fiber_inventory(fiber_reports(f)); }

inline int euler_sum(const std::vector<FiberReport>& reports) {
  int s = 0;
  for (const auto& r : reports) s += r.v_delta * r.place.degree();
  return s;
}

struct InvarianceReport {
  bool invariant = true;
  std::vector<std::string> failures;
};

/// p(z^e t) == z^w p(t) checked coefficientwise in Q(z).
inline bool scales_by(const RationalPolynomial& p, int e, int w) {
  for (const auto& [k, c] : p.terms()) {
    Cyc8 lhs = Cyc8(c) * zeta_pow(static_cast<long long>(e) * k);
    Cyc8 rhs = zeta_pow(w) * Cyc8(c);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

inline InvarianceReport check_invariance_report(const WeierstrassFibration& f, const DiagonalAutomorphism& g) {
  InvarianceReport r;
  if (!(zeta_pow(2 * g.ey) == zeta_pow(3 * g.ex))) {
    r.invariant = false;
    r.failures.push_back("z^(2ey) != z^(3ex)");
  }
  if (!scales_by(f.a, g.et, 2 * g.ey - g.ex)) {
    r.invariant = false;
    r.failures.push_back("a(z^et t) != z^(2ey-ex) a(t)");
  }
  if (!scales_by(f.b, g.et, 2 * g.ey)) {
    r.invariant = false;
    r.failures.push_back("b(z^et t) != z^(2ey) b(t)");
  }
  return r;
}

inline bool check_invariance(const WeierstrassFibration& f, const DiagonalAutomorphism& g) {
  return check_invariance_report(f, g).invariant;
}

/// Exponent e with g^* omega = z^e omega for omega = dt ^ dx / 2y.
inline int two_form_multiplier(const DiagonalAutomorphism& g) { return mod8(g.et + g.ex - g.ey); }

struct BaseFixedPlace {
  Place place;
  int base_exponent = 0;
};

inline std::vector<BaseFixedPlace> base_fixed_fibers(const DiagonalAutomorphism& g) {
  if (mod8(g.et) % 2 == 0) throw InvalidDatum("the base action z^et must have order 8 (et odd)");
  return {{Place::rational(0), mod8(g.et)}, {Place::infinity(), mod8(-g.et)}};
}

/// Exponents of the action in the chart at a base-fixed place.
struct ChartAction {
  int x = 0;
  int y = 0;
  int s = 0;
};

inline ChartAction chart_action(const DiagonalAutomorphism& g, const Place& place) {
  if (place.is_infinity()) return {mod8(g.ex - 4 * g.et), mod8(g.ey - 6 * g.et), mod8(-g.et)};
  return {mod8(g.ex), mod8(g.ey), mod8(g.et)};
}

struct FixedPointReport {
  std::string descriptor;
  int count = 1;
  int tangent = 0;
  int transverse = 0;
  PointType type;
};

struct SmoothFiberFixedPoints {
  bool pointwise_fixed = false;
  std::vector<FixedPointReport> points;
};

namespace detail {

inline FixedPointReport make_point(std::string descriptor, int count, int tangent, int transverse) {
  if (mod8(tangent) == 0) throw InconsistentConfiguration("fixed point " + descriptor + " is not isolated");
  FixedPointReport p;
  p.descriptor = std::move(descriptor);
  p.count = count;
  p.tangent = mod8(tangent);
  p.transverse = mod8(transverse);
  p.type = PointType::from_exponents(p.tangent, p.transverse);
  return p;
}

}  // namespace detail

/// Fixed points of a diagonal action on the smooth fiber y^2 = x^3 + A0 x + B0
/// over a base-fixed place. A point is a local parameter's eigenvalue pair:
/// at infinity the parameter is x/y; at an affine point it is x when
/// dF/dy = 2y0 != 0 and y otherwise. The transverse eigenvalue is the base one.
inline SmoothFiberFixedPoints smooth_fiber_fixed_points(const WeierstrassFibration& f, const DiagonalAutomorphism& g,
                                                        const Place& place) {
  const LocalModel m = local_model(f, place);
  const Rational A0 = m.a.coefficient(0);
  const Rational B0 = m.b.coefficient(0);
  if ((Rational(4) * A0 * A0 * A0 + Rational(27) * B0 * B0).is_zero()) {
    throw InvalidDatum("fiber at " + place.to_string() + " is singular");
  }
  const ChartAction c = chart_action(g, place);
  SmoothFiberFixedPoints out;
  if (c.x == 0 && c.y == 0) {
    out.pointwise_fixed = true;
    return out;
  }
  out.points.push_back(detail::make_point("point at infinity (0:1:0)", 1, c.x - c.y, c.s));
  if (c.x != 0 && c.y != 0) {
    if (B0.is_zero()) out.points.push_back(detail::make_point("(0,0)", 1, c.y, c.s));
  } else if (c.x == 0) {
    // y0 = 0 and x0 a root of the cubic; the cubic is separable on a smooth fiber.
    out.points.push_back(detail::make_point("(x0,0) with x0^3 + A0 x0 + B0 = 0", 3, c.y, c.s));
  } else if (B0.is_zero()) {
    out.points.push_back(detail::make_point("(0,0)", 1, c.y, c.s));
  } else {
    out.points.push_back(detail::make_point("(0,y0) with y0^2 = B0", 2, c.x, c.s));
  }
  return out;
}

/// Isolated fixed points on a smooth invariant fiber; rejects singular and
/// pointwise fixed fibers.
inline std::vector<FixedPointReport> fixed_points_on_fiber(const WeierstrassFibration& f, const DiagonalAutomorphism& g,
                                                           const Place& place) {
  auto fp = smooth_fiber_fixed_points(f, g, place);
  if (fp.pointwise_fixed) throw IncompatibleAction("the fiber at " + place.to_string() + " is fixed pointwise");
  return fp.points;
}

/// Action of g on one of its two invariant fibers.
struct InvariantFiberAction {
  Place place;
  FiberReport report;
  FiberShape shape;
  std::optional<EllipticAction> elliptic;
  std::optional<GraphAction> graph;
  std::vector<FixedPointReport> points;
  std::string label;
  std::string note;

  bool supported() const { return elliptic.has_value() || graph.has_value(); }
  FiberFixedData data() const {
    if (elliptic) {
      FiberFixedData d = elliptic_action_data(*elliptic);
      if (elliptic->kind == EllipticKind::involution || elliptic->kind == EllipticKind::order_four) {
        d.points = {};
        for (const auto& p : points) {
          if (p.type.t == 2) d.points.n2 += p.count;
          if (p.type.t == 3) d.points.n3 += p.count;
          if (p.type.t == 4) d.points.n4 += p.count;
        }
      }
      return d;
    }
    if (graph) return fiber_fixed_data(shape, *graph);
    throw IncompatibleAction("unsupported fiber action at " + place.to_string());
  }
};

/// `torsion_x` is the x-coordinate of a 2-torsion section as a polynomial of
/// weight 4 in t; required when g composes with the translation.
inline InvariantFiberAction fiber_action_at(const WeierstrassFibration& f, const DiagonalAutomorphism& g,
                                            const Place& place,
                                            const std::optional<RationalPolynomial>& torsion_x = std::nullopt) {
  InvariantFiberAction act;
  act.place = place;
  act.report = kodaira_type_at(f, place);
  const ChartAction c = chart_action(g, place);
  const LocalModel m = local_model(f, place);
  const Rational A0 = m.a.coefficient(0);
  const Rational B0 = m.b.coefficient(0);
  if (g.compose_translation && !torsion_x) throw InvalidDatum("translation needs a 2-torsion section");
  std::optional<Rational> torsion_at;
  if (torsion_x) torsion_at = place.is_infinity() ? torsion_x->reversed(4).coefficient(0) : torsion_x->coefficient(0);

  const auto& kt = act.report.kodaira;
  if (!kt.singular()) {
    act.shape = FiberShape::smooth();
    auto fp = smooth_fiber_fixed_points(f, g, place);
    EllipticAction e;
    if (fp.pointwise_fixed) {
      e.kind = EllipticKind::identity;
    } else if (c.x == 0 && c.y == 4) {
      e.kind = EllipticKind::involution;
    } else if (c.x == 4 && (c.y == 2 || c.y == 6)) {
      int n2 = 0, n3 = 0;
      for (const auto& p : fp.points) {
        if (p.type.t == 2) n2 += p.count;
        if (p.type.t == 3) n3 += p.count;
      }
      e = EllipticAction::order_four(n2, n3);
    } else {
      act.label = "unsupported";
      act.note = "no elliptic action model for chart exponents";
      return act;
    }
    act.points = fp.points;
    if (g.compose_translation && e.kind == EllipticKind::identity) {
      // Translation by a nonzero 2-torsion point: no fixed points.
      e = EllipticAction{EllipticKind::translation2};
    }
    act.elliptic = e;
    act.label = elliptic_label(e.kind);
    return act;
  }

  if (kt.kind == KodairaType::Kind::In && kt.n >= 3) {
    act.shape = FiberShape::I(kt.n);
    // The node of the cubic sits at the double root x_n = -3 B0 / (2 A0),
    // which is nonzero for a multiplicative fiber.
    const Rational node = Rational(-3) * B0 / (Rational(2) * A0);
    if (c.x != 0) {
      act.label = "unsupported";
      act.note = "node is not fixed";
      return act;
    }
    GraphAction ga;
    if (c.y == 0) {
      ga = GraphAction::preserve;
    } else if (c.y == 4) {
      ga = GraphAction::reflection;
    } else {
      act.label = "unsupported";
      act.note = "action on the branches at the node is not an involution";
      return act;
    }
    if (g.compose_translation && ga == GraphAction::preserve && *torsion_at == node) {
      if (kt.n % 2 != 0) throw InconsistentConfiguration("2-torsion section through the node of I_n with n odd");
      ga = GraphAction::rotation2;
      act.note = "2-torsion section meets the component opposite to the zero component";
    } else if (g.compose_translation) {
      act.note = *torsion_at == node ? "2-torsion section meets the opposite component"
                                     : "2-torsion section meets the zero component";
    }
    act.graph = ga;
    act.label = graph_action_label(act.shape, ga);
    return act;
  }

  if (kt.kind == KodairaType::Kind::IVstar) {
    act.shape = FiberShape::IV_star();
    // The two non-zero simple components correspond to the roots of
    // v^2 = b_4 with v = y / s^2.
    const int w = mod8(c.y - 2 * c.s);
    if (w == 0) {
      act.graph = GraphAction::preserve;
    } else if (w == 4) {
      act.graph = GraphAction::branch_swap;
    } else {
      act.label = "unsupported";
      act.note = "action on the simple components is not an involution";
      return act;
    }
    act.label = graph_action_label(act.shape, *act.graph);
    return act;
  }

  act.label = "unsupported";
  act.note = "no action model for fiber type " + kt.name();
  return act;
}

}  // namespace k3auto

#endif  // K3AUTO_WEIERSTRASS_HPP
