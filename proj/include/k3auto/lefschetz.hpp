#ifndef K3AUTO_LEFSCHETZ_HPP
#define K3AUTO_LEFSCHETZ_HPP

#include <array>
#include <string>
#include <vector>

#include "k3auto/cyclotomic.hpp"
#include "k3auto/linalg.hpp"

namespace k3auto {

/// Local type (t, s) of an isolated fixed point of an order-8 automorphism
/// acting on the 2-form by z: the differential is diag(z^t, z^s), t + s = 1
/// mod 8. Stored with t in {2, 3, 4}.
struct PointType {
  int t = 2;

  int s() const { return 9 - t; }

  static PointType from_exponents(int a, int b) {
    a = mod8(a);
    b = mod8(b);
    if (mod8(a + b) != 1 || a == 0 || b == 0 || a == 1 || b == 1) {
      throw InvalidDatum("exponents (" + std::to_string(a) + "," + std::to_string(b) +
                         ") are not an isolated order-8 point type");
    }
    return PointType{a >= 2 && a <= 4 ? a : b};
  }

  std::string to_string() const { return "(" + std::to_string(t) + "," + std::to_string(s()) + ")"; }
  friend bool operator==(PointType, PointType) = default;
};

struct FixedCurve {
  int genus = 0;
  int normal_exp = 1;
  friend bool operator==(const FixedCurve&, const FixedCurve&) = default;
};

struct FixedLocusConfig {
  std::vector<FixedCurve> curves;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;

  int N() const { return n2 + n3 + n4; }
  int alpha() const {
    int a = 0;
    for (const auto& c : curves) a += 1 - c.genus;
    return a;
  }
  int k() const {
    int c0 = 0;
    for (const auto& c : curves) c0 += c.genus == 0 ? 1 : 0;
    return c0;
  }
  int count(PointType pt) const { return pt.t == 2 ? n2 : pt.t == 3 ? n3 : n4; }
  void add(PointType pt, int n = 1) { (pt.t == 2 ? n2 : pt.t == 3 ? n3 : n4) += n; }
  friend bool operator==(const FixedLocusConfig&, const FixedLocusConfig&) = default;
};

/// Fixed locus of the square: curves with normal exponent 2 and isolated
/// points, all of local type (6, 4).
struct SquareLocus {
  std::vector<FixedCurve> curves;
  int isolated = 0;

  int k() const {
    int c0 = 0;
    for (const auto& c : curves) c0 += c.genus == 0 ? 1 : 0;
    return c0;
  }
  int euler() const {
    int e = isolated;
    for (const auto& c : curves) e += 2 - 2 * c.genus;
    return e;
  }
};

inline constexpr std::array<int, 2> kSquarePointExponents{6, 4};

/// Alternating trace of the j-th power on H^*(X, O): 1 + z^(8-j).
inline Cyc8 holo_target(int j) { return Cyc8(1) + zeta_pow(8 - j); }

inline Cyc8 point_term(int t, int s) {
  if (mod8(t) == 0 || mod8(s) == 0) throw InvalidDatum("point term needs nonzero exponents");
  return ((Cyc8(1) - zeta_pow(t)) * (Cyc8(1) - zeta_pow(s))).inverse();
}
inline Cyc8 point_term(PointType pt) { return point_term(pt.t, pt.s()); }

inline Cyc8 curve_term(const FixedCurve& c) {
  if (mod8(c.normal_exp) == 0) throw InvalidDatum("fixed curve with trivial normal action");
  Cyc8 z = zeta_pow(c.normal_exp);
  Cyc8 one_minus = Cyc8(1) - z;
  return Cyc8(1 - c.genus) * (Cyc8(1) + z) / (one_minus * one_minus);
}

struct HoloCheck {
  Cyc8 total;
  Cyc8 target;
  Cyc8 residual;
  bool matches = false;
};

inline HoloCheck make_check(Cyc8 total, Cyc8 target) {
  HoloCheck h;
  h.residual = total - target;
  h.matches = h.residual.is_zero();
  h.total = std::move(total);
  h.target = std::move(target);
  return h;
}

inline HoloCheck holo_total(const FixedLocusConfig& config) {
  Cyc8 total;
  for (int t : {2, 3, 4}) {
    int n = config.count(PointType{t});
    if (n != 0) total += Cyc8(n) * point_term(PointType{t});
  }
  for (const auto& c : config.curves) total += curve_term(c);
  return make_check(total, holo_target(1));
}

inline HoloCheck holo_total(const SquareLocus& locus) {
  Cyc8 total;
  if (locus.isolated != 0) {
    total += Cyc8(locus.isolated) * point_term(kSquarePointExponents[0], kSquarePointExponents[1]);
  }
  for (const auto& c : locus.curves) total += curve_term(c);
  return make_check(total, holo_target(2));
}

/// Chi of the fixed locus equals 2 + r - l.
inline bool topo_check(const FixedLocusConfig& config, int r, int l) { return config.N() + 2 * config.alpha() == r - l + 2; }

/// An integer linear equation c . (n2, n3, n4, alpha) = rhs.
struct LinearConstraint {
  std::array<long long, 4> coeffs{};
  long long rhs = 0;

  long long evaluate(int n2, int n3, int n4, int alpha) const {
    return coeffs[0] * n2 + coeffs[1] * n3 + coeffs[2] * n4 + coeffs[3] * alpha;
  }
  bool holds(int n2, int n3, int n4, int alpha) const { return evaluate(n2, n3, n4, alpha) == rhs; }
  std::string to_string() const {
    static const char* const names[] = {"n2", "n3", "n4", "alpha"};
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
      long long c = coeffs[i];
      if (c == 0) continue;
      long long mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += names[i];
    }
    return (out.empty() ? "0" : out) + " = " + std::to_string(rhs);
  }
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Integer rows [c | rhs] from constraints, for Hermite comparison.
inline IntegerMatrix constraint_matrix(const std::vector<LinearConstraint>& cs) {
  IntegerMatrix m;
  for (const auto& c : cs) {
    std::vector<BigInt> row;
    for (long long v : c.coeffs) row.emplace_back(v);
    row.emplace_back(c.rhs);
    m.push_back(std::move(row));
  }
  return m;
}

/// Expands n2*P(2,7) + n3*P(3,6) + n4*P(4,5) + alpha*Q - (1 + z^7) = 0 in the
/// power basis, row reduces over Q and saturates over Z. The result is the
/// Hermite basis of all integer consequences of the holomorphic formula.
inline std::vector<LinearConstraint> derive_prop1_constraints() {
  const std::array<Cyc8, 4> columns{point_term(PointType{2}), point_term(PointType{3}), point_term(PointType{4}),
                                    curve_term(FixedCurve{0, 1})};
  const Cyc8 target = holo_target(1);
  RationalMatrix m(4, std::vector<Rational>(5));
  for (std::size_t coord = 0; coord < 4; ++coord) {
    for (std::size_t j = 0; j < 4; ++j) m[coord][j] = columns[j][coord];
    m[coord][4] = target[coord];
  }
  IntegerMatrix basis = saturate(rref(m));
  std::vector<LinearConstraint> out;
  for (const auto& row : basis) {
    LinearConstraint c;
    for (std::size_t j = 0; j < 4; ++j) c.coeffs[j] = static_cast<long long>(row[j]);
    c.rhs = static_cast<long long>(row[4]);
    out.push_back(c);
  }
  return out;
}

/// Rank of the Q-coefficient matrix (without the target column).
inline int prop1_coefficient_rank() {
  const std::array<Cyc8, 4> columns{point_term(PointType{2}), point_term(PointType{3}), point_term(PointType{4}),
                                    curve_term(FixedCurve{0, 1})};
  RationalMatrix m(4, std::vector<Rational>(4));
  for (std::size_t coord = 0; coord < 4; ++coord) {
    for (std::size_t j = 0; j < 4; ++j) m[coord][j] = columns[j][coord];
  }
  return static_cast<int>(rref(m).size());
}

inline bool satisfies_prop1(int n2, int n3, int n4, int alpha) {
  static const std::vector<LinearConstraint> cs = derive_prop1_constraints();
  for (const auto& c : cs) {
    if (!c.holds(n2, n3, n4, alpha)) return false;
  }
  return true;
}

struct PointCounts {
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;
  friend bool operator==(const PointCounts&, const PointCounts&) = default;
};

/// All non-negative (n2, n3, n4) with n2 + n3 + n4 <= max_points satisfying
/// the holomorphic constraints for the given alpha.
inline std::vector<PointCounts> enumerate_point_counts(int alpha, int max_points) {
  std::vector<PointCounts> out;
  for (int n2 = 0; n2 <= max_points; ++n2) {
    for (int n3 = 0; n2 + n3 <= max_points; ++n3) {
      for (int n4 = 0; n2 + n3 + n4 <= max_points; ++n4) {
        if (satisfies_prop1(n2, n3, n4, alpha)) out.push_back({n2, n3, n4});
      }
    }
  }
  return out;
}

enum class SquareBehaviour { isolated, on_curve };

/// Whether an isolated point of the order-8 map stays isolated for its square.
inline SquareBehaviour power_point_type(PointType pt) {
  return (mod8(2 * pt.t) == 0 || mod8(2 * pt.s()) == 0) ? SquareBehaviour::on_curve : SquareBehaviour::isolated;
}

}  // namespace k3auto

#endif  // K3AUTO_LEFSCHETZ_HPP
