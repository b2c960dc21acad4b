#ifndef K3AUTO_LATTICE_HPP
#define K3AUTO_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3auto/errors.hpp"

namespace k3auto {

/// Ranks of the eigenspaces of sigma^* on H^2(X, C) for the eigenvalues
/// 1, -1, i (each of i, -i) and z (each primitive 8th root).
struct EigenRanks {
  int r = 0;
  int l = 0;
  int m = 0;
  int m1 = 0;

  static EigenRanks make(int r, int l, int m, int m1) {
    EigenRanks e{r, l, m, m1};
    e.validate();
    return e;
  }
  void validate() const {
    if (r < 0 || l < 0 || m < 0) throw InconsistentConfiguration("negative eigenspace rank");
    if (r + l + 2 * m + 4 * m1 != 22) throw InconsistentConfiguration("eigenspace ranks do not sum to 22");
    if (m1 < 1 || m1 > 5) throw InconsistentConfiguration("m1 must lie in 1..5");
    if (r < 1) throw InconsistentConfiguration("no invariant class");
  }
  int rk_transcendental() const { return 4 * m1; }
  int rk_pic() const { return 22 - 4 * m1; }
  friend bool operator==(const EigenRanks&, const EigenRanks&) = default;
};

/// Ranks (eigenvalue 1, eigenvalue -1, each of +-i) for a power of sigma.
struct PowerRanks {
  int r = 0;
  int l = 0;
  int m = 0;
  friend bool operator==(const PowerRanks&, const PowerRanks&) = default;
};

inline PowerRanks power_ranks(const EigenRanks& e, int j) {
  switch (j) {
    case 2: return {e.r + e.l, 2 * e.m, 2 * e.m1};
    case 4: return {e.r + e.l + 2 * e.m, 4 * e.m1, 0};
    default: throw InvalidDatum("power must be 2 or 4");
  }
}

/// Square of an order-4 datum: i and -i both square to -1.
inline PowerRanks square_ranks(const PowerRanks& p) { return {p.r + p.l, 2 * p.m, 0}; }

struct InvolutionFixData {
  enum class Special { none, empty_lattice, two_elliptic_lattice };
  int rkS = 0;
  int a = 0;
  Special special = Special::none;
};

struct NikulinShape {
  enum class Kind { empty, two_elliptic, curves };
  Kind kind = Kind::curves;
  int g = 0;
  int k = 0;

  std::string to_string() const {
    switch (kind) {
      case Kind::empty: return "empty";
      case Kind::two_elliptic: return "two elliptic curves";
      case Kind::curves: return "C_" + std::to_string(g) + " + " + std::to_string(k) + " rational";
    }
    return "";
  }
  friend bool operator==(const NikulinShape&, const NikulinShape&) = default;
};

/// Fixed locus of a non-symplectic involution from its invariant lattice.
inline NikulinShape nikulin_fixed_locus(const InvolutionFixData& d) {
  using S = InvolutionFixData::Special;
  if (d.special == S::empty_lattice) {
    if (d.rkS != 10 || d.a != 10) throw InvalidDatum("not a valid 2-elementary datum");
    return {NikulinShape::Kind::empty, 0, 0};
  }
  if (d.special == S::two_elliptic_lattice) {
    if (d.rkS != 10 || d.a != 8) throw InvalidDatum("not a valid 2-elementary datum");
    return {NikulinShape::Kind::two_elliptic, 1, 0};
  }
  int two_g = 22 - d.rkS - d.a;
  int two_k = d.rkS - d.a;
  if (d.rkS < 0 || d.rkS > 20 || d.a < 0 || two_g < 0 || two_k < 0 || two_g % 2 != 0 || two_k % 2 != 0) {
    throw InvalidDatum("not a valid 2-elementary datum");
  }
  return {NikulinShape::Kind::curves, two_g / 2, two_k / 2};
}

struct Skeleton {
  int rk_pic = 0;
  int num_elliptic = 0;
  int k_sigma4 = 0;
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Shapes of Fix(sigma^4) containing an elliptic curve, with rk Pic = rk S(sigma^4)
/// in {10, 14, 18} (4 | rk T_X). At rank 10 only the two-elliptic lattice is
/// admitted; the lone genus-one locus at (10, 10) is not a skeleton.
inline std::vector<Skeleton> sigma4_skeletons() {
  std::vector<Skeleton> out;
  for (int rk : {10, 14, 18}) {
    if (rk == 10) {
      auto shape = nikulin_fixed_locus({10, 8, InvolutionFixData::Special::two_elliptic_lattice});
      out.push_back({rk, 2, shape.k});
      continue;
    }
    int a = 20 - rk;  // g = 1
    auto shape = nikulin_fixed_locus({rk, a, InvolutionFixData::Special::none});
    if (shape.g == 1) out.push_back({rk, 1, shape.k});
  }
  return out;
}

struct RankSolution {
  int r = 0;
  int l = 0;
  int m = 0;
  friend bool operator==(const RankSolution&, const RankSolution&) = default;
};

/// Solves r + l + 2m = 22 - 4 m1, r - l = N + 2 alpha - 2, r + l - 2m = 4 k_sigma2 + 2.
inline RankSolution solve_ranks(int m1, int N, int alpha, int k_sigma2) {
  const int total = 22 - 4 * m1;
  const int diff = N + 2 * alpha - 2;
  const int square_gap = 4 * k_sigma2 + 2;
  if ((total + square_gap) % 2 != 0 || (total - square_gap) % 4 != 0) {
    throw InconsistentConfiguration("inconsistent configuration: non-integral ranks");
  }
  const int rl = (total + square_gap) / 2;
  const int m = (total - square_gap) / 4;
  if ((rl + diff) % 2 != 0) throw InconsistentConfiguration("inconsistent configuration: non-integral ranks");
  const int r = (rl + diff) / 2;
  const int l = rl - r;
  if (r < 0 || l < 0 || m < 0) throw InconsistentConfiguration("inconsistent configuration: negative rank");
  return {r, l, m};
}

inline std::optional<RankSolution> try_solve_ranks(int m1, int N, int alpha, int k_sigma2) {
  try {
    return solve_ranks(m1, N, alpha, k_sigma2);
  } catch (const InconsistentConfiguration&) {
    return std::nullopt;
  }
}

}  // namespace k3auto

#endif  // K3AUTO_LATTICE_HPP
