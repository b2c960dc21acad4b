#ifndef K3AUTO_FIBER_GEOMETRY_HPP
#define K3AUTO_FIBER_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "k3auto/lefschetz.hpp"

namespace k3auto {

/// Local action at a fixed point on the next curve of an invariant chain:
/// (t, s) -> (t - 1, s + 1).
inline std::pair<int, int> chain_step(std::pair<int, int> pt) { return {mod8(pt.first - 1), mod8(pt.second + 1)}; }

struct FiberShape {
  enum class Kind { smooth, I_n, IV_star };
  Kind kind = Kind::smooth;
  int n = 0;

  static FiberShape smooth() { return {Kind::smooth, 0}; }
  static FiberShape I(int n) {
    if (n < 1) throw InvalidDatum("I_n needs n >= 1");
    return {Kind::I_n, n};
  }
  static FiberShape IV_star() { return {Kind::IV_star, 0}; }

  int euler_number() const {
    switch (kind) {
      case Kind::smooth: return 0;
      case Kind::I_n: return n;
      case Kind::IV_star: return 8;
    }
    return 0;
  }
  int components() const {
    switch (kind) {
      case Kind::smooth: return 1;
      case Kind::I_n: return n;
      case Kind::IV_star: return 7;
    }
    return 0;
  }
  std::string name() const {
    switch (kind) {
      case Kind::smooth: return "smooth";
      case Kind::I_n: return "I_" + std::to_string(n);
      case Kind::IV_star: return "IV*";
    }
    return "";
  }
  friend bool operator==(const FiberShape&, const FiberShape&) = default;
};

inline int euler_number(const FiberShape& shape) { return shape.euler_number(); }

/// Permutation actions on the dual graph of a singular fiber.
enum class GraphAction { preserve, reflection, rotation2, rotation4, branch_swap };

enum class EllipticKind { identity, translation2, translation4, involution, order_four };

/// Action on a smooth elliptic fiber. For order four the two fixed points
/// have types chosen by (n2, n3) with n2 + n3 = 2.
struct EllipticAction {
  EllipticKind kind = EllipticKind::identity;
  int n2 = 0;
  int n3 = 0;

  static EllipticAction order_four(int n2, int n3) {
    if (n2 < 0 || n3 < 0 || n2 + n3 != 2) throw IncompatibleAction("order-four action has two fixed points");
    return {EllipticKind::order_four, n2, n3};
  }
  friend bool operator==(const EllipticAction&, const EllipticAction&) = default;
};

inline std::string elliptic_label(EllipticKind kind) {
  switch (kind) {
    case EllipticKind::identity: return "identity";
    case EllipticKind::translation2: return "translation of order two";
    case EllipticKind::translation4: return "translation of order four";
    case EllipticKind::involution: return "involution";
    case EllipticKind::order_four: return "order four";
  }
  return "";
}

inline std::string graph_action_label(const FiberShape& shape, GraphAction action) {
  const std::string fiber = shape.name();
  switch (action) {
    case GraphAction::preserve: return "preserves each curve of " + fiber;
    case GraphAction::reflection: return "reflection on " + fiber;
    case GraphAction::rotation2: return "rotation of order 2 on " + fiber;
    case GraphAction::rotation4: return "rotation of order 4 on " + fiber;
    case GraphAction::branch_swap: return "reflection of " + fiber;
  }
  return "";
}

/// Fixed data of sigma, sigma^2 and sigma^4 restricted to one invariant fiber.
struct FiberFixedData {
  int k_sigma = 0;
  PointCounts points;
  int k_sigma2 = 0;
  int k_sigma4 = 0;
  int alpha_contrib = 0;
  int sigma2_isolated = 0;
  /// Whether the fiber itself, a smooth elliptic curve, is fixed by sigma,
  /// sigma^2, sigma^4.
  std::array<bool, 3> elliptic_fixed{false, false, false};

  void add_to(FixedLocusConfig& config) const {
    for (int i = 0; i < k_sigma; ++i) config.curves.push_back({0, 1});
    if (elliptic_fixed[0]) config.curves.push_back({1, 1});
    config.n2 += points.n2;
    config.n3 += points.n3;
    config.n4 += points.n4;
  }
  void add_to(SquareLocus& locus) const {
    for (int i = 0; i < k_sigma2; ++i) locus.curves.push_back({0, 2});
    if (elliptic_fixed[1]) locus.curves.push_back({1, 2});
    locus.isolated += sigma2_isolated;
  }
  friend bool operator==(const FiberFixedData&, const FiberFixedData&) = default;
};

inline FiberFixedData elliptic_action_data(const EllipticAction& action) {
  FiberFixedData d;
  switch (action.kind) {
    case EllipticKind::identity: d.elliptic_fixed = {true, true, true}; break;
    case EllipticKind::translation2: d.elliptic_fixed = {false, true, true}; break;
    case EllipticKind::translation4: d.elliptic_fixed = {false, false, true}; break;
    case EllipticKind::involution:
      d.points.n4 = 4;
      d.elliptic_fixed = {false, true, true};
      break;
    case EllipticKind::order_four:
      if (action.n2 + action.n3 != 2 || action.n2 < 0 || action.n3 < 0) {
        throw IncompatibleAction("order-four action has two fixed points");
      }
      d.points.n2 = action.n2;
      d.points.n3 = action.n3;
      // sigma^2 is the elliptic involution with four fixed points.
      d.sigma2_isolated = 4;
      d.elliptic_fixed = {false, false, true};
      break;
  }
  return d;
}

namespace detail {

struct DualGraph {
  std::vector<std::vector<int>> neighbors;
  std::vector<int> multiplicity;
  int size() const { return static_cast<int>(neighbors.size()); }
};

inline int mod_n(int v, int n) {
  int r = v % n;
  return r < 0 ? r + n : r;
}

// IV*: 0 is the central component; arm a has middle 1 + 2a and leaf 2 + 2a.
inline DualGraph dual_graph(const FiberShape& shape) {
  DualGraph g;
  if (shape.kind == FiberShape::Kind::I_n) {
    if (shape.n < 3) throw IncompatibleAction("graph actions are modelled on I_n with n >= 3");
    g.neighbors.resize(static_cast<std::size_t>(shape.n));
    g.multiplicity.assign(static_cast<std::size_t>(shape.n), 1);
    for (int i = 0; i < shape.n; ++i) {
      g.neighbors[static_cast<std::size_t>(i)] = {mod_n(i - 1, shape.n), mod_n(i + 1, shape.n)};
    }
  } else if (shape.kind == FiberShape::Kind::IV_star) {
    g.neighbors = {{1, 3, 5}, {0, 2}, {1}, {0, 4}, {3}, {0, 6}, {5}};
    g.multiplicity = {3, 2, 1, 2, 1, 2, 1};
  } else {
    throw IncompatibleAction("smooth fibers have no dual graph action");
  }
  return g;
}

inline std::vector<int> graph_permutation(const FiberShape& shape, GraphAction action) {
  std::vector<int> perm;
  if (shape.kind == FiberShape::Kind::I_n) {
    const int n = shape.n;
    perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int image = i;
      switch (action) {
        case GraphAction::preserve: image = i; break;
        case GraphAction::reflection: image = mod_n(-i, n); break;
        case GraphAction::rotation2:
        case GraphAction::rotation4: {
          int order = action == GraphAction::rotation2 ? 2 : 4;
          if (n % order != 0) throw IncompatibleAction("rotation order must divide n");
          image = mod_n(i + n / order, n);
          break;
        }
        case GraphAction::branch_swap: throw IncompatibleAction("branch swap needs a IV* fiber");
      }
      perm[static_cast<std::size_t>(i)] = image;
    }
  } else if (shape.kind == FiberShape::Kind::IV_star) {
    if (action == GraphAction::preserve) {
      perm = {0, 1, 2, 3, 4, 5, 6};
    } else if (action == GraphAction::branch_swap) {
      perm = {0, 1, 2, 5, 6, 3, 4};
    } else {
      throw IncompatibleAction("IV* admits only preserve and branch swap");
    }
  } else {
    throw IncompatibleAction("smooth fibers have no dual graph action");
  }
  return perm;
}

// Local picture of sigma^j on one invariant component c.
struct ComponentView {
  bool invariant = false;
  std::vector<int> fixed_nbrs;    // neighbors meeting c in a sigma^j-fixed point
  std::vector<int> moved_orbits;  // orbit sizes of the remaining special points
};

// Assignment of tau for every component in P_j (-1 outside).
using PowerAssignment = std::vector<int>;

class PowerSolver {
 public:
  PowerSolver(const DualGraph& g, const std::vector<int>& perm, int j) : g_(g), j_(j) {
    const int n = g.size();
    power_.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      int image = c;
      for (int step = 0; step < j; ++step) image = perm[static_cast<std::size_t>(image)];
      power_[static_cast<std::size_t>(c)] = image;
    }
    views_.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      auto& v = views_[static_cast<std::size_t>(c)];
      v.invariant = power_[static_cast<std::size_t>(c)] == c;
      if (!v.invariant) continue;
      std::set<int> seen;
      for (int d : g.neighbors[static_cast<std::size_t>(c)]) {
        if (power_[static_cast<std::size_t>(d)] == d) {
          v.fixed_nbrs.push_back(d);
          continue;
        }
        if (seen.count(d)) continue;
        int size = 0;
        int e = d;
        do {
          seen.insert(e);
          e = power_[static_cast<std::size_t>(e)];
          ++size;
        } while (e != d);
        v.moved_orbits.push_back(size);
      }
    }
  }

  int power() const { return j_; }
  const ComponentView& view(int c) const { return views_[static_cast<std::size_t>(c)]; }

  /// Tangent exponent of sigma^j along c at its intersection with d.
  int tangent(const PowerAssignment& a, int c, int d) const {
    int tau = a[static_cast<std::size_t>(c)];
    if (tau == 0) return 0;
    const auto& f = view(c).fixed_nbrs;
    return f[0] == d ? tau : mod8(-tau);
  }

  /// Tangent exponents at fixed points of c away from other components.
  std::vector<int> free_tangents(const PowerAssignment& a, int c) const {
    int tau = a[static_cast<std::size_t>(c)];
    std::vector<int> out;
    if (tau == 0) return out;
    const auto f = view(c).fixed_nbrs.size();
    if (f == 0) out = {tau, mod8(-tau)};
    if (f == 1) out = {mod8(-tau)};
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every assignment satisfying the local constraints of this power.
  std::vector<PowerAssignment> solve() const {
    const int n = g_.size();
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int c = 0; c < n; ++c) {
      if (!view(c).invariant || seen[static_cast<std::size_t>(c)]) continue;
      std::vector<int> block{c};
      seen[static_cast<std::size_t>(c)] = true;
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (int d : view(block[i]).fixed_nbrs) {
          if (!seen[static_cast<std::size_t>(d)]) {
            seen[static_cast<std::size_t>(d)] = true;
            block.push_back(d);
          }
        }
      }
      blocks.push_back(std::move(block));
    }
    std::vector<PowerAssignment> partial{PowerAssignment(static_cast<std::size_t>(n), -1)};
    for (const auto& block : blocks) {
      std::vector<PowerAssignment> next;
      for (const auto& base : partial) {
        for (int seed = 0; seed < 8; seed += j_) {
          PowerAssignment a = base;
          if (propagate(a, block, seed) && block_valid(a, block)) next.push_back(std::move(a));
        }
      }
      partial = std::move(next);
    }
    return partial;
  }

 private:
  bool propagate(PowerAssignment& a, const std::vector<int>& block, int seed) const {
    a[static_cast<std::size_t>(block.front())] = seed;
    std::vector<int> queue{block.front()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int c = queue[i];
      if (!tangent_defined(a, c)) return false;
      for (int d : view(c).fixed_nbrs) {
        int need = mod8(j_ - tangent(a, c, d));
        int tau = 0;
        if (need != 0) {
          const auto& f = view(d).fixed_nbrs;
          if (f.size() >= 3) return false;
          tau = f[0] == c ? need : mod8(-need);
        }
        int& slot = a[static_cast<std::size_t>(d)];
        if (slot == -1) {
          slot = tau;
          queue.push_back(d);
        } else if (tangent(a, d, c) != need) {
          return false;
        }
      }
    }
    return true;
  }

  bool tangent_defined(const PowerAssignment& a, int c) const {
    return a[static_cast<std::size_t>(c)] == 0 || view(c).fixed_nbrs.size() <= 2;
  }

  bool block_valid(const PowerAssignment& a, const std::vector<int>& block) const {
    for (int c : block) {
      const int tau = a[static_cast<std::size_t>(c)];
      if (!tangent_defined(a, c)) return false;
      for (int d : view(c).fixed_nbrs) {
        if (mod8(tangent(a, c, d) + tangent(a, d, c)) != mod8(j_)) return false;
      }
      // Special points permuted in an orbit of size o: sigma^j moves them and
      // sigma^(j o) fixes them.
      for (int o : view(c).moved_orbits) {
        if (tau == 0 || mod8(o * tau) != 0) return false;
      }
      // Isolated fixed points away from other components lie on a single
      // component of the fiber; their normal direction is horizontal and
      // cannot be fixed.
      for (int v : free_tangents(a, c)) {
        if (mod8(j_ - v) == 0) return false;
      }
    }
    return true;
  }

  const DualGraph& g_;
  int j_;
  std::vector<int> power_;
  std::vector<ComponentView> views_;
};

struct PowerTally {
  int pointwise_fixed = 0;
  std::vector<std::pair<int, int>> isolated;  // exponent pairs
};

inline PowerTally tally(const DualGraph& g, const PowerSolver& s, const PowerAssignment& a) {
  PowerTally t;
  const int j = s.power();
  for (int c = 0; c < g.size(); ++c) {
    if (!s.view(c).invariant) continue;
    if (a[static_cast<std::size_t>(c)] == 0) ++t.pointwise_fixed;
    for (int d : s.view(c).fixed_nbrs) {
      if (d < c) continue;
      int x = s.tangent(a, c, d);
      int y = s.tangent(a, d, c);
      if (x != 0 && y != 0) t.isolated.emplace_back(x, y);
    }
    for (int v : s.free_tangents(a, c)) t.isolated.emplace_back(v, mod8(j - v));
  }
  return t;
}

// sigma maps c to perm(c) and conjugates sigma^j on c to sigma^j on perm(c).
inline bool equivariant(const std::vector<int>& perm, const PowerSolver& s, const PowerAssignment& a) {
  for (std::size_t c = 0; c < perm.size(); ++c) {
    if (!s.view(static_cast<int>(c)).invariant) continue;
    int pc = perm[c];
    if ((a[c] == 0) != (a[static_cast<std::size_t>(pc)] == 0)) return false;
    for (int d : s.view(static_cast<int>(c)).fixed_nbrs) {
      if (s.tangent(a, static_cast<int>(c), d) != s.tangent(a, pc, perm[static_cast<std::size_t>(d)])) return false;
    }
    if (s.free_tangents(a, static_cast<int>(c)) != s.free_tangents(a, pc)) return false;
  }
  return true;
}

// sigma^(2j) is the square of sigma^j on every sigma^j-invariant component.
inline bool compatible(const PowerSolver& lo, const PowerAssignment& a, const PowerSolver& hi,
                       const PowerAssignment& b) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] < 0) continue;
    const int cc = static_cast<int>(c);
    if (mod8(2 * a[c]) == 0) {
      if (b[c] != 0) return false;
      continue;
    }
    for (int d : lo.view(cc).fixed_nbrs) {
      if (hi.tangent(b, cc, d) != mod8(2 * lo.tangent(a, cc, d))) return false;
    }
    std::vector<int> doubled;
    for (int v : lo.free_tangents(a, cc)) doubled.push_back(mod8(2 * v));
    std::sort(doubled.begin(), doubled.end());
    if (doubled != hi.free_tangents(b, cc)) return false;
  }
  return true;
}

}  // namespace detail

/// Fixed data of sigma, sigma^2 and sigma^4 on a singular invariant fiber,
/// found by enumerating every labeling of local actions consistent with the
/// chain rule, the graph action, the powers and the absence of isolated
/// sigma^4-fixed points. The result must be the same for every surviving
/// labeling.
inline FiberFixedData fiber_fixed_data(const FiberShape& shape, GraphAction action) {
  const detail::DualGraph g = detail::dual_graph(shape);
  const std::vector<int> perm = detail::graph_permutation(shape, action);
  const detail::PowerSolver s1(g, perm, 1), s2(g, perm, 2), s4(g, perm, 4);

  auto keep_equivariant = [&](const detail::PowerSolver& s) {
    std::vector<detail::PowerAssignment> out;
    for (auto& a : s.solve()) {
      if (detail::equivariant(perm, s, a)) out.push_back(std::move(a));
    }
    return out;
  };
  const auto a1 = keep_equivariant(s1);
  const auto a2 = keep_equivariant(s2);
  const auto a4 = keep_equivariant(s4);

  std::vector<FiberFixedData> results;
  for (const auto& x1 : a1) {
    for (const auto& x2 : a2) {
      if (!detail::compatible(s1, x1, s2, x2)) continue;
      for (const auto& x4 : a4) {
        if (!detail::compatible(s2, x2, s4, x4)) continue;
        const auto t4 = detail::tally(g, s4, x4);
        if (!t4.isolated.empty()) continue;
        const auto t1 = detail::tally(g, s1, x1);
        const auto t2 = detail::tally(g, s2, x2);
        FiberFixedData d;
        d.k_sigma = t1.pointwise_fixed;
        d.alpha_contrib = t1.pointwise_fixed;
        for (const auto& [x, y] : t1.isolated) {
          PointType pt = PointType::from_exponents(x, y);
          if (pt.t == 2) ++d.points.n2;
          if (pt.t == 3) ++d.points.n3;
          if (pt.t == 4) ++d.points.n4;
        }
        d.k_sigma2 = t2.pointwise_fixed;
        d.sigma2_isolated = static_cast<int>(t2.isolated.size());
        d.k_sigma4 = t4.pointwise_fixed;
        if (std::find(results.begin(), results.end(), d) == results.end()) results.push_back(d);
      }
    }
  }
  if (results.empty()) throw InconsistentConfiguration("no consistent labeling for " + graph_action_label(shape, action));
  if (results.size() > 1) throw InconsistentConfiguration("ambiguous labeling for " + graph_action_label(shape, action));
  return results.front();
}

}  // namespace k3auto

#endif  // K3AUTO_FIBER_GEOMETRY_HPP
