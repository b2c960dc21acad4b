#ifndef K3AUTO_CLASSIFIER_HPP
#define K3AUTO_CLASSIFIER_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "k3auto/fiber_geometry.hpp"
#include "k3auto/lattice.hpp"

namespace k3auto {

/// Action of sigma on the second invariant fiber C': either a smooth
/// elliptic curve with an order-four action, or a singular fiber with a
/// permutation action on its components.
struct SecondFiberAction {
  FiberShape shape;
  EllipticAction elliptic;  // used when shape is smooth
  GraphAction graph = GraphAction::preserve;

  static SecondFiberAction smooth(EllipticAction a) { return {FiberShape::smooth(), a, GraphAction::preserve}; }
  static SecondFiberAction singular(FiberShape s, GraphAction g) { return {s, EllipticAction{}, g}; }

  bool is_smooth() const { return shape.kind == FiberShape::Kind::smooth; }
  std::string label() const { return is_smooth() ? elliptic_label(elliptic.kind) : graph_action_label(shape, graph); }
  FiberFixedData data() const { return is_smooth() ? elliptic_action_data(elliptic) : fiber_fixed_data(shape, graph); }
};

struct ClassificationRow {
  int index = 0;
  int r = 0;
  int l = 0;
  int m = 0;
  int k_sigma2 = 0;
  int num_C = 0;
  int rk_pic = 0;
  int k_sigma4 = 0;
  int N = 0;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;
  int k = 0;
  std::pair<std::string, std::string> action;

  int m1() const { return (22 - rk_pic) / 4; }
  auto columns() const { return std::tie(r, l, m, k_sigma2, num_C, rk_pic, k_sigma4, N, n2, n3, n4, k, action); }
  friend bool operator==(const ClassificationRow& a, const ClassificationRow& b) {
    return a.index == b.index && a.columns() == b.columns();
  }
};

namespace detail {

inline std::vector<EllipticAction> all_elliptic_actions(bool include_order_four) {
  std::vector<EllipticAction> out{{EllipticKind::identity},
                                  {EllipticKind::translation2},
                                  {EllipticKind::translation4},
                                  {EllipticKind::involution}};
  if (include_order_four) {
    for (auto [a, b] : {std::pair{2, 0}, std::pair{0, 2}, std::pair{1, 1}}) out.push_back(EllipticAction::order_four(a, b));
  }
  return out;
}

inline std::vector<SecondFiberAction> second_fiber_actions(int rk_pic) {
  std::vector<SecondFiberAction> out;
  const std::array<GraphAction, 4> cycle_actions{GraphAction::preserve, GraphAction::reflection, GraphAction::rotation2,
                                                 GraphAction::rotation4};
  if (rk_pic == 10) {
    for (const auto& e : all_elliptic_actions(true)) {
      if (e.kind == EllipticKind::order_four) out.push_back(SecondFiberAction::smooth(e));
    }
  } else if (rk_pic == 14) {
    out.push_back(SecondFiberAction::singular(FiberShape::IV_star(), GraphAction::preserve));
    out.push_back(SecondFiberAction::singular(FiberShape::IV_star(), GraphAction::branch_swap));
    for (auto g : cycle_actions) out.push_back(SecondFiberAction::singular(FiberShape::I(8), g));
  } else if (rk_pic == 18) {
    for (auto g : cycle_actions) out.push_back(SecondFiberAction::singular(FiberShape::I(16), g));
  }
  return out;
}

inline int second_action_rank(const SecondFiberAction& a) {
  if (a.is_smooth()) return 0;
  switch (a.graph) {
    case GraphAction::branch_swap: return 1;
    case GraphAction::rotation2: return 2;
    case GraphAction::rotation4: return 3;
    case GraphAction::reflection: return 4;
    case GraphAction::preserve: return 5;
  }
  return 6;
}

inline std::optional<EllipticKind> elliptic_kind_from_label(const std::string& label) {
  for (auto kind : {EllipticKind::identity, EllipticKind::translation2, EllipticKind::translation4,
                    EllipticKind::involution, EllipticKind::order_four}) {
    if (elliptic_label(kind) == label) return kind;
  }
  return std::nullopt;
}

inline std::optional<SecondFiberAction> second_action_from_label(const std::string& label, int rk_pic) {
  for (const auto& a : second_fiber_actions(rk_pic)) {
    if (a.label() == label) return a;
  }
  return std::nullopt;
}

struct Candidate {
  ClassificationRow row;
  int second_rank = 0;
  int second_is_cycle = 0;
  int first_rank = 0;
};

}  // namespace detail

/// Loci of sigma and sigma^2 for a choice of actions on C and C'.
struct RowLoci {
  FixedLocusConfig sigma;
  SquareLocus sigma2;
  int k_sigma4 = 0;
  int num_elliptic_sigma4 = 0;
};

inline RowLoci assemble_loci(const EllipticAction& on_c, const SecondFiberAction& on_c_prime) {
  RowLoci loci;
  const FiberFixedData dc = elliptic_action_data(on_c);
  const FiberFixedData dp = on_c_prime.data();
  for (const auto* d : {&dc, &dp}) {
    d->add_to(loci.sigma);
    d->add_to(loci.sigma2);
    loci.k_sigma4 += d->k_sigma4;
    loci.num_elliptic_sigma4 += d->elliptic_fixed[2] ? 1 : 0;
  }
  return loci;
}

/// Every (skeleton, action on C, action on C') surviving the exact
/// constraints, sorted in table order and numbered from 1.
inline std::vector<ClassificationRow> enumerate_cases() {
  std::vector<detail::Candidate> found;
  for (const auto& sk : sigma4_skeletons()) {
    const int m1 = (22 - sk.rk_pic) / 4;
    // At rank 10 sigma acts with order four on C' only.
    const bool c_order_four = sk.rk_pic != 10;
    for (const auto& c_prime : detail::second_fiber_actions(sk.rk_pic)) {
      for (const auto& c : detail::all_elliptic_actions(c_order_four)) {
        const RowLoci loci = assemble_loci(c, c_prime);
        if (loci.k_sigma4 != sk.k_sigma4 || loci.num_elliptic_sigma4 != sk.num_elliptic) continue;
        const auto& cfg = loci.sigma;
        if (!satisfies_prop1(cfg.n2, cfg.n3, cfg.n4, cfg.alpha())) continue;
        if (!holo_total(cfg).matches || !holo_total(loci.sigma2).matches) continue;
        const int k_sigma2 = loci.sigma2.k();
        auto ranks = try_solve_ranks(m1, cfg.N(), cfg.alpha(), k_sigma2);
        if (!ranks || ranks->r < 1) continue;

        detail::Candidate cand;
        ClassificationRow& row = cand.row;
        row.r = ranks->r;
        row.l = ranks->l;
        row.m = ranks->m;
        row.k_sigma2 = k_sigma2;
        row.num_C = sk.num_elliptic;
        row.rk_pic = sk.rk_pic;
        row.k_sigma4 = sk.k_sigma4;
        row.N = cfg.N();
        row.n2 = cfg.n2;
        row.n3 = cfg.n3;
        row.n4 = cfg.n4;
        row.k = cfg.k();
        row.action = {elliptic_label(c.kind), c_prime.label()};
        cand.second_rank = detail::second_action_rank(c_prime);
        cand.second_is_cycle = c_prime.shape.kind == FiberShape::Kind::I_n ? 1 : 0;
        cand.first_rank = static_cast<int>(c.kind);
        found.push_back(std::move(cand));
      }
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(a.row.rk_pic, a.second_rank, a.second_is_cycle, a.first_rank) <
           std::tie(b.row.rk_pic, b.second_rank, b.second_is_cycle, b.first_rank);
  });
  std::vector<ClassificationRow> rows;
  for (auto& c : found) {
    c.row.index = static_cast<int>(rows.size()) + 1;
    rows.push_back(std::move(c.row));
  }
  return rows;
}

struct KNPic {
  int k = 0;
  int N = 0;
  int rk_pic = 0;
  friend bool operator==(const KNPic&, const KNPic&) = default;
};

/// Rows grouped by whether sigma, only sigma^2, or neither fixes an elliptic
/// curve pointwise; each group lists distinct (k, N, rk Pic) in row order.
inline std::array<std::vector<KNPic>, 3> theorem1_groups(const std::vector<ClassificationRow>& rows) {
  std::array<std::vector<KNPic>, 3> groups;
  for (const auto& row : rows) {
    auto kind = detail::elliptic_kind_from_label(row.action.first);
    if (!kind) throw InvalidDatum("unknown action label: " + row.action.first);
    const auto fixed = elliptic_action_data(EllipticAction{*kind, 2, 0}).elliptic_fixed;
    const std::size_t g = fixed[0] ? 0 : fixed[1] ? 1 : 2;
    KNPic t{row.k, row.N, row.rk_pic};
    if (std::find(groups[g].begin(), groups[g].end(), t) == groups[g].end()) groups[g].push_back(t);
  }
  return groups;
}

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RowReport {
  int index = 0;
  std::vector<CheckItem> items;
  int sigma2_isolated = 0;
  int sigma2_rational = 0;

  bool all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
  }
};

/// Cross-checks a row against the fixed-point formulas. The sigma^2 locus is
/// recomputed from the action labels.
inline RowReport validate_row(const ClassificationRow& row) {
  RowReport rep;
  rep.index = row.index;
  const int alpha = row.k;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.items.push_back({std::move(name), pass, std::move(detail)});
  };

  add("point count", row.N == row.n2 + row.n3 + row.n4,
      "N=" + std::to_string(row.N) + ", n2+n3+n4=" + std::to_string(row.n2 + row.n3 + row.n4));
  add("holomorphic constraints", satisfies_prop1(row.n2, row.n3, row.n4, alpha),
      "n2+n3-4a=" + std::to_string(row.n2 + row.n3 - 4 * alpha) +
          ", n4+n2-n3-2a=" + std::to_string(row.n4 + row.n2 - row.n3 - 2 * alpha));
  add("topological check", row.N + 2 * alpha == row.r - row.l + 2,
      "N+2a=" + std::to_string(row.N + 2 * alpha) + ", r-l+2=" + std::to_string(row.r - row.l + 2));

  auto c_kind = detail::elliptic_kind_from_label(row.action.first);
  auto c_prime = detail::second_action_from_label(row.action.second, row.rk_pic);
  FixedLocusConfig cfg;
  for (int i = 0; i < row.k; ++i) cfg.curves.push_back({0, 1});
  if (c_kind == EllipticKind::identity) cfg.curves.push_back({1, 1});
  cfg.n2 = row.n2;
  cfg.n3 = row.n3;
  cfg.n4 = row.n4;
  HoloCheck h1 = holo_total(cfg);
  add("holomorphic exactness", h1.matches, "residual " + h1.residual.to_string());

  if (!c_kind || !c_prime) {
    add("action labels", false, "unrecognised labels");
  } else {
    const RowLoci loci = assemble_loci(EllipticAction{*c_kind, 2, 0}, *c_prime);
    rep.sigma2_isolated = loci.sigma2.isolated;
    rep.sigma2_rational = loci.sigma2.k();
    HoloCheck h2 = holo_total(loci.sigma2);
    add("square holomorphic exactness", h2.matches, "residual " + h2.residual.to_string());
    add("square rational curves", loci.sigma2.k() == row.k_sigma2,
        "computed " + std::to_string(loci.sigma2.k()) + ", row " + std::to_string(row.k_sigma2));
    add("square point count", loci.sigma2.isolated == 2 * row.k_sigma2 + 4,
        "N_sigma2=" + std::to_string(loci.sigma2.isolated) + ", 2k_sigma2+4=" + std::to_string(2 * row.k_sigma2 + 4));
  }
  add("square rank relation", 4 * row.k_sigma2 == (row.r + row.l) - 2 * row.m - 2,
      "4k_sigma2=" + std::to_string(4 * row.k_sigma2) + ", r+l-2m-2=" + std::to_string(row.r + row.l - 2 * row.m - 2));
  add("rank sum", (22 - row.rk_pic) % 4 == 0 && row.r + row.l + 2 * row.m + 4 * row.m1() == 22,
      "r+l+2m+4m1=" + std::to_string(row.r + row.l + 2 * row.m + 4 * row.m1()));
  return rep;
}

}  // namespace k3auto

#endif  // K3AUTO_CLASSIFIER_HPP
