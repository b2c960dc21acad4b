#ifndef K3AUTO_FAMILIES_HPP
#define K3AUTO_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3auto/classifier.hpp"
#include "k3auto/two_torsion.hpp"
#include "k3auto/weierstrass.hpp"

namespace k3auto {

/// Full analysis of a Weierstrass fibration under a diagonal automorphism.
struct AnalysisReport {
  WeierstrassFibration fibration;
  DiagonalAutomorphism automorphism;
  std::optional<TwoTorsionFibration> two_torsion;
  std::vector<FiberReport> fibers;
  std::map<std::string, int> inventory;
  int euler_sum = 0;
  int two_form_exponent = 0;
  std::vector<BaseFixedPlace> base_fixed;
  std::vector<InvariantFiberAction> actions;  // over 0, then infinity
  FixedLocusConfig fixed;
  std::optional<TranslationChecks> translation;
  std::optional<int> matched_row;
  std::string match_note;
  /// Euler sum, invariance, minimality and friends; any failure means the
  /// datum is not a valid input for the analysis.
  std::vector<CheckItem> invariants;

  bool invariants_ok() const {
    for (const auto& c : invariants) {
      if (!c.pass) return false;
    }
    return true;
  }
};

namespace detail {

inline FixedLocusConfig fixed_config(const std::vector<InvariantFiberAction>& actions) {
  FixedLocusConfig cfg;
  for (const auto& a : actions) a.data().add_to(cfg);
  return cfg;
}

}  // namespace detail

/// Row whose action labels and (n2, n3, n4, k) agree with the computed
/// actions on the fibers over 0 and infinity. C is the smooth fiber carrying
/// the first label; C' carries the second.
inline std::optional<int> match_row(const std::vector<InvariantFiberAction>& actions,
                                    const std::vector<ClassificationRow>& rows, std::string* note = nullptr) {
  auto say = [&](const std::string& s) {
    if (note) *note = s;
  };
  if (actions.size() != 2 || !actions[0].supported() || !actions[1].supported()) {
    say("unsupported action on an invariant fiber");
    return std::nullopt;
  }
  FixedLocusConfig cfg;
  try {
    cfg = detail::fixed_config(actions);
  } catch (const Error& e) {
    say(e.what());
    return std::nullopt;
  }
  std::optional<int> found;
  for (int first : {0, 1}) {
    const auto& c = actions[static_cast<std::size_t>(first)];
    const auto& cp = actions[static_cast<std::size_t>(1 - first)];
    if (!c.elliptic) continue;
    for (const auto& row : rows) {
      if (row.action.first != c.label || row.action.second != cp.label) continue;
      if (row.n2 != cfg.n2 || row.n3 != cfg.n3 || row.n4 != cfg.n4 || row.k != cfg.k()) {
        say("labels match row " + std::to_string(row.index) + " but the fixed points differ");
        continue;
      }
      if (found && *found != row.index) {
        say("ambiguous match");
        return std::nullopt;
      }
      found = row.index;
    }
  }
  if (found) {
    say("");
  } else if (!note || note->empty()) {
    say("no row with labels (" + actions[0].label + ", " + actions[1].label + ")");
  }
  return found;
}

inline AnalysisReport analyze(const WeierstrassFibration& f, const DiagonalAutomorphism& g,
                              const std::optional<TwoTorsionFibration>& two_torsion,
                              const std::vector<ClassificationRow>& rows) {
  AnalysisReport rep;
  rep.fibration = f;
  rep.automorphism = g.normalized();
  rep.two_torsion = two_torsion;
  auto check = [&](std::string name, bool pass, std::string detail) {
    rep.invariants.push_back({std::move(name), pass, std::move(detail)});
  };

  if (g.compose_translation && !two_torsion) {
    check("translation", false, "translation needs a fibration in two-torsion form");
    return rep;
  }
  try {
    rep.fibers = fiber_reports(f);
  } catch (const InvalidDatum& e) {
    check("minimality", false, e.what());
    return rep;
  }
  check("minimality", true, "all fibers minimal and in the Kodaira table");
  rep.inventory = fiber_inventory(rep.fibers);
  rep.euler_sum = euler_sum(rep.fibers);
  check("euler sum", rep.euler_sum == 24, "sum of v(Delta) = " + std::to_string(rep.euler_sum));

  const auto inv = check_invariance_report(f, rep.automorphism);
  std::string failures;
  for (const auto& s : inv.failures) failures += (failures.empty() ? "" : "; ") + s;
  check("invariance", inv.invariant, inv.invariant ? "coefficients scale correctly" : failures);

  rep.two_form_exponent = two_form_multiplier(rep.automorphism);
  check("two-form multiplier", rep.two_form_exponent == 1,
        "sigma^* omega = z^" + std::to_string(rep.two_form_exponent) + " omega");
  try {
    rep.base_fixed = base_fixed_fibers(rep.automorphism);
  } catch (const InvalidDatum& e) {
    check("base action", false, e.what());
    return rep;
  }
  check("base action", true, "order 8 on the base");

  if (two_torsion && g.compose_translation) {
    rep.translation = check_translation(*two_torsion, rep.automorphism);
    check("translation", rep.translation->all(), "tau^2 = id, section swap, sigma tau = tau sigma");
  }
  if (!rep.invariants_ok()) return rep;

  std::optional<RationalPolynomial> tx;
  if (two_torsion) tx = two_torsion->torsion_x();
  for (const auto& b : rep.base_fixed) rep.actions.push_back(fiber_action_at(f, rep.automorphism, b.place, tx));
  try {
    rep.fixed = detail::fixed_config(rep.actions);
  } catch (const Error&) {
  }
  rep.matched_row = match_row(rep.actions, rows, &rep.match_note);
  return rep;
}

inline AnalysisReport analyze(const TwoTorsionFibration& f, const DiagonalAutomorphism& g,
                              const std::vector<ClassificationRow>& rows) {
  return analyze(f.short_form(), g, f, rows);
}

// ---------------------------------------------------------------------------
// Example families

struct ExampleVariant {
  std::string name;
  DiagonalAutomorphism automorphism;
  std::optional<int> claimed_row;
  std::string note;
};

struct PaperExample {
  int id = 0;
  std::string degeneration;
  std::vector<Rational> params;
  std::vector<std::string> param_names;
  WeierstrassFibration fibration;
  std::optional<TwoTorsionFibration> two_torsion;
  std::vector<CheckItem> conditions;
  std::optional<std::map<std::string, int>> claimed_inventory;
  std::optional<std::string> claimed_fiber_at_infinity;
  std::vector<ExampleVariant> variants;
};

namespace detail {

inline RationalPolynomial tpow(const Rational& c, unsigned e) { return RationalPolynomial::monomial(c, e); }

inline std::vector<std::string> degenerations(int id) {
  switch (id) {
    case 1:
    case 2: return {"generic", "a0"};
    case 3: return {"generic", "i8", "i16"};
    case 4: return {"generic", "i8", "i16"};
    default: return {};
  }
}

inline std::vector<Rational> preset_params(int id, const std::string& deg) {
  auto R = [](long long v) { return Rational(v); };
  if (id == 1 || id == 2) {
    if (deg == "generic") return {R(1), R(2), R(3), R(5)};
    if (deg == "a0") return {R(0), R(1), R(1), R(1)};
  }
  if (id == 3) {
    if (deg == "generic") return {R(1), R(2), R(3), R(5)};
    if (deg == "i8") return {R(-3), R(1), R(1), R(2)};
    if (deg == "i16") return {R(-3), R(1), R(-1), R(2)};
  }
  if (id == 4) {
    if (deg == "generic") return {R(3), R(1), R(1)};
    if (deg == "i8") return {R(2), R(1), R(1)};
    if (deg == "i16") return {R(1), R(0), R(1)};
  }
  throw InvalidDatum("unknown degeneration '" + deg + "' for example " + std::to_string(id));
}

}  // namespace detail

inline bool example_supported(int id) { return id >= 1 && id <= 4; }

inline std::vector<std::string> example_degenerations(int id) { return detail::degenerations(id); }

/// Builds example `id` with the given parameters and checks that they satisfy
/// the conditions of the requested degeneration. Parameters are (a, b, c, d)
/// for examples 1 to 3 and (alpha, beta, gamma) for example 4.
inline PaperExample paper_example(int id, const std::string& degeneration, std::vector<Rational> params) {
  if (!example_supported(id)) throw InvalidDatum("example " + std::to_string(id) + " is not a supported Weierstrass example");
  const auto degs = detail::degenerations(id);
  if (std::find(degs.begin(), degs.end(), degeneration) == degs.end()) {
    throw InvalidDatum("unknown degeneration '" + degeneration + "' for example " + std::to_string(id));
  }
  const std::size_t want = id == 4 ? 3 : 4;
  if (params.size() != want) {
    throw InvalidDatum("example " + std::to_string(id) + " takes " + std::to_string(want) + " parameters");
  }
  PaperExample ex;
  ex.id = id;
  ex.degeneration = degeneration;
  ex.params = params;
  auto cond = [&](std::string name, bool pass) { ex.conditions.push_back({std::move(name), pass, ""}); };
  using detail::tpow;

  if (id == 1 || id == 2 || id == 3) {
    ex.param_names = {"a", "b", "c", "d"};
    const Rational &a = params[0], &b = params[1], &c = params[2], &d = params[3];
    RationalPolynomial at = tpow(a, 8) + tpow(b, 0);
    RationalPolynomial bt = id == 3 ? tpow(c, 4) + tpow(d, 12) : tpow(c, 8) + tpow(d, 0);
    if (at.is_zero() && bt.is_zero()) throw InvalidDatum("a(t) and b(t) vanish identically");
    ex.fibration = WeierstrassFibration::make(at, bt);
    const RationalPolynomial delta = ex.fibration.delta();
    const Rational h1 = id == 3 ? Rational(4) * a * a * a + Rational(27) * d * d : Rational(4) * a * a * a;
    const Rational h2 = id == 3 ? Rational(12) * a * a * b + Rational(54) * c * d
                                : Rational(12) * a * a * b + Rational(27) * c * c;
    const Rational h3 = id == 3 ? Rational(12) * a * b * b + Rational(27) * c * c : Rational(0);

    if (id != 3) {
      if (degeneration == "generic") {
        cond("h1 = 4a^3 != 0", !h1.is_zero());
        cond("gcd(Delta, Delta') constant", is_squarefree(delta));
        cond("Delta(0) != 0", !delta.coefficient(0).is_zero());
        ex.claimed_inventory = std::map<std::string, int>{{"I_1", 24}};
      } else {
        cond("a = 0", a.is_zero());
        cond("b != 0", !b.is_zero());
        cond("c != 0", !c.is_zero());
        cond("gcd(Delta, Delta') constant", is_squarefree(delta));
        cond("Delta(0) != 0", !delta.coefficient(0).is_zero());
        ex.claimed_fiber_at_infinity = "IV*";
      }
    } else {
      cond("Delta(0) = 4b^3 != 0", !b.is_zero());
      cond("gcd(Delta, Delta') constant", is_squarefree(delta));
      if (degeneration == "generic") {
        cond("h1 = 4a^3 + 27d^2 != 0", !h1.is_zero());
        ex.claimed_inventory = std::map<std::string, int>{{"I_1", 24}};
      } else if (degeneration == "i8") {
        cond("h1 = 0", h1.is_zero());
        cond("h2 = 12a^2b + 54cd != 0", !h2.is_zero());
        ex.claimed_fiber_at_infinity = "I_8";
        ex.claimed_inventory = std::map<std::string, int>{{"I_8", 1}, {"I_1", 16}};
      } else {
        cond("h1 = 0", h1.is_zero());
        cond("h2 = 0", h2.is_zero());
        cond("h3 = 12ab^2 + 27c^2 != 0", !h3.is_zero());
        ex.claimed_fiber_at_infinity = "I_16";
        ex.claimed_inventory = std::map<std::string, int>{{"I_16", 1}, {"I_1", 8}};
      }
    }

    if (id == 1) {
      ex.variants.push_back({"sigma", {0, 0, 1, false}, degeneration == "generic" ? 1 : 5, ""});
    } else if (id == 2) {
      ex.variants.push_back({"sigma^5", {0, 4, 5, false}, degeneration == "generic" ? 4 : 11,
                             "(x,-y,z t) multiplies omega by z^5; its fifth power multiplies it by z"});
    } else {
      std::optional<int> s_row, t_row;
      if (degeneration == "i8") s_row = 12, t_row = 10;
      if (degeneration == "i16") s_row = 16, t_row = 15;
      ex.variants.push_back({"sigma", {4, 2, 7, false}, s_row, ""});
      ex.variants.push_back({"tau", {4, 6, 3, false}, t_row, ""});
    }
  } else {
    ex.param_names = {"alpha", "beta", "gamma"};
    const Rational &al = params[0], &be = params[1], &ga = params[2];
    const Rational disc = al * al - Rational(4) * be;
    cond("gamma != 0", !ga.is_zero());
    if (degeneration == "generic") {
      cond("alpha != 0", !al.is_zero());
      cond("beta != 0", !be.is_zero());
      cond("alpha^2 - 4 beta != 0", !disc.is_zero());
      ex.claimed_inventory = std::map<std::string, int>{{"I_2", 8}, {"I_1", 8}};
    } else if (degeneration == "i8") {
      cond("alpha^2 - 4 beta = 0", disc.is_zero());
      cond("beta != 0", !be.is_zero());
      ex.claimed_fiber_at_infinity = "I_8";
    } else {
      cond("beta = 0", be.is_zero());
      cond("alpha != 0", !al.is_zero());
      ex.claimed_fiber_at_infinity = "I_16";
    }
    ex.two_torsion = TwoTorsionFibration::make(tpow(al, 4), tpow(be, 8) + tpow(ga, 0));
    ex.fibration = ex.two_torsion->short_form();
    const std::optional<int> row = degeneration == "generic" ? 2 : degeneration == "i8" ? 8 : 13;
    ex.variants.push_back({"sigma' = sigma tau", {4, 2, 7, true}, row, ""});
    ex.variants.push_back({"sigma", {4, 2, 7, false}, std::nullopt, ""});
  }

  std::string failed;
  for (const auto& c : ex.conditions) {
    if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
  }
  if (!failed.empty()) {
    throw InvalidDatum("parameters violate the conditions of degeneration '" + degeneration + "': " + failed);
  }
  return ex;
}

inline PaperExample paper_example(int id, const std::string& degeneration) {
  if (!example_supported(id)) throw InvalidDatum("example " + std::to_string(id) + " is not a supported Weierstrass example");
  return paper_example(id, degeneration, detail::preset_params(id, degeneration));
}

struct VariantResult {
  ExampleVariant variant;
  AnalysisReport analysis;
  std::vector<CheckItem> checks;
  std::optional<RowReport> row_report;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !row_report || row_report->all_pass();
  }
};

inline std::vector<VariantResult> verify_example(const PaperExample& ex, const std::vector<ClassificationRow>& rows) {
  std::vector<VariantResult> out;
  for (const auto& v : ex.variants) {
    VariantResult r;
    r.variant = v;
    r.analysis = analyze(ex.fibration, v.automorphism, ex.two_torsion, rows);
    auto add = [&](std::string name, bool pass, std::string detail) {
      r.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    for (const auto& c : r.analysis.invariants) add(c.name, c.pass, c.detail);
    if (ex.claimed_inventory) {
      std::string got;
      for (const auto& [k, n] : r.analysis.inventory) got += (got.empty() ? "" : ", ") + k + ":" + std::to_string(n);
      add("fiber inventory", r.analysis.inventory == *ex.claimed_inventory, "{" + got + "}");
    }
    if (ex.claimed_fiber_at_infinity && !r.analysis.fibers.empty()) {
      const auto& inf = r.analysis.fibers.back();
      add("fiber at infinity", inf.kodaira.name() == *ex.claimed_fiber_at_infinity,
          inf.kodaira.name() + " with (v_a, v_b, v_Delta) = (" + std::to_string(inf.v_a) + "," + std::to_string(inf.v_b) +
              "," + std::to_string(inf.v_delta) + ")");
    }
    const auto& m = r.analysis.matched_row;
    if (v.claimed_row) {
      add("matched row", m && *m == *v.claimed_row,
          "expected " + std::to_string(*v.claimed_row) + ", computed " + (m ? std::to_string(*m) : "none") +
              (r.analysis.match_note.empty() ? "" : " (" + r.analysis.match_note + ")"));
    } else {
      add("matched row", m.has_value(),
          "computed " + (m ? std::to_string(*m) : "none") +
              (r.analysis.match_note.empty() ? "" : " (" + r.analysis.match_note + ")"));
    }
    if (m) {
      const auto& row = rows[static_cast<std::size_t>(*m - 1)];
      r.row_report = validate_row(row);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace k3auto

#endif  // K3AUTO_FAMILIES_HPP
