// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "k3auto/k3auto.hpp"
#include "table_fixture.hpp"

using namespace k3auto;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

FixedLocusConfig config_of(const ClassificationRow& row) {
  FixedLocusConfig c;
  for (int i = 0; i < row.k; ++i) c.curves.push_back({0, 1});
  if (row.action.first == "identity") c.curves.push_back({1, 1});
  c.n2 = row.n2;
  c.n3 = row.n3;
  c.n4 = row.n4;
  return c;
}

Outcome table_reproduction(const std::vector<ClassificationRow>& rows) {
  Outcome o;
  const auto fix = fixture::table_rows();
  if (rows.size() != 16) o.fail("emitted " + std::to_string(rows.size()) + " rows");
  std::multiset<std::string> a, b;
  auto key = [](const ClassificationRow& r) {
    std::ostringstream s;
    s << r.r << ',' << r.l << ',' << r.m << ',' << r.k_sigma2 << ',' << r.num_C << ',' << r.rk_pic << ',' << r.k_sigma4
      << ',' << r.N << ',' << r.n2 << ',' << r.n3 << ',' << r.n4 << ',' << r.k << ',' << r.action.first << '|'
      << r.action.second;
    return s.str();
  };
  for (const auto& r : rows) a.insert(key(r));
  for (const auto& r : fix) b.insert(key(r));
  if (a != b) {
    for (const auto& k : a) {
      if (!b.count(k)) o.fail("unexpected row " + k);
    }
    for (const auto& k : b) {
      if (!a.count(k)) o.fail("missing row " + k);
    }
  }
  if (o.pass) o.detail = "16 rows equal to the transcribed table";
  return o;
}

Outcome groupings(const std::vector<ClassificationRow>& rows) {
  Outcome o;
  const auto got = theorem1_groups(rows);
  const auto want = fixture::theorem_groups();
  for (std::size_t g = 0; g < 3; ++g) {
    if (got[g] != want[g]) o.fail("group " + std::to_string(g + 1) + " differs");
  }
  if (o.pass) o.detail = "three (k, N, rk Pic) lists reproduced";
  return o;
}

Outcome rederivation() {
  Outcome o;
  const auto cs = derive_prop1_constraints();
  const IntegerMatrix expected{{1, 1, 0, -4, 2}, {1, -1, 1, -2, 2}};
  if (hermite_normal_form(constraint_matrix(cs)) != hermite_normal_form(expected)) o.fail("Hermite forms differ");
  std::string text;
  for (const auto& c : cs) text += (text.empty() ? "" : ", ") + c.to_string();
  o.detail = (o.pass ? "" : o.detail + "; ") + "derived {" + text + "}";
  return o;
}

Outcome lefschetz_closure(const std::vector<ClassificationRow>& rows) {
  Outcome o;
  const Cyc8 target = Cyc8(1) + zeta_pow(7);
  for (const auto& row : rows) {
    const auto h = holo_total(config_of(row));
    if (!h.matches || !(h.total == target)) o.fail("row " + std::to_string(row.index) + " residual " + h.residual.to_string());
    if (row.N + 2 * row.k != row.r - row.l + 2) o.fail("row " + std::to_string(row.index) + " topological check");
  }
  if (o.pass) o.detail = "zero residual and N + 2a = r - l + 2 on all rows";
  return o;
}

Outcome rank_solver(const std::vector<ClassificationRow>& rows) {
  Outcome o;
  for (const auto& row : rows) {
    const auto s = try_solve_ranks(row.m1(), row.N, row.k, row.k_sigma2);
    if (!s || !(*s == RankSolution{row.r, row.l, row.m})) o.fail("row " + std::to_string(row.index));
    if (4 * row.k_sigma2 != row.r + row.l - 2 * row.m - 2) o.fail("row " + std::to_string(row.index) + " square relation");
  }
  if (o.pass) o.detail = "(r, l, m) recovered and 4k_sigma2 = r + l - 2m - 2 on all rows";
  return o;
}

Outcome example_regression(const std::vector<ClassificationRow>& rows) {
  Outcome o;
  int checked = 0;
  for (int id = 1; id <= 4; ++id) {
    for (const auto& deg : example_degenerations(id)) {
      const auto ex = paper_example(id, deg);
      for (const auto& v : verify_example(ex, rows)) {
        if (!v.variant.claimed_row) continue;
        ++checked;
        const std::string tag = "example " + std::to_string(id) + " " + deg + " " + v.variant.name;
        for (const auto& c : v.checks) {
          if (!c.pass) o.fail(tag + ": " + c.name + " (" + c.detail + ")");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " claimed variants reproduced";
  return o;
}

Outcome local_types() {
  Outcome o;
  const auto ex = paper_example(3, "i16");
  auto check = [&](const DiagonalAutomorphism& g, int t, const std::string& name) {
    const auto pts = fixed_points_on_fiber(ex.fibration, g, Place::rational(0));
    int count = 0;
    for (const auto& p : pts) {
      count += p.count;
      if (p.type.t != t) o.fail(name + " has a point of type " + p.type.to_string());
    }
    if (count != 2) o.fail(name + " has " + std::to_string(count) + " fixed points");
  };
  check({4, 2, 7}, 2, "sigma");
  check({4, 6, 3}, 3, "tau");
  if (o.pass) o.detail = "sigma: 2 points of type (7,2); tau: 2 points of type (3,6)";
  return o;
}

Outcome structural() {
  Outcome o;
  int fibrations = 0;
  for (int id = 1; id <= 4; ++id) {
    for (const auto& deg : example_degenerations(id)) {
      const auto ex = paper_example(id, deg);
      ++fibrations;
      const int e = euler_sum(fiber_reports(ex.fibration));
      const std::string tag = "example " + std::to_string(id) + " " + deg;
      if (e != 24) o.fail(tag + " euler sum " + std::to_string(e));
      for (const auto& v : ex.variants) {
        if (two_form_multiplier(v.automorphism) != 1) o.fail(tag + " " + v.name + " multiplier");
      }
      if (ex.two_torsion) {
        const auto t = check_translation(*ex.two_torsion, {4, 2, 7});
        if (!t.involution) o.fail(tag + " tau^2 != id");
        if (!t.commutes) o.fail(tag + " sigma tau != tau sigma");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(fibrations) + " fibrations: euler sum 24, multiplier z, translation identities";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  auto rr = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  auto rc = [&] { return Cyc8(rr(), rr(), rr(), rr()); };
  int axioms = 0;
  for (int i = 0; i < 250; ++i) {
    const Cyc8 a = rc(), b = rc(), c = rc();
    bool ok = (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
    if (!a.is_zero()) ok = ok && a * a.inverse() == Cyc8(1);
    if (!ok) o.fail("field axiom failure");
    axioms += 5;
  }

  std::uniform_int_distribution<int> nroots(0, 4), mult(1, 3), rnum(-12, 12), rden(1, 5), nquad(0, 2), kq(1, 9);
  int profiles = 0;
  while (profiles < 100) {
    RationalPolynomial p(Rational(rden(rng)));
    const int nr = nroots(rng), nq = nquad(rng);
    for (int i = 0; i < nr; ++i) {
      p *= (RationalPolynomial::variable() - RationalPolynomial(Rational(BigInt(rnum(rng)), BigInt(rden(rng))))).pow(
          static_cast<unsigned>(mult(rng)));
    }
    for (int i = 0; i < nq; ++i) {
      p *= (RationalPolynomial::monomial(Rational(1), 2) + RationalPolynomial(Rational(kq(rng)))).pow(
          static_cast<unsigned>(mult(rng)));
    }
    if (p.degree() < 1) continue;
    int total = 0;
    for (const auto& pm : multiplicity_profile(p)) total += static_cast<int>(pm.multiplicity) * pm.place.degree();
    if (total != p.degree()) o.fail("profile of " + p.to_string());
    ++profiles;
  }

  int chains = 0;
  for (int t = 0; t < 8; ++t) {
    std::pair<int, int> start{t, mod8(1 - t)}, p = start;
    for (int i = 0; i < 8; ++i) p = chain_step(p);
    if (p != start) o.fail("chain from " + std::to_string(t));
    ++chains;
  }
  if (o.pass) {
    o.detail = std::to_string(axioms) + " field checks, " + std::to_string(profiles) + " profiles, " +
               std::to_string(chains) + " chain closures";
  }
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = enumerate_cases();
  const std::vector<std::pair<std::string, Outcome>> results{
      {"table reproduction", table_reproduction(rows)},
      {"grouping lists", groupings(rows)},
      {"symbolic re-derivation", rederivation()},
      {"exact Lefschetz closure", lefschetz_closure(rows)},
      {"rank solver", rank_solver(rows)},
      {"example regression", example_regression(rows)},
      {"local types", local_types()},
      {"structural invariants", structural()},
      {"property suites", property_suites()},
  };
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, o] = results[i];
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << name << ": " << o.detail << "\n";
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << ms << " ms\n";
  return all ? 0 : 1;
}
