// k3auto: classification table, fibration analysis, example verification and
// the holomorphic Lefschetz solver from the command line.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k3auto/json_io.hpp"
#include "k3auto/k3auto.hpp"

namespace {

using namespace k3auto;

enum class Format { table, json, csv };

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kInvariantFailure = 2;

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ParseError("unknown format '" + s + "' (table, json, csv)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------------------
// classify

const char* const kRowHeader = "r,l,m,k_sigma2,num_C,rk_pic,k_sigma4,N,n2,n3,n4,k,action";

int cmd_classify(const std::string& pic, Format fmt) {
  int filter = 0;
  if (pic == "10" || pic == "14" || pic == "18") {
    filter = std::stoi(pic);
  } else if (pic != "all") {
    std::cerr << "error: --pic must be one of 10, 14, 18, all\n";
    return kBadInput;
  }
  std::vector<ClassificationRow> rows;
  for (const auto& r : enumerate_cases()) {
    if (filter == 0 || r.rk_pic == filter) rows.push_back(r);
  }
  if (fmt == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(row_to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << kRowHeader << "\n";
    for (const auto& r : rows) {
      std::cout << r.r << ',' << r.l << ',' << r.m << ',' << r.k_sigma2 << ',' << r.num_C << ',' << r.rk_pic << ','
                << r.k_sigma4 << ',' << r.N << ',' << r.n2 << ',' << r.n3 << ',' << r.n4 << ',' << r.k << ','
                << csv_quote("(" + r.action.first + ", " + r.action.second + ")") << "\n";
    }
  } else {
    std::cout << std::left << std::setw(4) << "#";
    for (const char* h : {"r", "l", "m", "kS2", "#C", "rkPic", "kS4", "N", "n2", "n3", "n4", "k"}) {
      std::cout << std::setw(6) << h;
    }
    std::cout << "action\n";
    for (const auto& r : rows) {
      std::cout << std::setw(4) << r.index;
      for (int v : {r.r, r.l, r.m, r.k_sigma2, r.num_C, r.rk_pic, r.k_sigma4, r.N, r.n2, r.n3, r.n4, r.k}) {
        std::cout << std::setw(6) << v;
      }
      std::cout << "(" << r.action.first << ", " << r.action.second << ")\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// analyze

void print_analysis_table(const AnalysisReport& r) {
  std::cout << "a(t) = " << r.fibration.a.to_string("t") << "\n";
  std::cout << "b(t) = " << r.fibration.b.to_string("t") << "\n";
  if (r.two_torsion) {
    std::cout << "two-torsion form: a(t) = " << r.two_torsion->a.to_string("t")
              << ", b(t) = " << r.two_torsion->b.to_string("t") << "\n";
  }
  std::cout << "automorphism " << r.automorphism.to_string() << "\n";
  std::cout << "\nfibers\n";
  for (const auto& f : r.fibers) {
    std::cout << "  " << std::left << std::setw(28) << f.place.to_string() << " deg " << f.place.degree() << "  (v_a,v_b,v_D)=("
              << f.v_a << "," << f.v_b << "," << f.v_delta << ")  " << f.kodaira.name() << "\n";
  }
  std::cout << "inventory:";
  for (const auto& [k, n] : r.inventory) std::cout << " " << k << ":" << n;
  std::cout << "\neuler sum: " << r.euler_sum << "\n";
  std::cout << "two-form exponent: " << r.two_form_exponent << "\n";
  std::cout << "\ninvariant fibers\n";
  for (const auto& a : r.actions) {
    std::cout << "  " << a.place.to_string() << ": " << a.report.kodaira.name() << ", " << a.label;
    if (!a.note.empty()) std::cout << " [" << a.note << "]";
    std::cout << "\n";
    for (const auto& p : a.points) {
      std::cout << "    " << p.descriptor << " x" << p.count << "  exponents (" << p.tangent << "," << p.transverse
                << ") type " << p.type.to_string() << "\n";
    }
  }
  std::cout << "fixed locus: n2=" << r.fixed.n2 << " n3=" << r.fixed.n3 << " n4=" << r.fixed.n4 << " k=" << r.fixed.k()
            << "\n";
  std::cout << "matched row: " << (r.matched_row ? std::to_string(*r.matched_row) : "none");
  if (!r.match_note.empty()) std::cout << " (" << r.match_note << ")";
  std::cout << "\n\nchecks\n";
  for (const auto& c : r.invariants) std::cout << "  " << pass_word(c.pass) << "  " << c.name << ": " << c.detail << "\n";
}

int cmd_analyze(const std::string& fib_path, const std::string& aut_path, Format fmt) {
  FibrationInput in;
  DiagonalAutomorphism g;
  try {
    in = fibration_from_json(parse_json_text(read_file(fib_path)));
    g = automorphism_from_json(parse_json_text(read_file(aut_path)));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const auto rows = enumerate_cases();
  const AnalysisReport r = analyze(in.fibration, g, in.two_torsion, rows);
  if (fmt == Format::json) {
    std::cout << analysis_to_json(r).dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "place,kind,degree,v_a,v_b,v_delta,kodaira\n";
    for (const auto& f : r.fibers) {
      std::cout << csv_quote(f.place.to_string()) << ',' << f.place.kind_name() << ',' << f.place.degree() << ','
                << f.v_a << ',' << f.v_b << ',' << f.v_delta << ',' << f.kodaira.name() << "\n";
    }
  } else {
    print_analysis_table(r);
  }
  if (!r.invariants_ok()) {
    for (const auto& c : r.invariants) {
      if (!c.pass) std::cerr << "invariant failed: " << c.name << ": " << c.detail << "\n";
    }
    return kInvariantFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// examples

std::vector<Rational> parse_params(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

int cmd_examples(int id, const std::string& preset, const std::string& params, const std::string& degeneration,
                 Format fmt) {
  if (!example_supported(id)) {
    std::cerr << "error: example " << id << " is not supported (ids 1-4 are Weierstrass examples)\n";
    return kBadInput;
  }
  PaperExample ex;
  try {
    if (!params.empty()) {
      ex = paper_example(id, degeneration.empty() ? "generic" : degeneration, parse_params(params));
    } else {
      ex = paper_example(id, preset.empty() ? "generic" : preset);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const auto rows = enumerate_cases();
  const auto results = verify_example(ex, rows);
  bool all = true;
  for (const auto& r : results) all = all && r.all_pass();

  if (fmt == Format::json) {
    Json j;
    j["id"] = ex.id;
    j["degeneration"] = ex.degeneration;
    Json ps = Json::object();
    for (std::size_t i = 0; i < ex.params.size(); ++i) ps[ex.param_names[i]] = ex.params[i].to_string();
    j["params"] = ps;
    j["conditions"] = checks_to_json(ex.conditions);
    Json vs = Json::array();
    for (const auto& r : results) {
      Json v;
      v["variant"] = r.variant.name;
      if (!r.variant.note.empty()) v["note"] = r.variant.note;
      v["claimed_row"] = r.variant.claimed_row ? Json(*r.variant.claimed_row) : Json(nullptr);
      v["analysis"] = analysis_to_json(r.analysis);
      v["checks"] = checks_to_json(r.checks);
      if (r.row_report) v["row_checks"] = checks_to_json(r.row_report->items);
      v["pass"] = r.all_pass();
      vs.push_back(v);
    }
    j["variants"] = vs;
    j["pass"] = all;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "variant,check,pass,detail\n";
    for (const auto& r : results) {
      auto line = [&](const CheckItem& c) {
        std::cout << csv_quote(r.variant.name) << ',' << csv_quote(c.name) << ',' << (c.pass ? "true" : "false") << ','
                  << csv_quote(c.detail) << "\n";
      };
      for (const auto& c : r.checks) line(c);
      if (r.row_report) {
        for (const auto& c : r.row_report->items) line(c);
      }
    }
  } else {
    std::cout << "Example " << ex.id << ", " << ex.degeneration << ":";
    for (std::size_t i = 0; i < ex.params.size(); ++i) std::cout << " " << ex.param_names[i] << "=" << ex.params[i];
    std::cout << "\n";
    for (const auto& c : ex.conditions) std::cout << "  condition " << c.name << ": " << pass_word(c.pass) << "\n";
    for (const auto& r : results) {
      std::cout << "\n" << r.variant.name << " " << r.analysis.automorphism.to_string() << "\n";
      if (!r.variant.note.empty()) std::cout << "  note: " << r.variant.note << "\n";
      for (const auto& a : r.analysis.actions) {
        std::cout << "  " << a.place.to_string() << ": " << a.report.kodaira.name() << ", " << a.label;
        for (const auto& p : a.points) std::cout << ", " << p.count << " x " << p.type.to_string();
        std::cout << "\n";
      }
      for (const auto& c : r.checks) std::cout << "  " << pass_word(c.pass) << "  " << c.name << ": " << c.detail << "\n";
      if (r.row_report) {
        for (const auto& c : r.row_report->items) {
          std::cout << "  " << pass_word(c.pass) << "  row " << r.row_report->index << " " << c.name << ": " << c.detail
                    << "\n";
        }
      }
    }
    std::cout << "\n" << (all ? "all checks pass" : "some checks FAIL") << "\n";
  }
  return all ? kOk : kInvariantFailure;
}

// ---------------------------------------------------------------------------
// lefschetz

int cmd_lefschetz(const std::string& path, Format fmt) {
  Json cfg;
  try {
    cfg = parse_json_text(read_file(path));
    if (!cfg.is_object()) throw ParseError("config must be an object");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const auto constraints = derive_prop1_constraints();
  try {
    auto get_int = [&](const char* key, int fallback) {
      if (!cfg.contains(key)) return fallback;
      if (!cfg.at(key).is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
      return cfg.at(key).get<int>();
    };
    const bool counts = cfg.contains("n2") || cfg.contains("n3") || cfg.contains("n4");
    if (counts) {
      FixedLocusConfig c;
      c.n2 = get_int("n2", 0);
      c.n3 = get_int("n3", 0);
      c.n4 = get_int("n4", 0);
      if (cfg.contains("curves")) {
        if (!cfg.at("curves").is_array()) throw ParseError("\"curves\" must be an array of genera");
        for (const auto& g : cfg.at("curves")) {
          if (!g.is_number_integer() || g.get<int>() < 0) throw ParseError("curve genus must be a non-negative integer");
          c.curves.push_back({g.get<int>(), 1});
        }
      } else {
        for (int i = 0; i < get_int("k", 0); ++i) c.curves.push_back({0, 1});
        for (int i = 0; i < get_int("elliptic", 0); ++i) c.curves.push_back({1, 1});
      }
      if (c.n2 < 0 || c.n3 < 0 || c.n4 < 0) throw ParseError("point counts must be non-negative");
      const HoloCheck h = holo_total(c);
      bool all = h.matches;
      if (fmt == Format::json) {
        Json j;
        j["n2"] = c.n2;
        j["n3"] = c.n3;
        j["n4"] = c.n4;
        j["alpha"] = c.alpha();
        Json cs = Json::array();
        for (const auto& lc : constraints) {
          const bool ok = lc.holds(c.n2, c.n3, c.n4, c.alpha());
          all = all && ok;
          cs.push_back({{"constraint", lc.to_string()}, {"value", lc.evaluate(c.n2, c.n3, c.n4, c.alpha())}, {"pass", ok}});
        }
        j["constraints"] = cs;
        j["holomorphic_total"] = h.total.to_string();
        j["residual"] = h.residual.to_string();
        j["pass"] = all;
        std::cout << j.dump(2) << "\n";
      } else if (fmt == Format::csv) {
        std::cout << "constraint,value,pass\n";
        for (const auto& lc : constraints) {
          const bool ok = lc.holds(c.n2, c.n3, c.n4, c.alpha());
          all = all && ok;
          std::cout << csv_quote(lc.to_string()) << ',' << lc.evaluate(c.n2, c.n3, c.n4, c.alpha()) << ','
                    << (ok ? "true" : "false") << "\n";
        }
        std::cout << csv_quote("residual = 0") << ',' << csv_quote(h.residual.to_string()) << ','
                  << (h.matches ? "true" : "false") << "\n";
      } else {
        std::cout << "(n2, n3, n4) = (" << c.n2 << ", " << c.n3 << ", " << c.n4 << "), alpha = " << c.alpha() << "\n";
        for (const auto& lc : constraints) {
          const bool ok = lc.holds(c.n2, c.n3, c.n4, c.alpha());
          all = all && ok;
          std::cout << "  " << pass_word(ok) << "  " << lc.to_string() << "   (lhs " << lc.evaluate(c.n2, c.n3, c.n4, c.alpha())
                    << ")\n";
        }
        std::cout << "  " << pass_word(h.matches) << "  holomorphic sum " << h.total.to_string() << ", residual "
                  << h.residual.to_string() << "\n";
      }
      return kOk;
    }
    if (!cfg.contains("alpha") && !cfg.contains("k")) throw ParseError("config needs point counts or \"alpha\"");
    const int alpha = cfg.contains("alpha") ? get_int("alpha", 0) : get_int("k", 0);
    const int max_points = get_int("max_points", 14);
    if (max_points < 0) throw ParseError("\"max_points\" must be non-negative");
    const auto sols = enumerate_point_counts(alpha, max_points);
    if (fmt == Format::json) {
      Json j;
      j["alpha"] = alpha;
      j["max_points"] = max_points;
      Json cs = Json::array();
      for (const auto& lc : constraints) cs.push_back(lc.to_string());
      j["constraints"] = cs;
      Json arr = Json::array();
      for (const auto& s : sols) arr.push_back({{"n2", s.n2}, {"n3", s.n3}, {"n4", s.n4}});
      j["solutions"] = arr;
      std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::csv) {
      std::cout << "n2,n3,n4\n";
      for (const auto& s : sols) std::cout << s.n2 << ',' << s.n3 << ',' << s.n4 << "\n";
    } else {
      std::cout << "alpha = " << alpha << ", N <= " << max_points << "\n";
      for (const auto& lc : constraints) std::cout << "  " << lc.to_string() << "\n";
      std::cout << sols.size() << " solutions\n";
      for (const auto& s : sols) std::cout << "  (" << s.n2 << ", " << s.n3 << ", " << s.n4 << ")\n";
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-8 non-symplectic automorphisms of elliptic K3 surfaces"};
  app.require_subcommand(1);

  std::string format;
  if (const char* env = std::getenv("K3AUTO_FORMAT")) format = env;
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", format, "table, json or csv (default $K3AUTO_FORMAT or table)"); };

  std::string pic = "all";
  auto* classify = app.add_subcommand("classify", "Print the classification table");
  classify->add_option("--pic", pic, "rank of Pic(X): 10, 14, 18 or all");
  add_format(classify);

  std::string fib_path, aut_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a Weierstrass fibration and a diagonal automorphism");
  analyze_cmd->add_option("--fibration", fib_path, "fibration JSON")->required();
  analyze_cmd->add_option("--automorphism", aut_path, "automorphism JSON")->required();
  add_format(analyze_cmd);

  int id = 0;
  std::string preset, params, degeneration;
  auto* examples = app.add_subcommand("examples", "Verify one of the worked examples");
  examples->add_option("--id", id, "example number (1-4)")->required();
  examples->add_option("--preset", preset, "generic, a0 (examples 1, 2), i8, i16 (examples 3, 4)");
  examples->add_option("--params", params, "comma separated rationals, e.g. 1,2,3,5");
  examples->add_option("--degeneration", degeneration, "degeneration checked for --params");
  add_format(examples);

  std::string config_path;
  auto* lefschetz = app.add_subcommand("lefschetz", "Check or solve the holomorphic Lefschetz constraints");
  lefschetz->add_option("--config", config_path, "config JSON")->required();
  add_format(lefschetz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  Format fmt = Format::table;
  try {
    if (!format.empty()) fmt = parse_format(format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(pic, fmt);
    if (analyze_cmd->parsed()) return cmd_analyze(fib_path, aut_path, fmt);
    if (examples->parsed()) {
      if (!preset.empty() && !params.empty()) {
        std::cerr << "error: use either --preset or --params\n";
        return kBadInput;
      }
      return cmd_examples(id, preset, params, degeneration, fmt);
    }
    if (lefschetz->parsed()) return cmd_lefschetz(config_path, fmt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
