// Command-line front end: word reduction, coordinate evaluation, verification
// suites, and deterministic samplers with JSON input/output.
//
// Exit codes: 0 success, 1 malformed input, 2 failed check or oracle
// mismatch, 3 non-unimodular matrix.
#include <array>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sl3cv/io.hpp"
#include "sl3cv/sampling.hpp"
#include "sl3cv/symmetry.hpp"

using namespace sl3cv;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kCheckFailed = 2;
constexpr int kNotUnimodular = 3;

struct GlobalOpts {
  std::uint64_t seed = 42;
  int trials = 100;
  double tolerance = 1e-9;
  bool json_out = false;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON: ") + e.what());
  }
}

std::string approx_str(std::complex<double> z) {
  std::ostringstream ss;
  ss << z.real();
  if (z.imag() != 0.0) ss << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return ss.str();
}

// ------------------------------------------------------------------ reduce
int cmd_reduce(const GlobalOpts& g, const std::string& word_text, int check_pairs,
               bool with_trace) {
  Word w = Word::parse(word_text);
  TraceRewriter rw;
  RewriteTrace tr;
  CoordPolynomial p = rw.reduce(w, with_trace ? &tr : nullptr);

  int mismatches = 0;
  for (int k = 0; k < check_pairs; ++k) {
    SL3Pair pair = sample_pair_generic(derive_seed(g.seed, 10, k), 4);
    if (p.eval(chi(pair).t) != trace(evaluate_word(w, pair))) ++mismatches;
  }

  if (g.json_out) {
    json out{{"word", w.str()}, {"polynomial", p.str()}};
    if (check_pairs > 0)
      out["check"] = json{{"pairs", check_pairs}, {"mismatches", mismatches}};
    if (with_trace) out["trace"] = trace_to_json(tr);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << p.str() << "\n";
    if (check_pairs > 0)
      std::cout << (mismatches == 0
                        ? "oracle: all " + std::to_string(check_pairs) + " pairs match"
                        : "oracle: " + std::to_string(mismatches) + " of " +
                              std::to_string(check_pairs) + " pairs MISMATCH")
                << "\n";
    if (with_trace)  // one JSON object per derivation step, on stderr
      for (const auto& s : tr.steps) std::cerr << step_to_json(s).dump() << "\n";
  }
  return mismatches == 0 ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ chi
int cmd_chi(const GlobalOpts& g, const std::string& file, bool with_residual) {
  SL3Pair p = pair_from_json(parse_json(slurp(file)));
  CharPoint pt = chi(p);
  if (g.json_out) {
    json out = point_to_json(pt);
    if (with_residual) out["residual"] = to_string(surface_residual(pt));
    std::cout << out.dump() << "\n";
  } else {
    for (int i = 0; i < 9; ++i)
      std::cout << "t(" << kVarTags[i] << ") = " << to_string(pt.t[i]) << "\n";
    if (with_residual)
      std::cout << "residual = " << to_string(surface_residual(pt)) << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ check-surface
int cmd_check_surface(const GlobalOpts& g, const std::string& file) {
  json j = parse_json(slurp(file));
  bool exact = true;
  ExactComplex er;
  try {
    er = surface_residual(point_from_json(j));
  } catch (const std::invalid_argument&) {
    exact = false;  // float entries: fall back to the approximate path
  }
  bool on_surface;
  std::string shown;
  if (exact) {
    on_surface = er.is_zero();
    shown = to_string(er);
  } else {
    std::complex<double> r = surface_residual(approx_point_from_json(j));
    on_surface = std::abs(r) <= g.tolerance;
    shown = approx_str(r);
  }
  if (g.json_out) {
    std::cout << json{{"residual", shown}, {"exact", exact}, {"on_surface", on_surface}}.dump()
              << "\n";
  } else {
    std::cout << "residual = " << shown << "\n"
              << "on surface: " << (on_surface ? "yes" : "no") << "\n";
  }
  return on_surface ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ fiber
int cmd_fiber(const GlobalOpts& g, const std::string& file) {
  json j = parse_json(slurp(file));
  if (!j.is_object()) throw std::invalid_argument("point JSON must be an object");
  std::array<std::complex<double>, 8> base;
  for (int i = 0; i < 8; ++i) {
    std::string key = coord_key(kVarTags[i]);
    if (!j.contains(key)) throw std::invalid_argument("point JSON missing key \"" + key + "\"");
    base[i] = approx_from_json(j[key]);
  }
  auto [r1, r2] = fiber_over(base);
  if (g.json_out) {
    std::cout << json{{"t5", json::array({approx_to_json(r1), approx_to_json(r2)})}}.dump()
              << "\n";
  } else {
    std::cout << "t5 = " << approx_str(r1) << "\n"
              << "t5 = " << approx_str(r2) << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ singular
int cmd_singular(const GlobalOpts& g, const std::string& file) {
  std::istringstream input(slurp(file));
  std::string line;
  int lineno = 0;
  while (std::getline(input, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_json(line);
    bool singular;
    if (j.is_object() && j.contains("A") && j.contains("B")) {
      singular = is_singular(chi(pair_from_json(j)));
    } else if (j.is_object() && j.contains("point")) {
      // family sample lines wrap an approximate point
      singular = is_singular(approx_point_from_json(j["point"]), g.tolerance);
    } else {
      try {
        singular = is_singular(point_from_json(j));
      } catch (const std::invalid_argument&) {
        singular = is_singular(approx_point_from_json(j), g.tolerance);
      }
    }
    if (g.json_out)
      std::cout << json{{"line", lineno}, {"singular", singular}}.dump() << "\n";
    else
      std::cout << (singular ? "singular" : "nonsingular") << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ symmetry
int cmd_symmetry(const GlobalOpts& g, std::string element, bool verify_structure,
                 const std::string& file) {
  if (verify_structure) {
    GroupReport rep = verify_group_structure();
    if (g.json_out) {
      std::cout << json{{"passed", rep.ok()}, {"failures", rep.failures}}.dump() << "\n";
    } else if (rep.ok()) {
      std::cout << "group structure: ok (8 elements, table, orders, P and Q fixed)\n";
    } else {
      for (const auto& f : rep.failures) std::cout << "FAIL: " << f << "\n";
    }
    return rep.ok() ? kOk : kCheckFailed;
  }
  if (element.empty())
    throw std::invalid_argument("symmetry needs --element <name> or --verify");
  if (element == "iota") element = "i";
  if (element == "tau") element = "t";
  const DihedralElement& e = dihedral_element(element);
  CharPoint pt = point_from_json(parse_json(slurp(file)));
  CharPoint out = act_on_point(e, pt);
  if (g.json_out) {
    std::cout << point_to_json(out).dump() << "\n";
  } else {
    for (int i = 0; i < 9; ++i)
      std::cout << "t(" << kVarTags[i] << ") = " << to_string(out.t[i]) << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ sample
int cmd_sample(const GlobalOpts& g, const std::string& family) {
  if (family == "branching") {
    SplitMix64 rng(derive_seed(g.seed, 30, 0));
    for (int i = 0; i < g.trials; ++i) {
      double a;
      do {
        a = static_cast<double>(rng.range(2, 9)) / static_cast<double>(rng.range(1, 3));
      } while (std::abs(a * a * a - 1.0) < 1e-6);
      double c = static_cast<double>(rng.range(1, 9)) / static_cast<double>(rng.range(1, 3));
      BranchingFamily bf = branching_family(a, c);
      ApproxCharPoint pt = chi(bf.A, bf.B);
      std::cout << json{{"a", a}, {"c", c}, {"point", point_to_json(pt)}}.dump() << "\n";
    }
    return kOk;
  }
  for (int i = 0; i < g.trials; ++i) {
    std::uint64_t s = derive_seed(g.seed, 20, i);
    SL3Pair p = family == "generic" ? sample_pair_generic(s)
                : family == "gl2"   ? sample_pair_gl2(s)
                : family == "diag"  ? sample_pair_diag(s)
                                    : sample_pair_sl2(s);
    std::cout << pair_to_json(p).dump() << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ verify
struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

void verify_identities_suite(const GlobalOpts& g, std::vector<SuiteResult>& out) {
  IdentityReport rep = identity_suite(derive_seed(g.seed, 41, 0), g.trials);
  for (const auto& it : rep.items)
    out.push_back({"identities/" + it.name, it.failures == 0,
                   it.failures == 0
                       ? std::to_string(it.trials) + " tuples"
                       : std::to_string(it.failures) + " of " + std::to_string(it.trials) +
                             " tuples failed"});
}

void verify_surface_suite(const GlobalOpts& g, std::vector<SuiteResult>& out) {
  int bad = -1;
  for (int s = 0; s < g.trials && bad < 0; ++s)
    if (!surface_residual(chi(sample_pair_generic(derive_seed(g.seed, 40, s)))).is_zero())
      bad = s;
  out.push_back({"surface/residual-vanishes", bad < 0,
                 bad < 0 ? std::to_string(g.trials) + " pairs"
                         : "counterexample at trial " + std::to_string(bad)});
}

void verify_lambda_suite(const GlobalOpts& g, std::vector<SuiteResult>& out) {
  int bad = -1;
  for (int s = 0; s < g.trials && bad < 0; ++s)
    if (!lambda_det(sample_pair_generic(derive_seed(g.seed, 42, s))).is_zero()) bad = s;
  out.push_back({"lambda/determinant-vanishes", bad < 0,
                 bad < 0 ? std::to_string(g.trials) + " pairs"
                         : "counterexample at trial " + std::to_string(bad)});
}

void verify_symmetry_suite(const GlobalOpts&, std::vector<SuiteResult>& out) {
  GroupReport rep = verify_group_structure();
  out.push_back({"symmetry/group-structure", rep.ok(),
                 rep.ok() ? "table, orders, relation, P and Q fixed" : rep.failures.front()});
}

void verify_singular_suite(const GlobalOpts& g, std::vector<SuiteResult>& out) {
  struct Fam {
    const char* name;
    SL3Pair (*draw)(std::uint64_t);
  };
  const Fam fams[3] = {
      {"gl2", sample_pair_gl2}, {"diag", sample_pair_diag}, {"sl2", sample_pair_sl2}};
  for (int f = 0; f < 3; ++f) {
    int bad = -1;
    for (int s = 0; s < g.trials && bad < 0; ++s)
      if (!is_singular(chi(fams[f].draw(derive_seed(g.seed, 43 + f, s))))) bad = s;
    out.push_back({std::string("singular/") + fams[f].name + "-vanishes", bad < 0,
                   bad < 0 ? std::to_string(g.trials) + " pairs"
                           : "counterexample at trial " + std::to_string(bad)});
  }
  int bad = -1;
  for (int s = 0; s < g.trials && bad < 0; ++s) {
    bool sing = is_singular(chi(sample_pair_generic(derive_seed(g.seed, 46, s))));
    if (sing)  // measure-zero hit: one fresh draw
      sing = is_singular(chi(sample_pair_generic(derive_seed(g.seed, 47, s))));
    if (sing) bad = s;
  }
  out.push_back({"singular/generic-nonvanishing", bad < 0,
                 bad < 0 ? std::to_string(g.trials) + " pairs"
                         : "counterexample at trial " + std::to_string(bad)});
}

void verify_grading_suite(const GlobalOpts&, std::vector<SuiteResult>& out) {
  TraceRewriter rw;
  std::string bad;
  long words = 0;
  auto walk = [&](auto&& self, const Word& w, int depth, int last_gen,
                  long last_sign) -> void {
    Bigrade want{static_cast<int>(((w.net_exponent(1) % 3) + 3) % 3),
                 static_cast<int>(((w.net_exponent(2) % 3) + 3) % 3)};
    auto got = rw.reduce(w).bigrade();
    if (bad.empty() && !(got.has_value() && *got == want)) bad = w.str();
    ++words;
    if (depth == 6) return;
    for (int gen = 1; gen <= 2; ++gen)
      for (long sign : {1L, -1L}) {
        if (gen == last_gen && sign == -last_sign) continue;
        Word next = w;
        next.append({gen, sign});
        self(self, next, depth + 1, gen, sign);
      }
  };
  walk(walk, Word(), 0, 0, 0);
  out.push_back({"grading/words-homogeneous", bad.empty(),
                 bad.empty() ? std::to_string(words) + " words of length <= 6"
                             : "counterexample " + bad});
  auto bp = polynomial_P().bigrade(), bq = polynomial_Q().bigrade();
  bool pq = bp.has_value() && *bp == Bigrade{0, 0} && bq.has_value() && *bq == Bigrade{0, 0};
  out.push_back({"grading/P-Q-trivial-bigrade", pq, pq ? "both (0,0)" : "inhomogeneous"});
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
  std::vector<SuiteResult> results;
  bool all = suite == "all";
  if (all || suite == "identities") verify_identities_suite(g, results);
  if (all || suite == "surface") verify_surface_suite(g, results);
  if (all || suite == "lambda") verify_lambda_suite(g, results);
  if (all || suite == "symmetry") verify_symmetry_suite(g, results);
  if (all || suite == "singular") verify_singular_suite(g, results);
  if (all || suite == "grading") verify_grading_suite(g, results);

  bool passed = true;
  for (const auto& r : results) passed = passed && r.passed;

  if (g.json_out) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    std::cout << json{{"suite", suite},
                      {"seed", g.seed},
                      {"trials", g.trials},
                      {"results", arr},
                      {"passed", passed}}
                     .dump()
              << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    std::cout << (passed ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return passed ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace coordinates for pairs of unimodular 3x3 matrices"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "master seed for all randomized commands")
      ->capture_default_str();
  app.add_option("--trials", g.trials, "sample count for randomized commands")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "float-path vanishing threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--json", g.json_out, "emit JSON instead of human-readable text");

  auto* reduce = app.add_subcommand("reduce", "rewrite tr(word) into the trace coordinates");
  std::string word_text;
  int check_pairs = 0;
  bool with_trace = false;
  reduce->add_option("word", word_text, "word in a, b, A, B with optional ^k and *")
      ->required();
  reduce->add_option("--check", check_pairs, "verify the result on N random matrix pairs")
      ->check(CLI::NonNegativeNumber);
  reduce->add_flag("--trace", with_trace, "emit the derivation steps");

  auto* chi_cmd = app.add_subcommand("chi", "evaluate the nine coordinates of a matrix pair");
  std::string chi_file = "-";
  bool with_residual = false;
  chi_cmd->add_option("pair", chi_file, "pair JSON file ('-' for stdin)");
  chi_cmd->add_flag("--residual", with_residual, "append the surface residual");

  auto* surf =
      app.add_subcommand("check-surface", "test whether a point satisfies the equation");
  std::string surf_file = "-";
  surf->add_option("point", surf_file, "point JSON file ('-' for stdin)");

  auto* fiber_cmd = app.add_subcommand("fiber", "the two t(5) values over a base point");
  std::string fiber_file = "-";
  fiber_cmd->add_option("point", fiber_file, "point JSON with the eight base coordinates");

  auto* sing = app.add_subcommand("singular", "classify streamed pairs or points");
  std::string sing_file = "-";
  sing->add_option("input", sing_file, "JSON-lines file ('-' for stdin)");

  auto* sym = app.add_subcommand("symmetry", "apply a symmetry to a point, or verify the group");
  std::string element;
  bool verify_structure = false;
  std::string sym_file = "-";
  sym->add_option("--element", element,
                  "one of id, i, t, it, ti, tit, iti, titi (aliases iota, tau)");
  sym->add_flag("--verify", verify_structure, "check the table, orders, and fixed polynomials");
  sym->add_option("point", sym_file, "point JSON file ('-' for stdin)");

  auto* sample = app.add_subcommand("sample", "emit deterministic pairs or family points");
  std::string family;
  sample->add_option("--family", family, "generic, gl2, diag, sl2, or branching")
      ->required()
      ->check(CLI::IsMember({"generic", "gl2", "diag", "sl2", "branching"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify
      ->add_option("--suite", suite,
                   "identities, surface, lambda, symmetry, singular, grading, or all")
      ->required()
      ->check(CLI::IsMember(
          {"identities", "surface", "lambda", "symmetry", "singular", "grading", "all"}));

  for (CLI::App* sc : {reduce, chi_cmd, surf, fiber_cmd, sing, sym, sample, verify})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*reduce) return cmd_reduce(g, word_text, check_pairs, with_trace);
    if (*chi_cmd) return cmd_chi(g, chi_file, with_residual);
    if (*surf) return cmd_check_surface(g, surf_file);
    if (*fiber_cmd) return cmd_fiber(g, fiber_file);
    if (*sing) return cmd_singular(g, sing_file);
    if (*sym) return cmd_symmetry(g, element, verify_structure, sym_file);
    if (*sample) return cmd_sample(g, family);
    if (*verify) return cmd_verify(g, suite);
  } catch (const NonUnimodularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotUnimodular;
  } catch (const OffSurfaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
