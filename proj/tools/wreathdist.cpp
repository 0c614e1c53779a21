// wreathdist: word lengths, distortion sweeps, exponents and self-checks for
// subgroups of wreath products A wr Z^d.
//
// Exit codes: 0 ok, 1 a verification failed, 2 bad input, 3 a resource cap
// was hit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "suites.hpp"
#include "wreath/error.hpp"
#include "wreath/exemplary.hpp"
#include "wreath/exponent.hpp"
#include "wreath/laurent_matrix.hpp"
#include "wreath/poly_distortion.hpp"
#include "wreath/reduction.hpp"
#include "wreath/sweep.hpp"
#include "wreath/word_length.hpp"

namespace {

using nlohmann::json;
using namespace wreath;

constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kCapHit = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    if (q <= 0) throw ParseError("c must be positive");
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

// --- length ---------------------------------------------------------------

struct LengthArgs {
  std::string group = "Z wr Z";
  std::string elem;
  std::size_t cap = 16;
  bool heuristic = false;
  bool as_json = false;
};

int cmd_length(const LengthArgs& a) {
  auto G = parse_wreath_group(a.group);
  WreathElement u = parse_wreath_element(G, a.elem);
  TraceOptions opts;
  opts.support_cap = a.cap;
  opts.allow_heuristic = a.heuristic;
  LengthBreakdown b = wr_length(u, opts);
  Word w = word_along(u, b.visit_order);
  if (a.as_json) {
    json order = json::array();
    for (const auto& p : b.visit_order) order.push_back(p);
    std::cout << json{{"element", to_string(u)},
                      {"total", b.total},
                      {"a_part", b.a_part},
                      {"trace_part", b.trace_part},
                      {"certified", b.certified},
                      {"visit_order", order},
                      {"word", format_word(*G, w)}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << "total " << b.total << " (a-part " << b.a_part << ", trace " << b.trace_part << ")"
            << (b.certified ? "" : " upper bound only") << '\n';
  std::cout << "word " << (w.empty() ? "(empty)" : format_word(*G, w)) << '\n';
  return 0;
}

// --- distortion -------------------------------------------------------------

struct DistortionArgs {
  std::string poly;
  std::int64_t l = 4;
  std::string c = "1";
  bool bounds = false;
  bool delta = false;
  std::uint64_t node_budget = 20'000'000;
};

int cmd_distortion(const DistortionArgs& a) {
  ExemplarySubgroup H = parse_exemplary(a.poly);
  if (a.l < 1) throw ParseError("l must be at least 1");
  SolverOptions opts;
  opts.node_budget = a.node_budget;
  SolveMode mode = a.bounds ? SolveMode::Bounds : SolveMode::Exact;
  json out{{"subgroup", H.to_string()}, {"l", a.l}};
  if (a.delta) {
    DeltaResult d = delta_exact(H, a.l, mode, opts);
    out["quantity"] = "delta";
    out["value"] = to_json(d.value);
  } else {
    out["quantity"] = "poly";
    out["c"] = a.c;
    out["value"] = to_json(poly_distortion(H.h(), parse_rational(a.c), a.l, mode, opts));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

// --- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::string config, poly, gens_file;
  std::vector<std::int64_t> ls;
  std::int64_t l_min = 0, l_max = 0;
  std::string c, quantity;
  std::int64_t exact_max_l = -1;
  std::int64_t measure_radius = -1;
  std::uint64_t node_budget = 0;
  std::string csv_out, json_out;
  std::string format = "json";
};

int cmd_sweep(const SweepArgs& a) {
  Subject subject;
  SweepConfig cfg;
  int sources = !a.config.empty() + !a.poly.empty() + !a.gens_file.empty();
  if (sources != 1) throw ParseError("give exactly one of --config, --poly, --gens");
  if (!a.config.empty()) {
    json j = read_json_file(a.config);
    if (!j.contains("subject")) throw ParseError(a.config + ": missing \"subject\"");
    subject = subject_from_json(j.at("subject"));
    if (j.contains("sweep")) cfg = sweep_config_from_json(j.at("sweep"), cfg);
  } else if (!a.poly.empty()) {
    subject.poly = parse_exemplary(a.poly).h();
  } else {
    subject.generators = parse_generator_file(read_json_file(a.gens_file));
  }
  // flags override the file
  if (!a.ls.empty()) {
    cfg.ls = a.ls;
  } else if (a.l_min > 0 || a.l_max > 0) {
    cfg.ls = dyadic_range(a.l_min > 0 ? a.l_min : 4, a.l_max > 0 ? a.l_max : 64);
  }
  if (!a.c.empty()) cfg.c = parse_rational(a.c);
  if (!a.quantity.empty()) {
    if (a.quantity == "poly") {
      cfg.quantity = SweepQuantity::PolyDistortion;
    } else if (a.quantity == "delta") {
      cfg.quantity = SweepQuantity::Delta;
    } else {
      throw ParseError("quantity must be poly or delta");
    }
  }
  if (a.exact_max_l >= 0) cfg.exact_max_l = a.exact_max_l;
  if (a.measure_radius >= 0) cfg.measure_radius = a.measure_radius;
  if (a.node_budget > 0) cfg.solver.node_budget = a.node_budget;

  DistortionReport r = run_sweep(subject, cfg);
  const std::string csv = to_csv(r);
  const std::string js = to_json(r).dump(2) + "\n";
  if (!a.csv_out.empty()) write_file(a.csv_out, csv);
  if (!a.json_out.empty()) write_file(a.json_out, js);
  std::cout << (a.format == "csv" ? csv : js);
  return 0;
}

// --- z2wrz2 ---------------------------------------------------------------

int cmd_z2wrz2(std::int64_t l_max, std::size_t cap, const std::string& format) {
  if (l_max < 1) throw ParseError("--l-max must be at least 1");
  std::vector<Z2wrZ2Row> rows;
  for (std::int64_t l = 1; l <= l_max; ++l) rows.push_back(z2wrz2_row(l, cap));
  std::cout << (format == "csv" ? to_csv(rows) : to_json(rows).dump(2) + "\n");
  return 0;
}

// --- exponent / snf / reduce ----------------------------------------------

int cmd_exponent(const std::string& poly) {
  ExponentCertificate c = distortion_exponent(parse_zlaurent(poly));
  json out = to_json(c);
  out["h"] = poly;
  std::cout << out.dump(2) << '\n';
  return 0;
}

LaurentMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  LaurentMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!j[r][c].is_string()) throw ParseError("matrix entries must be polynomial strings");
      m(r, c) = parse_qlaurent(j[r][c].get<std::string>());
    }
  }
  return m;
}

int cmd_snf(const std::string& matrix_text) {
  json j;
  try {
    j = json::parse(matrix_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  SnfResult s = snf_laurent(matrix_from_json(j));
  json diag = json::array();
  for (const auto& d : s.diagonal) diag.push_back(to_string(d));
  std::cout << json{{"diagonal", diag}, {"U", to_json(s.U)}, {"V", to_json(s.V)}}.dump(2) << '\n';
  return 0;
}

int cmd_reduce(const std::string& path) {
  json j = read_json_file(path);
  if (j.contains("subject")) j = j.at("subject");
  std::cout << to_json(reduce_generator_file(parse_generator_file(j))).dump(2) << '\n';
  return 0;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(std::vector<std::string> names, std::uint64_t seed, bool as_json) {
  if (names.empty()) names = suites::suite_names();
  for (const auto& n : names) {
    if (!suites::has_suite(n)) {
      std::cerr << "unknown suite '" << n << "'; known:";
      for (const auto& k : suites::suite_names()) std::cerr << ' ' << k;
      std::cerr << '\n';
      return kBadInput;
    }
  }
  suites::SuiteOptions opts;
  opts.seed = seed;
  opts.subjects_dir = WREATH_SUBJECTS_DIR;
  bool all_ok = true;
  json out = json::array();
  for (const auto& n : names) {
    suites::SuiteResult r = suites::run_suite(n, opts);
    all_ok = all_ok && r.passed();
    if (as_json) {
      out.push_back(suites::to_json(r));
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << n << " (" << r.seconds << " s)\n";
    for (const auto& c : r.checks) {
      if (c.passed && names.size() > 1) continue;
      std::cout << "    " << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << " -- " << c.detail;
      std::cout << '\n';
    }
  }
  if (as_json) std::cout << out.dump(2) << '\n';
  return all_ok ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word lengths and subgroup distortion in wreath products A wr Z^d"};
  app.require_subcommand(1);

  LengthArgs la;
  auto* length = app.add_subcommand("length", "word length of an element with a geodesic word");
  length->add_option("--group", la.group, "e.g. \"Z2 wr Z^2\"")->capture_default_str();
  length->add_option("--elem", la.elem, "\"f(x)*a; t\" or \"{ (pos)->coeffs ; ... | t }\"")->required();
  length->add_option("--cap", la.cap, "support size limit for the exact trace")->capture_default_str();
  length->add_flag("--heuristic", la.heuristic, "past the cap, fall back to an upper bound");
  length->add_flag("--json", la.as_json);

  DistortionArgs da;
  auto* dist = app.add_subcommand("distortion", "one value of the distortion of <b, h a>");
  dist->add_option("--poly", da.poly, "h, e.g. \"1 - x\"")->required();
  dist->add_option("--l", da.l)->capture_default_str();
  dist->add_option("--c", da.c, "slack constant, rational")->capture_default_str();
  dist->add_flag("--bounds", da.bounds, "skip the exact search");
  dist->add_flag("--delta", da.delta, "subgroup distortion instead of the polynomial one");
  dist->add_option("--node-budget", da.node_budget)->capture_default_str();

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "distortion over a range of l with a slope fit");
  sweep->add_option("--config", sa.config, "JSON with \"subject\" and optional \"sweep\"");
  sweep->add_option("--poly", sa.poly, "exemplary subgroup <b, h a>");
  sweep->add_option("--gens", sa.gens_file, "generator file (JSON)");
  sweep->add_option("--l", sa.ls, "explicit l values");
  sweep->add_option("--l-min", sa.l_min);
  sweep->add_option("--l-max", sa.l_max);
  sweep->add_option("--c", sa.c);
  sweep->add_option("--quantity", sa.quantity, "poly or delta");
  sweep->add_option("--exact-max-l", sa.exact_max_l);
  sweep->add_option("--measure-radius", sa.measure_radius, "H-radius for empirical rows");
  sweep->add_option("--node-budget", sa.node_budget);
  sweep->add_option("--csv", sa.csv_out, "also write CSV here");
  sweep->add_option("--json", sa.json_out, "also write JSON here");
  sweep->add_option("--format", sa.format, "stdout format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::int64_t z_lmax = 6;
  std::size_t z_cap = 16;
  std::string z_format = "csv";
  auto* z2 = app.add_subcommand("z2wrz2", "G- and H-lengths of the planar lamplighter family");
  z2->add_option("--l-max", z_lmax)->capture_default_str();
  z2->add_option("--cap", z_cap, "H-side exact only when l^2 <= cap")->capture_default_str();
  z2->add_option("--format", z_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string e_poly;
  auto* expo = app.add_subcommand("exponent", "growth exponent of the polynomial distortion of h");
  expo->add_option("--poly", e_poly)->required();

  std::string s_matrix;
  auto* snf = app.add_subcommand("snf", "Smith normal form over Q[x, 1/x]");
  snf->add_option("--matrix", s_matrix, "JSON rows of polynomial strings")->required();

  std::string r_file;
  auto* reduce = app.add_subcommand("reduce", "predicted exponent for a generator file");
  reduce->add_option("file", r_file)->required();

  std::vector<std::string> v_names;
  std::uint64_t v_seed = 1;
  bool v_json = false;
  auto* verify = app.add_subcommand("verify", "run verification suites (all when none named)");
  verify->add_option("suites", v_names);
  verify->add_option("--seed", v_seed)->capture_default_str();
  verify->add_flag("--json", v_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*length) return cmd_length(la);
    if (*dist) return cmd_distortion(da);
    if (*sweep) return cmd_sweep(sa);
    if (*z2) return cmd_z2wrz2(z_lmax, z_cap, z_format);
    if (*expo) return cmd_exponent(e_poly);
    if (*snf) return cmd_snf(s_matrix);
    if (*reduce) return cmd_reduce(r_file);
    if (*verify) return cmd_verify(v_names, v_seed, v_json);
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCapHit;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return 0;
}
