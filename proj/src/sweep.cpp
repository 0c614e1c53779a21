#include "wreath/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wreath/error.hpp"
#include "wreath/exemplary.hpp"
#include "wreath/word_length.hpp"

namespace wreath {

namespace {

struct PieceValue {
  mpz_class lower;
  mpq_class upper;
  bool exact = false;
};

PieceValue piece_value(const ZPoly& h, std::int64_t l, const SweepConfig& cfg) {
  const SolveMode mode = l <= cfg.exact_max_l ? SolveMode::Exact : SolveMode::Bounds;
  DistortionValue v;
  if (cfg.quantity == SweepQuantity::Delta) {
    v = delta_exact(ExemplarySubgroup(ZLaurent::from_coeffs(0, h)), l, mode, cfg.solver).value;
  } else {
    v = poly_distortion(h, cfg.c, l, mode, cfg.solver);
  }
  return {v.lower, v.upper, v.exact};
}

void fit_rows(DistortionReport& r) {
  std::vector<std::pair<double, double>> lo, up;
  for (const auto& row : r.rows) {
    if (row.lower > 0) lo.emplace_back(static_cast<double>(row.l), row.lower.get_d());
    if (row.upper > 0) up.emplace_back(static_cast<double>(row.l), row.upper.get_d());
  }
  auto try_fit = [](const std::vector<std::pair<double, double>>& pts) -> std::optional<SlopeFit> {
    try {
      return fit_slope(pts);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };
  r.fit_lower = try_fit(lo);
  r.fit_upper = try_fit(up);
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << x;
  return os.str();
}

nlohmann::json fit_json(const std::optional<SlopeFit>& f) {
  if (!f) return nullptr;
  return {{"slope", fmt_double(f->slope)},
          {"rational", f->rational},
          {"last_doubling", std::isnan(f->last_doubling) ? nlohmann::json(nullptr) : nlohmann::json(fmt_double(f->last_doubling))},
          {"last_ratio", std::isnan(f->last_ratio) ? nlohmann::json(nullptr) : nlohmann::json(fmt_double(f->last_ratio))}};
}

std::string upper_text(const mpq_class& q) { return q < 0 ? std::string() : q.get_str(); }

}  // namespace

std::vector<std::int64_t> dyadic_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("l-range must satisfy 1 <= lo <= hi");
  std::vector<std::int64_t> out;
  for (std::int64_t l = lo; l <= hi; l *= 2) out.push_back(l);
  return out;
}

DistortionReport sweep_exemplary(const ZPoly& h, const SweepConfig& cfg) {
  if (cfg.ls.empty()) throw std::invalid_argument("empty l-range");
  DistortionReport r;
  r.subject = "exemplary(h = " + to_string(ZLaurent::from_coeffs(0, h)) + ")";
  r.predicted = distortion_exponent(h).exponent;
  std::vector<std::int64_t> ls = cfg.ls;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  for (std::int64_t l : ls) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    PieceValue v = piece_value(h, l, cfg);
    r.rows.push_back({l, l, v.lower, v.upper, v.exact, v.exact ? "exact" : "bounds"});
  }
  r.note = cfg.quantity == SweepQuantity::Delta ? "delta" : "poly-distortion c=" + cfg.c.get_str();
  fit_rows(r);
  return r;
}

DistortionReport sweep_generator_file(const GeneratorFile& g, const SweepConfig& cfg) {
  DistortionReport r;
  r.subject = "subgroup-with-b of " + g.base.to_string() + " wr Z, " + std::to_string(g.gens.size()) + " base generators";
  ReductionReport red = reduce_generator_file(g);
  r.predicted = red.predicted;
  r.note = red.status;
  if (!red.note.empty()) r.note += ": " + red.note;
  std::vector<std::int64_t> ls = cfg.ls;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

  if (red.prediction) {
    // the subgroup is equivalent to a direct sum of exemplary pieces, one per
    // nonzero SNF diagonal entry. A length budget l is shared between the
    // pieces, so the value lies between the best single piece and the sum.
    std::vector<ZPoly> pieces;
    for (const auto& d : red.prediction->cleared_diagonal) {
      if (!d.is_zero()) pieces.push_back(d.dense());
    }
    for (std::int64_t l : ls) {
      SweepRow row{l, l, 0, 0, pieces.size() == 1, ""};
      for (const ZPoly& p : pieces) {
        PieceValue v = piece_value(p, l, cfg);
        if (v.lower > row.lower) row.lower = v.lower;
        row.upper += v.upper;
        row.exact = row.exact && v.exact;
      }
      row.kind = row.exact ? "exact" : "bounds";
      r.rows.push_back(row);
    }
  } else if (red.status == "abelian" || (red.status == "predicted" && red.predicted == 1)) {
    for (std::int64_t l : ls) r.rows.push_back({l, l, l, mpq_class(l), true, "exact"});
  }

  if (cfg.measure_radius > 0) {
    auto group = make_wreath_group(g.base, 1);
    auto measured = measure_subgroup_distortion(group, subgroup_generators(group, g), cfg.measure_radius);
    // a row that reached the radius is cut off by the ball and says nothing
    for (const auto& [l, v] : measured) {
      if (v < cfg.measure_radius) r.rows.push_back({l, l, v, mpq_class(-1), false, "measured"});
    }
    std::stable_sort(r.rows.begin(), r.rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.l < b.l; });
  }
  fit_rows(r);
  return r;
}

Z2wrZ2Row z2wrz2_row(std::int64_t l, std::size_t support_cap) {
  if (l < 1) throw std::invalid_argument("l must be positive");
  auto G = make_wreath_group(FgAbelianGroup::cyclic(2), 2);
  const AElement one = G->base().element({1});
  // f_l(x) (1 + x) = 1 + x^l over F_2
  WreathElement::Support g_support;
  for (std::int64_t j = 0; j < l; ++j) {
    g_support.emplace(Point{0, j}, one);
    g_support.emplace(Point{l, j}, one);
  }
  Z2wrZ2Row row;
  row.l = l;
  TraceOptions opts;
  opts.support_cap = support_cap;
  row.g_length = wr_len_trace(WreathElement(G, std::move(g_support), Point{0, 0}), opts).total;
  // (1 + x) a -> a identifies H with Z_2 wr Z^2; the image is the l x l grid
  const std::int64_t grid = l * l;
  if (static_cast<std::size_t>(grid) <= support_cap) {
    WreathElement::Support h_support;
    for (std::int64_t i = 0; i < l; ++i) {
      for (std::int64_t j = 0; j < l; ++j) h_support.emplace(Point{i, j}, one);
    }
    row.h_length = wr_len_trace(WreathElement(G, std::move(h_support), Point{0, 0}), opts).total;
    row.h_exact = true;
  } else {
    // l^2 lamp letters, and a closed walk from the origin through l^2 points
    row.h_length = 2 * grid;
  }
  return row;
}

Subject subject_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("subject must be a JSON object");
  Subject s;
  if (j.contains("poly")) {
    if (!j.at("poly").is_string()) throw ParseError("subject poly must be a string");
    s.poly = parse_exemplary(j.at("poly").get<std::string>()).h();
  } else {
    s.generators = parse_generator_file(j);
  }
  return s;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j, SweepConfig base) {
  try {
    if (j.contains("l_values")) {
      base.ls = j.at("l_values").get<std::vector<std::int64_t>>();
    } else if (j.contains("l_min") || j.contains("l_max")) {
      base.ls = dyadic_range(j.value("l_min", std::int64_t{4}), j.value("l_max", std::int64_t{64}));
    }
    if (j.contains("c")) base.c = mpq_class(j.at("c").get<std::string>());
    base.c.canonicalize();
    if (j.contains("exact_max_l")) base.exact_max_l = j.at("exact_max_l").get<std::int64_t>();
    if (j.contains("node_budget")) base.solver.node_budget = j.at("node_budget").get<std::uint64_t>();
    if (j.contains("measure_radius")) base.measure_radius = j.at("measure_radius").get<std::int64_t>();
    if (j.contains("quantity")) {
      const auto q = j.at("quantity").get<std::string>();
      if (q == "poly") {
        base.quantity = SweepQuantity::PolyDistortion;
      } else if (q == "delta") {
        base.quantity = SweepQuantity::Delta;
      } else {
        throw ParseError("quantity must be \"poly\" or \"delta\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  }
  if (base.c <= 0) throw ParseError("c must be positive");
  if (base.ls.empty()) throw ParseError("empty l-range");
  for (auto l : base.ls) {
    if (l < 1) throw ParseError("l values must be positive");
  }
  if (base.measure_radius < 0) throw ParseError("measure_radius must be nonnegative");
  return base;
}

DistortionReport run_sweep(const Subject& s, const SweepConfig& cfg) {
  if (s.poly) return sweep_exemplary(*s.poly, cfg);
  if (s.generators) return sweep_generator_file(*s.generators, cfg);
  throw std::invalid_argument("empty subject");
}

std::string to_csv(const DistortionReport& r) {
  std::ostringstream os;
  os << "l,g_budget,lower,upper,exact,kind\n";
  for (const auto& row : r.rows) {
    os << row.l << ',' << row.g_budget << ',' << row.lower.get_str() << ',' << upper_text(row.upper) << ','
       << (row.exact ? 1 : 0) << ',' << row.kind << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const DistortionReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"l", row.l},
                    {"g_budget", row.g_budget},
                    {"lower", row.lower.get_str()},
                    {"upper", row.upper < 0 ? nlohmann::json(nullptr) : nlohmann::json(row.upper.get_str())},
                    {"exact", row.exact},
                    {"kind", row.kind}});
  }
  return {{"subject", r.subject},
          {"note", r.note},
          {"rows", rows},
          {"fitted_slope_lower", fit_json(r.fit_lower)},
          {"fitted_slope_upper", fit_json(r.fit_upper)},
          {"predicted_exponent", r.predicted ? nlohmann::json(*r.predicted) : nlohmann::json(nullptr)}};
}

std::string to_csv(const std::vector<Z2wrZ2Row>& rows) {
  std::ostringstream os;
  os << "l,g_length,h_length,h_exact,ratio\n";
  for (const auto& r : rows) {
    os << r.l << ',' << r.g_length << ',' << r.h_length << ',' << (r.h_exact ? 1 : 0) << ','
       << fmt_double(static_cast<double>(r.h_length) / static_cast<double>(r.g_length)) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const std::vector<Z2wrZ2Row>& rows) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows) {
    a.push_back({{"l", r.l}, {"g_length", r.g_length}, {"h_length", r.h_length}, {"h_exact", r.h_exact},
                 {"h_bound", r.h_exact ? "exact" : "lower"}});
  }
  return a;
}

}  // namespace wreath
