#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreath/analysis.hpp"
#include "wreath/poly_distortion.hpp"
#include "wreath/reduction.hpp"

namespace wreath {

struct SweepRow {
  std::int64_t l = 0;
  std::int64_t g_budget = 0;  // the G-side length budget the row answers for
  mpz_class lower;
  mpq_class upper;  // < 0 when there is no upper bound (measured rows)
  bool exact = false;
  std::string kind;  // "exact", "bounds", "measured"
};

struct DistortionReport {
  std::string subject;
  std::vector<SweepRow> rows;  // sorted by l
  std::optional<SlopeFit> fit_lower;
  std::optional<SlopeFit> fit_upper;
  std::optional<int> predicted;
  std::string note;
};

enum class SweepQuantity { PolyDistortion, Delta };

struct SweepConfig {
  std::vector<std::int64_t> ls{4, 8, 16, 32, 64};
  mpq_class c = 1;
  /// Rows with l <= exact_max_l try the exact search first.
  std::int64_t exact_max_l = 8;
  SweepQuantity quantity = SweepQuantity::PolyDistortion;
  SolverOptions solver;
  /// For generator files: H-radius of the empirical BFS (0 disables it).
  std::int64_t measure_radius = 0;
};

/// Dyadic l from lo to hi inclusive.
std::vector<std::int64_t> dyadic_range(std::int64_t lo, std::int64_t hi);

DistortionReport sweep_exemplary(const ZPoly& h, const SweepConfig& cfg);

/// Brackets the value between the best SNF piece and the sum of all pieces (torsion-free A), or
/// measures empirically when A has torsion.
DistortionReport sweep_generator_file(const GeneratorFile& g, const SweepConfig& cfg);

struct Z2wrZ2Row {
  std::int64_t l = 0;
  std::int64_t g_length = 0;
  std::int64_t h_length = 0;  // exact when h_exact, else the lower bound 2 l^2
  bool h_exact = false;
};

/// The element f_l(x) f_l(y) (1 + x) a of Z_2 wr Z^2 with f_l = 1 + ... + x^(l-1),
/// measured in G and in H = <b, c, (1 + x) a>.
Z2wrZ2Row z2wrz2_row(std::int64_t l, std::size_t support_cap = 16);

/// What a sweep runs on: an exemplary polynomial or a generator file.
struct Subject {
  std::optional<ZPoly> poly;
  std::optional<GeneratorFile> generators;
};

/// {"poly": "1 - x"} or the generator-file keys ("k", "gens", ...).
Subject subject_from_json(const nlohmann::json& j);

/// Overrides fields of `base` from l_min, l_max, l_values, c, exact_max_l,
/// node_budget, quantity ("poly" or "delta") and measure_radius.
SweepConfig sweep_config_from_json(const nlohmann::json& j, SweepConfig base = {});

DistortionReport run_sweep(const Subject& s, const SweepConfig& cfg);

std::string to_csv(const DistortionReport& r);
nlohmann::json to_json(const DistortionReport& r);
std::string to_csv(const std::vector<Z2wrZ2Row>& rows);
nlohmann::json to_json(const std::vector<Z2wrZ2Row>& rows);

}  // namespace wreath
