#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreath/abelian.hpp"
#include "wreath/exponent.hpp"
#include "wreath/laurent_matrix.hpp"
#include "wreath/wreath_element.hpp"

namespace wreath {

/// An element of the base W of A wr Z: one Laurent polynomial per summand of A.
using BaseVector = std::vector<ZLaurent>;

/// Columns are the generators.
LaurentMatrix generator_matrix(std::size_t k, const std::vector<BaseVector>& gens);

struct ExponentPrediction {
  int exponent = 1;
  SnfResult snf;
  std::vector<ZLaurent> cleared_diagonal;  // integer associates of the SNF diagonal
  std::vector<ExponentCertificate> certificates;
};

/// Predicted m with distortion ~ l^m for <b, w_1, ..., w_s> in Z^k wr Z.
/// Throws std::invalid_argument when every generator is zero.
ExponentPrediction predict_exponent(std::size_t k, const std::vector<BaseVector>& gens);
int predicted_exponent(std::size_t k, const std::vector<BaseVector>& gens);

struct ShiftGenInput {
  BaseVector w0;
  std::int64_t t = 0;
};

struct ShiftGenReduction {
  FgAbelianGroup base;  // A^|t|
  std::int64_t block = 1;  // |t|
  /// The images of w_1..w_s; the image of w_0 b^t is the new b.
  std::vector<BaseVector> gens;
};

/// Rewrites <w_0 b^t, w_1, ..., w_s> <= A wr Z as <b, w_1', ..., w_s'> <= A^|t| wr Z.
/// Position i = q |t| + r moves to position q of block r. Throws
/// std::invalid_argument for t = 0.
ShiftGenReduction shift_gen_reduction(const FgAbelianGroup& A, const ShiftGenInput& shift_gen,
                                      const std::vector<BaseVector>& others);

/// {"k": int, "torsion": [n, ...]?, "gens": [[poly, ...], ...],
///  "shift_gen": {"w0": [poly, ...], "t": int} | null}
struct GeneratorFile {
  FgAbelianGroup base{1, {}};
  std::vector<BaseVector> gens;
  std::optional<ShiftGenInput> shift_gen;
};

GeneratorFile parse_generator_file(const nlohmann::json& j);
nlohmann::json to_json(const GeneratorFile& g);

/// What the reduction pipeline can say about a generator file.
struct ReductionReport {
  std::string status;  // "predicted", "undistorted-expected", "empirical-only", "abelian"
  std::optional<int> predicted;
  std::optional<ShiftGenReduction> reduced;
  std::optional<ExponentPrediction> prediction;
  std::string note;
};

ReductionReport reduce_generator_file(const GeneratorFile& g);
nlohmann::json to_json(const ReductionReport& r);

/// Elements of A wr Z generating the subgroup described by the file: b (or
/// w_0 b^t) followed by the base generators.
std::vector<WreathElement> subgroup_generators(const WreathGroupPtr& group, const GeneratorFile& g);

}  // namespace wreath
