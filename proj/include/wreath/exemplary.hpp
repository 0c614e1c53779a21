#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wreath/poly_distortion.hpp"
#include "wreath/wreath_element.hpp"

namespace wreath {

/// H = <b, h(x) a> inside Z wr Z. h is stored normalized: multiplied by the
/// unit sign * x^-shift so that it is a polynomial with h(0) > 0. This does
/// not change H.
class ExemplarySubgroup {
 public:
  explicit ExemplarySubgroup(const ZLaurent& h);

  const ZPoly& h() const { return h_; }
  ZLaurent h_laurent() const { return ZLaurent::from_coeffs(0, h_); }
  std::int64_t recorded_shift() const { return shift_; }
  int recorded_sign() const { return sign_; }
  std::int64_t degree() const { return static_cast<std::int64_t>(h_.size()) - 1; }

  const WreathGroupPtr& group() const { return group_; }
  /// {b, h a}
  std::vector<WreathElement> generators() const;

  std::string to_string() const;

 private:
  ZPoly h_;
  std::int64_t shift_ = 0;
  int sign_ = 1;
  WreathGroupPtr group_;
};

/// "exemplary(h = 1 - x)" or a bare polynomial.
ExemplarySubgroup parse_exemplary(std::string_view text);

/// g = (f h a) b^n.
struct SubgroupElementCoords {
  ZLaurent f;
  std::int64_t n = 0;
  friend bool operator==(const SubgroupElementCoords&, const SubgroupElementCoords&) = default;
};

WreathElement embed(const ExemplarySubgroup& H, const SubgroupElementCoords& c);

/// Coordinates of u in H, or nullopt if u is not in H. Throws
/// std::invalid_argument unless u lies in Z wr Z.
std::optional<SubgroupElementCoords> exemplary_member(const ExemplarySubgroup& H, const WreathElement& u);

/// Word length of g over {b, h a}: H is isomorphic to Z wr Z by f h a -> f a,
/// so this is the closed length of (f a) b^n.
std::int64_t exemplary_len(const ExemplarySubgroup& H, const SubgroupElementCoords& c);

struct DeltaResult {
  std::int64_t l = 0;
  DistortionValue value;  // witness is f; the witness element has n = 0
  SubgroupElementCoords witness() const { return {value.witness, 0}; }
};

/// max S(f) over f with S(f h) <= l and the hull of {0} and supp(f h) of
/// width <= l. Up to translation this is deg f <= l - deg h with S(h f) <= l.
DeltaResult delta_exact(const ExemplarySubgroup& H, std::int64_t l, SolveMode mode = SolveMode::Exact,
                        const SolverOptions& opts = {});

nlohmann::json to_json(const SubgroupElementCoords& c);

}  // namespace wreath
