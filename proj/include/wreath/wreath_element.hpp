#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wreath/abelian.hpp"
#include "wreath/laurent.hpp"

namespace wreath {

/// A lattice point of Z^d.
using Point = std::vector<std::int64_t>;

/// G = A wr Z^d.
class WreathGroup {
 public:
  WreathGroup(FgAbelianGroup base, std::size_t dim);

  const FgAbelianGroup& base() const { return base_; }
  std::size_t dim() const { return dim_; }
  Point origin() const { return Point(dim_, 0); }

  /// "Z2 wr Z^2"
  std::string to_string() const;

  friend bool operator==(const WreathGroup&, const WreathGroup&) = default;

 private:
  FgAbelianGroup base_;
  std::size_t dim_;
};

using WreathGroupPtr = std::shared_ptr<const WreathGroup>;

WreathGroupPtr make_wreath_group(FgAbelianGroup base, std::size_t dim);
/// "A wr Z^d" with A in parse_abelian_group syntax, e.g. "Z2 wr Z^2".
WreathGroupPtr parse_wreath_group(std::string_view text);

/// A generator of A wr Z^d or its inverse: a standard generator of A placed
/// at the origin, or a unit translation along one axis of Z^d.
struct Generator {
  enum class Kind { Base, Active };
  Kind kind;
  std::size_t index;
  int sign;  // +1 or -1

  Generator inverse() const { return {kind, index, -sign}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

/// The symmetric generating set S u T u inverses, with duplicates removed
/// (an order-2 generator is its own inverse).
std::vector<Generator> standard_generators(const WreathGroup& group);

std::string generator_name(const WreathGroup& group, const Generator& g);
/// Space-separated, inverses written as "b^-1".
std::string format_word(const WreathGroup& group, const Word& word);

/// Element w*g of A wr Z^d: a finitely supported function Z^d -> A and a
/// translation g in Z^d. Multiplication follows
/// (w1 g1)(w2 g2) = (w1 (g1 o w2)) (g1 g2) with (g o w)(x) = w(x - g), so
/// b a b^-1 has support {1}.
class WreathElement {
 public:
  using Support = std::map<Point, AElement>;

  explicit WreathElement(WreathGroupPtr group);
  /// Identity values in `support` are dropped.
  WreathElement(WreathGroupPtr group, Support support, Point translation);

  static WreathElement generator(WreathGroupPtr group, const Generator& g);
  /// d = 1 only: (sum_i f_i(x) a_i) b^t, f_i indexed by A-summand.
  static WreathElement from_laurent(WreathGroupPtr group, const std::vector<ZLaurent>& coords,
                                    std::int64_t translation);

  const WreathGroup& group() const { return *group_; }
  const WreathGroupPtr& group_ptr() const { return group_; }
  const Support& support() const { return support_; }
  const Point& translation() const { return translation_; }
  bool is_identity() const;

  /// d = 1 only: the coefficient polynomial of summand i in the base part.
  ZLaurent base_polynomial(std::size_t summand) const;

  WreathElement inverse() const;

  /// Right multiplication by a generator, in place.
  void multiply_by(const Generator& g);

  std::size_t hash() const;

  friend bool operator==(const WreathElement& a, const WreathElement& b);

 private:
  WreathGroupPtr group_;
  Support support_;
  Point translation_;
};

struct WreathElementHash {
  std::size_t operator()(const WreathElement& e) const { return e.hash(); }
};

WreathElement wr_mul(const WreathElement& u, const WreathElement& v);
WreathElement wr_pow(const WreathElement& u, std::int64_t n);
WreathElement evaluate_word(const WreathGroupPtr& group, const Word& word);

/// Parses `wr(A; d) { (pos)->coeffs ; ... | t }`, the bare braces form, or for
/// d = 1 the shorthand `f(x)*a ; t` (several summands: `f(x)*a1 + g(x)*a2 ; t`).
WreathElement parse_wreath_element(const WreathGroupPtr& group, std::string_view text);

std::string to_string(const WreathElement& e);
nlohmann::json to_json(const WreathElement& e);
WreathElement wreath_element_from_json(const WreathGroupPtr& group, const nlohmann::json& j);

}  // namespace wreath
