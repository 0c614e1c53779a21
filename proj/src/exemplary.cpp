#include "wreath/exemplary.hpp"

#include <stdexcept>

#include "wreath/error.hpp"
#include "wreath/word_length.hpp"

namespace wreath {

namespace {

WreathGroupPtr z_wr_z() {
  static const WreathGroupPtr g = make_wreath_group(FgAbelianGroup::free(1), 1);
  return g;
}

}  // namespace

ExemplarySubgroup::ExemplarySubgroup(const ZLaurent& h) : group_(z_wr_z()) {
  if (h.is_zero()) throw std::invalid_argument("exemplary subgroup needs h != 0");
  auto n = normalize_poly(h);
  h_ = std::move(n.coeffs);
  shift_ = n.stripped_shift;
  sign_ = n.sign;
}

std::vector<WreathElement> ExemplarySubgroup::generators() const {
  return {WreathElement::generator(group_, {Generator::Kind::Active, 0, 1}),
          WreathElement::from_laurent(group_, {h_laurent()}, 0)};
}

std::string ExemplarySubgroup::to_string() const { return "exemplary(h = " + wreath::to_string(h_laurent()) + ")"; }

ExemplarySubgroup parse_exemplary(std::string_view text) {
  std::string s(text);
  auto open = s.find('(');
  if (s.find("exemplary") != std::string::npos) {
    auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw ParseError("expected 'exemplary(h = <poly>)', got '" + s + "'");
    }
    s = s.substr(open + 1, close - open - 1);
    auto eq = s.find('=');
    if (eq != std::string::npos) s = s.substr(eq + 1);
  }
  ZLaurent h = parse_zlaurent(s);
  if (h.is_zero()) throw ParseError("exemplary subgroup needs h != 0");
  return ExemplarySubgroup(h);
}

WreathElement embed(const ExemplarySubgroup& H, const SubgroupElementCoords& c) {
  return WreathElement::from_laurent(H.group(), {c.f * H.h_laurent()}, c.n);
}

std::optional<SubgroupElementCoords> exemplary_member(const ExemplarySubgroup& H, const WreathElement& u) {
  if (!(u.group() == *H.group())) throw std::invalid_argument("membership test expects an element of Z wr Z");
  auto f = lp_divide_exact(u.base_polynomial(0), H.h_laurent());
  if (!f) return std::nullopt;
  return SubgroupElementCoords{std::move(*f), u.translation()[0]};
}

std::int64_t exemplary_len(const ExemplarySubgroup& H, const SubgroupElementCoords& c) {
  return wr_len_closed(WreathElement::from_laurent(H.group(), {c.f}, c.n)).total;
}

DeltaResult delta_exact(const ExemplarySubgroup& H, std::int64_t l, SolveMode mode, const SolverOptions& opts) {
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  DeltaResult r;
  r.l = l;
  r.value = solve_max_norm(H.h(), l - H.degree(), l, mode, opts);
  return r;
}

nlohmann::json to_json(const SubgroupElementCoords& c) { return {{"f", to_json(c.f)}, {"n", c.n}}; }

}  // namespace wreath
