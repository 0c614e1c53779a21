#include "wreath/wreath_element.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

namespace {

void require_same_group(const WreathElement& u, const WreathElement& v) {
  if (u.group_ptr() != v.group_ptr() && !(u.group() == v.group())) {
    throw std::invalid_argument("group mismatch: " + u.group().to_string() + " vs " + v.group().to_string());
  }
}

Point point_add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point point_sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline void hash_mix(std::size_t& seed, std::uint64_t v) {
  seed ^= static_cast<std::size_t>(v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::int64_t> parse_int_tuple(std::string_view raw, std::string_view context) {
  std::string s = strip(raw);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced tuple '" + s + "' in " + std::string(context));
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = strip(item);
    if (item.empty()) throw ParseError("empty coordinate in " + std::string(context));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in " + std::string(context));
    }
    if (used != item.size()) throw ParseError("bad integer '" + item + "' in " + std::string(context));
    out.push_back(v);
  }
  return out;
}

/// Index of the A-summand named by `name` ("a", "a1", "a_2"), or npos.
std::size_t base_symbol_index(const WreathGroup& g, std::string_view name) {
  if (name == "a") return g.base().rank() >= 1 ? 0 : std::string_view::npos;
  std::string_view digits = name.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  if (digits.empty()) return std::string_view::npos;
  std::size_t idx = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::string_view::npos;
    idx = idx * 10 + static_cast<std::size_t>(c - '0');
  }
  if (idx == 0 || idx > g.base().rank()) return std::string_view::npos;
  return idx - 1;
}

WreathElement parse_braced(const WreathGroupPtr& group, std::string_view body, std::string_view context) {
  // body: entries separated by ';', then '|' translation
  std::string b(body);
  auto bar = b.rfind('|');
  std::string entries = bar == std::string::npos ? b : b.substr(0, bar);
  std::string trans = bar == std::string::npos ? "" : strip(b.substr(bar + 1));
  const auto& A = group->base();
  WreathElement::Support support;
  std::stringstream in(entries);
  std::string entry;
  while (std::getline(in, entry, ';')) {
    entry = strip(entry);
    if (entry.empty()) continue;
    auto arrow = entry.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'pos->value' in " + std::string(context));
    Point pos = parse_int_tuple(entry.substr(0, arrow), context);
    if (pos.size() != group->dim()) throw ParseError("position dimension mismatch in " + std::string(context));
    auto coords = parse_int_tuple(entry.substr(arrow + 2), context);
    if (coords.size() != A.rank()) throw ParseError("value rank mismatch in " + std::string(context));
    AElement v = A.element(std::move(coords));
    auto it = support.find(pos);
    if (it == support.end()) {
      support.emplace(std::move(pos), v);
    } else {
      it->second = A.add(it->second, v);
    }
  }
  Point t = trans.empty() ? group->origin() : parse_int_tuple(trans, context);
  if (t.size() != group->dim()) throw ParseError("translation dimension mismatch in " + std::string(context));
  return WreathElement(group, std::move(support), std::move(t));
}

WreathElement parse_shorthand(const WreathGroupPtr& group, std::string_view text) {
  std::string s(text);
  std::string lin = s;
  std::int64_t t = 0;
  if (auto semi = s.rfind(';'); semi != std::string::npos) {
    lin = s.substr(0, semi);
    std::string ts = strip(s.substr(semi + 1));
    auto tt = parse_int_tuple(ts, text);
    if (tt.size() != 1) throw ParseError("translation must be one integer in '" + s + "'");
    t = tt[0];
  }
  std::vector<ZLaurent> coords(group->base().rank());
  // Split into signed terms at depth 0.
  std::vector<std::pair<bool, std::string>> terms;
  int depth = 0;
  std::string cur;
  bool neg = false;
  std::string l = strip(lin);
  if (l == "0" || l.empty()) l.clear();  // trivial base part
  for (std::size_t i = 0; i < l.size(); ++i) {
    char c = l[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    // a '-' right after '^' belongs to an exponent
    bool exponent_sign = i > 0 && l[i - 1] == '^';
    if (depth == 0 && (c == '+' || c == '-') && !exponent_sign) {
      if (!strip(cur).empty()) terms.emplace_back(neg, cur);
      cur.clear();
      neg = c == '-';
      continue;
    }
    cur += c;
  }
  if (!strip(cur).empty()) terms.emplace_back(neg, cur);
  for (auto& [is_neg, term] : terms) {
    // Find the generator symbol at depth 0.
    std::size_t found = std::string::npos, found_len = 0, summand = 0;
    depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      char c = term[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && c == 'a') {
        std::size_t j = i + 1;
        if (j < term.size() && term[j] == '_') ++j;
        while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
        std::size_t idx = base_symbol_index(*group, std::string_view(term).substr(i, j - i));
        if (idx == std::string_view::npos) throw ParseError("unknown generator in '" + term + "'");
        if (found != std::string::npos) throw ParseError("two generators in term '" + term + "'");
        found = i;
        found_len = j - i;
        summand = idx;
      }
    }
    if (found == std::string::npos) throw ParseError("term '" + strip(term) + "' has no generator a");
    std::string rest = term.substr(0, found) + term.substr(found + found_len);
    rest = strip(rest);
    while (!rest.empty() && rest.back() == '*') rest = strip(rest.substr(0, rest.size() - 1));
    while (!rest.empty() && rest.front() == '*') rest = strip(rest.substr(1));
    ZLaurent f = rest.empty() ? ZLaurent(mpz_class(1)) : parse_zlaurent(rest);
    coords[summand] += is_neg ? -f : f;
  }
  return WreathElement::from_laurent(group, coords, t);
}

}  // namespace

WreathGroup::WreathGroup(FgAbelianGroup base, std::size_t dim) : base_(std::move(base)), dim_(dim) {
  if (dim_ == 0) throw std::invalid_argument("active group dimension must be positive");
}

std::string WreathGroup::to_string() const {
  std::string s = base_.to_string() + " wr Z";
  if (dim_ > 1) s += "^" + std::to_string(dim_);
  return s;
}

WreathGroupPtr make_wreath_group(FgAbelianGroup base, std::size_t dim) {
  return std::make_shared<const WreathGroup>(std::move(base), dim);
}

WreathGroupPtr parse_wreath_group(std::string_view text) {
  std::string s(text);
  auto pos = s.find("wr");
  if (pos == std::string::npos) throw ParseError("group '" + s + "' must have the form 'A wr Z^d'");
  FgAbelianGroup base = parse_abelian_group(s.substr(0, pos));
  FgAbelianGroup active = parse_abelian_group(s.substr(pos + 2));
  if (!active.is_torsion_free() || active.free_rank() == 0) {
    throw ParseError("active group of '" + s + "' must be Z^d with d >= 1");
  }
  return make_wreath_group(std::move(base), active.free_rank());
}

std::vector<Generator> standard_generators(const WreathGroup& group) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < group.base().rank(); ++i) {
    gens.push_back({Generator::Kind::Base, i, +1});
    if (group.base().order(i) != 2) gens.push_back({Generator::Kind::Base, i, -1});
  }
  for (std::size_t k = 0; k < group.dim(); ++k) {
    gens.push_back({Generator::Kind::Active, k, +1});
    gens.push_back({Generator::Kind::Active, k, -1});
  }
  return gens;
}

std::string generator_name(const WreathGroup& group, const Generator& g) {
  std::string name;
  if (g.kind == Generator::Kind::Base) {
    name = group.base().rank() == 1 ? "a" : "a" + std::to_string(g.index + 1);
  } else if (group.dim() <= 2) {
    name = g.index == 0 ? "b" : "c";
  } else {
    name = "b" + std::to_string(g.index + 1);
  }
  if (g.sign < 0 && !(g.kind == Generator::Kind::Base && group.base().order(g.index) == 2)) name += "^-1";
  return name;
}

std::string format_word(const WreathGroup& group, const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += generator_name(group, word[i]);
  }
  return out;
}

WreathElement::WreathElement(WreathGroupPtr group)
    : group_(std::move(group)), translation_(group_->origin()) {}

WreathElement::WreathElement(WreathGroupPtr group, Support support, Point translation)
    : group_(std::move(group)), support_(std::move(support)), translation_(std::move(translation)) {
  if (translation_.size() != group_->dim()) throw std::invalid_argument("translation dimension mismatch");
  for (auto it = support_.begin(); it != support_.end();) {
    if (it->first.size() != group_->dim()) throw std::invalid_argument("support point dimension mismatch");
    if (!group_->base().contains(it->second)) throw std::invalid_argument("support value not in A");
    if (it->second.is_identity()) {
      it = support_.erase(it);
    } else {
      ++it;
    }
  }
}

WreathElement WreathElement::generator(WreathGroupPtr group, const Generator& g) {
  WreathElement e(std::move(group));
  e.multiply_by(g);
  return e;
}

WreathElement WreathElement::from_laurent(WreathGroupPtr group, const std::vector<ZLaurent>& coords,
                                          std::int64_t translation) {
  if (group->dim() != 1) throw std::invalid_argument("Laurent form needs a one-dimensional active group");
  const auto& A = group->base();
  if (coords.size() != A.rank()) throw std::invalid_argument("need one polynomial per A-summand");
  std::map<std::int64_t, std::vector<std::int64_t>> by_pos;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (const auto& [e, c] : coords[i].terms()) {
      auto& v = by_pos.try_emplace(e, std::vector<std::int64_t>(A.rank(), 0)).first->second;
      mpz_class reduced = c;
      if (A.order(i) != 0) reduced = c % A.order(i);  // keeps |reduced| < n
      if (!reduced.fits_slong_p()) throw std::overflow_error("coefficient too large for a group element");
      v[i] = reduced.get_si();
    }
  }
  Support support;
  for (auto& [e, v] : by_pos) support.emplace(Point{e}, A.element(std::move(v)));
  return WreathElement(std::move(group), std::move(support), Point{translation});
}

bool WreathElement::is_identity() const {
  if (!support_.empty()) return false;
  for (auto c : translation_) {
    if (c != 0) return false;
  }
  return true;
}

ZLaurent WreathElement::base_polynomial(std::size_t summand) const {
  if (group_->dim() != 1) throw std::invalid_argument("base_polynomial needs d = 1");
  ZLaurent f;
  for (const auto& [p, v] : support_) f.set(p[0], mpz_class(static_cast<long>(v[summand])));
  return f;
}

WreathElement WreathElement::inverse() const {
  Support s;
  const auto& A = group_->base();
  for (const auto& [p, v] : support_) s.emplace(point_sub(p, translation_), A.negate(v));
  Point t(translation_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = -translation_[i];
  return WreathElement(group_, std::move(s), std::move(t));
}

void WreathElement::multiply_by(const Generator& g) {
  if (g.kind == Generator::Kind::Active) {
    translation_[g.index] += g.sign;
    return;
  }
  const auto& A = group_->base();
  AElement step = A.generator(g.index, g.sign);
  auto it = support_.find(translation_);
  if (it == support_.end()) {
    support_.emplace(translation_, std::move(step));
  } else {
    it->second = A.add(it->second, step);
    if (it->second.is_identity()) support_.erase(it);
  }
}

std::size_t WreathElement::hash() const {
  std::size_t seed = support_.size();
  for (auto c : translation_) hash_mix(seed, static_cast<std::uint64_t>(c));
  for (const auto& [p, v] : support_) {
    for (auto c : p) hash_mix(seed, static_cast<std::uint64_t>(c));
    for (auto c : v.coords()) hash_mix(seed, static_cast<std::uint64_t>(c) * 31u + 7u);
  }
  return seed;
}

bool operator==(const WreathElement& a, const WreathElement& b) {
  return a.translation_ == b.translation_ && a.support_ == b.support_ &&
         (a.group_ == b.group_ || *a.group_ == *b.group_);
}

WreathElement wr_mul(const WreathElement& u, const WreathElement& v) {
  require_same_group(u, v);
  const auto& A = u.group().base();
  WreathElement::Support s = u.support();
  for (const auto& [p, val] : v.support()) {
    Point q = point_add(p, u.translation());
    auto it = s.find(q);
    if (it == s.end()) {
      s.emplace(std::move(q), val);
    } else {
      it->second = A.add(it->second, val);
    }
  }
  return WreathElement(u.group_ptr(), std::move(s), point_add(u.translation(), v.translation()));
}

WreathElement wr_pow(const WreathElement& u, std::int64_t n) {
  WreathElement base = n < 0 ? u.inverse() : u;
  WreathElement acc(u.group_ptr());
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = wr_mul(acc, base);
  return acc;
}

WreathElement evaluate_word(const WreathGroupPtr& group, const Word& word) {
  WreathElement e(group);
  for (const auto& g : word) e.multiply_by(g);
  return e;
}

WreathElement parse_wreath_element(const WreathGroupPtr& group, std::string_view text) {
  std::string s = strip(text);
  if (s.rfind("wr(", 0) == 0) {
    auto close = s.find(')');
    auto brace = s.find('{');
    if (close == std::string::npos || brace == std::string::npos || brace < close) {
      throw ParseError("bad element '" + s + "'");
    }
    std::string header = s.substr(3, close - 3);
    auto semi = header.rfind(';');
    if (semi == std::string::npos) throw ParseError("expected 'wr(A; d)' in '" + s + "'");
    FgAbelianGroup base = parse_abelian_group(header.substr(0, semi));
    auto dim = parse_int_tuple(header.substr(semi + 1), s);
    if (dim.size() != 1 || !(base == group->base()) || static_cast<std::size_t>(dim[0]) != group->dim()) {
      throw ParseError("element group '" + header + "' does not match " + group->to_string());
    }
    s = strip(s.substr(brace));
  }
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw ParseError("unbalanced braces in '" + s + "'");
    return parse_braced(group, std::string_view(s).substr(1, s.size() - 2), s);
  }
  if (group->dim() != 1) throw ParseError("Laurent shorthand needs d = 1; use the braces form");
  return parse_shorthand(group, s);
}

std::string to_string(const WreathElement& e) {
  std::ostringstream out;
  auto tuple = [&](const auto& v, bool paren) {
    if (paren) out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    if (paren) out << ')';
  };
  out << "{ ";
  bool first = true;
  for (const auto& [p, v] : e.support()) {
    if (!first) out << " ; ";
    first = false;
    tuple(p, p.size() > 1);
    out << "->";
    tuple(v.coords(), v.size() > 1);
  }
  out << (first ? "| " : " | ");
  tuple(e.translation(), e.translation().size() > 1);
  out << " }";
  return out.str();
}

nlohmann::json to_json(const WreathElement& e) {
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [p, v] : e.support()) {
    support.push_back({{"pos", p}, {"value", std::vector<std::int64_t>(v.coords().begin(), v.coords().end())}});
  }
  return {{"group", e.group().to_string()}, {"support", support}, {"translation", e.translation()}};
}

WreathElement wreath_element_from_json(const WreathGroupPtr& group, const nlohmann::json& j) {
  try {
    WreathElement::Support support;
    for (const auto& entry : j.at("support")) {
      Point p = entry.at("pos").get<Point>();
      auto v = group->base().element(entry.at("value").get<std::vector<std::int64_t>>());
      auto it = support.find(p);
      if (it == support.end()) {
        support.emplace(std::move(p), v);
      } else {
        it->second = group->base().add(it->second, v);
      }
    }
    return WreathElement(group, std::move(support), j.at("translation").get<Point>());
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad element JSON: ") + ex.what());
  }
}

}  // namespace wreath
