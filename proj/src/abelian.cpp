#include "wreath/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool AElement::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
  for (std::int64_t n : torsion_) {
    if (n < 2) throw std::invalid_argument("torsion orders must be at least 2");
  }
}

FgAbelianGroup FgAbelianGroup::power(std::size_t copies) const {
  std::vector<std::int64_t> torsion;
  torsion.reserve(torsion_.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) torsion.insert(torsion.end(), torsion_.begin(), torsion_.end());
  return {free_rank_ * copies, std::move(torsion)};
}

AElement FgAbelianGroup::identity() const { return AElement(std::vector<std::int64_t>(rank(), 0)); }

AElement FgAbelianGroup::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinates, group " + to_string() + " has rank " +
                                std::to_string(rank()));
  }
  for (std::size_t i = free_rank_; i < coords.size(); ++i) coords[i] = floor_mod(coords[i], order(i));
  return AElement(std::move(coords));
}

AElement FgAbelianGroup::generator(std::size_t i, std::int64_t exponent) const {
  if (i >= rank()) throw std::out_of_range("generator index out of range");
  std::vector<std::int64_t> c(rank(), 0);
  c[i] = exponent;
  return element(std::move(c));
}

bool FgAbelianGroup::contains(const AElement& v) const {
  if (v.size() != rank()) return false;
  for (std::size_t i = free_rank_; i < rank(); ++i) {
    if (v[i] < 0 || v[i] >= order(i)) return false;
  }
  return true;
}

void FgAbelianGroup::require_member(const AElement& v) const {
  if (v.size() != rank()) {
    throw std::invalid_argument("dimension mismatch: element of size " + std::to_string(v.size()) +
                                " in group " + to_string());
  }
}

AElement FgAbelianGroup::add(const AElement& u, const AElement& v) const {
  require_member(u);
  require_member(v);
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = u[i] + v[i];
    if (i >= free_rank_ && c[i] >= order(i)) c[i] -= order(i);
  }
  return AElement(std::move(c));
}

AElement FgAbelianGroup::negate(const AElement& v) const {
  require_member(v);
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = i < free_rank_ ? -v[i] : (v[i] == 0 ? 0 : order(i) - v[i]);
  }
  return AElement(std::move(c));
}

AElement FgAbelianGroup::scale(const AElement& v, std::int64_t k) const {
  require_member(v);
  std::vector<std::int64_t> c(v.coords().begin(), v.coords().end());
  for (auto& x : c) x *= k;
  return element(std::move(c));
}

std::string FgAbelianGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " x ";
    first = false;
  };
  if (free_rank_ == 1) {
    sep();
    out << "Z";
  } else if (free_rank_ > 1) {
    sep();
    out << "Z^" << free_rank_;
  }
  for (std::int64_t n : torsion_) {
    sep();
    out << "Z" << n;
  }
  if (first) out << "1";
  return out.str();
}

std::int64_t a_length(const FgAbelianGroup& group, const AElement& v) {
  if (v.size() != group.rank()) {
    throw std::invalid_argument("dimension mismatch: element of size " + std::to_string(v.size()) +
                                " in group " + group.to_string());
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t n = group.order(i);
    if (n == 0) {
      total += v[i] < 0 ? -v[i] : v[i];
    } else {
      std::int64_t c = floor_mod(v[i], n);
      total += std::min(c, n - c);
    }
  }
  return total;
}

FgAbelianGroup parse_abelian_group(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s == "1" || s == "0") return FgAbelianGroup(0, {});
  // Summands are separated by 'x', '+' or "(+)".
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "(+)") == 0) {
      parts.push_back(cur);
      cur.clear();
      i += 2;
    } else if (s[i] == 'x' || s[i] == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  parts.push_back(cur);

  auto parse_int = [&](std::string_view digits) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("bad abelian group '" + std::string(text) + "'");
    }
    return v;
  };

  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  for (const auto& part : parts) {
    if (part.empty() || part[0] != 'Z') throw ParseError("bad abelian group '" + std::string(text) + "'");
    std::string_view rest(part);
    rest.remove_prefix(1);
    if (rest.empty()) {
      ++free_rank;
    } else if (rest[0] == '^') {
      // "Z^k" is Z^k; "Z_n^k" / "Zn^k" are k copies of Z_n.
      free_rank += static_cast<std::size_t>(parse_int(rest.substr(1)));
    } else {
      if (rest[0] == '_') rest.remove_prefix(1);
      std::int64_t copies = 1;
      if (auto caret = rest.find('^'); caret != std::string_view::npos) {
        copies = parse_int(rest.substr(caret + 1));
        rest = rest.substr(0, caret);
      }
      std::int64_t n = parse_int(rest);
      if (n < 2) throw ParseError("torsion order must be at least 2 in '" + std::string(text) + "'");
      for (std::int64_t c = 0; c < copies; ++c) torsion.push_back(n);
    }
  }
  return FgAbelianGroup(free_rank, std::move(torsion));
}

}  // namespace wreath
