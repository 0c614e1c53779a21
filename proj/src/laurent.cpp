#include "wreath/laurent.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "wreath/error.hpp"

namespace wreath {

namespace {

/// Strips the x-power: returns (valuation, dense regular part).
template <class C>
std::pair<std::int64_t, std::vector<C>> split(const Laurent<C>& f) {
  return {f.valuation().value_or(0), f.dense()};
}

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : src_(normalize(text)) {}

  QLaurent parse() {
    skip_ws();
    QLaurent r = peek() == '[' ? parse_list() : parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return r;
  }

 private:
  static std::string normalize(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      // U+2212 MINUS SIGN
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += text[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + src_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class parse_natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(src_.substr(start, pos_ - start));
  }

  std::int64_t parse_exponent() {
    bool neg = false;
    bool paren = accept('(');
    if (accept('-')) neg = true;
    else accept('+');
    mpz_class v = parse_natural();
    if (paren && !accept(')')) fail("expected ')'");
    if (!v.fits_slong_p()) fail("exponent out of range");
    std::int64_t e = v.get_si();
    return neg ? -e : e;
  }

  QLaurent parse_list() {
    accept('[');
    std::vector<mpq_class> coeffs;
    if (!accept(']')) {
      do {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        mpq_class c(parse_natural());
        if (accept('/')) c /= mpq_class(parse_natural());
        c.canonicalize();
        coeffs.push_back(neg ? mpq_class(-c) : c);
      } while (accept(','));
      if (!accept(']')) fail("expected ']'");
    }
    std::int64_t s = 0;
    if (accept('@')) s = parse_exponent();
    return QLaurent::from_coeffs(s, coeffs);
  }

  QLaurent parse_expr() {
    QLaurent acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    QLaurent t = parse_term();
    acc += neg ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  QLaurent parse_term() {
    QLaurent acc = parse_factor();
    while (true) {
      if (accept('*')) {
        acc = acc * parse_factor();
      } else if (starts_factor()) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  QLaurent parse_factor() {
    QLaurent base = parse_primary();
    if (!accept('^')) return base;
    std::int64_t e = parse_exponent();
    if (e >= 0) {
      QLaurent r(mpq_class(1));
      for (std::int64_t i = 0; i < e; ++i) r = r * base;
      return r;
    }
    if (base.term_count() != 1) fail("negative power of a non-monomial");
    auto [exp, c] = *base.terms().begin();
    mpq_class inv = 1 / c;
    QLaurent r(mpq_class(1));
    for (std::int64_t i = 0; i < -e; ++i) r = r * QLaurent::monomial(inv, -exp);
    return r;
  }

  QLaurent parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      QLaurent inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return QLaurent::monomial(mpq_class(1), 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v(parse_natural());
      if (peek() == '/') {
        ++pos_;
        v /= mpq_class(parse_natural());
        v.canonicalize();
      }
      return QLaurent(v);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string src_;
  std::size_t pos_ = 0;
};

template <class C>
std::string format_laurent(const Laurent<C>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool neg = c < 0;
    C mag = abs(c);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << "x";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

nlohmann::json coeff_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

nlohmann::json coeff_json(const mpq_class& c) {
  if (c.get_den() == 1) return coeff_json(mpz_class(c.get_num()));
  return c.get_str();
}

mpq_class coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpq_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad coefficient " + j.dump());
    v.canonicalize();
    return v;
  }
  throw ParseError("bad coefficient " + j.dump());
}

QLaurent qlaurent_from_json_impl(const nlohmann::json& j) {
  if (j.is_string()) return parse_qlaurent(j.get<std::string>());
  if (j.is_number_integer()) return QLaurent(coeff_from_json(j));
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("bad polynomial JSON " + j.dump());
  std::int64_t s = j.value("s", std::int64_t{0});
  std::vector<mpq_class> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(coeff_from_json(c));
  return QLaurent::from_coeffs(s, coeffs);
}

}  // namespace

std::optional<ZLaurent> lp_divide_exact(const ZLaurent& p, const ZLaurent& h) {
  if (h.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return ZLaurent{};
  auto [vp, dp] = split(p);
  auto [vh, dh] = split(h);
  dense::ZPoly q;
  if (!dense::divide_exact(dp, dh, q)) return std::nullopt;
  return ZLaurent::from_coeffs(vp - vh, q);
}

std::optional<QLaurent> lp_divide_exact(const QLaurent& p, const QLaurent& h) {
  if (h.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return QLaurent{};
  auto [vp, dp] = split(p);
  auto [vh, dh] = split(h);
  auto [q, r] = dense::divmod(dp, dh);
  if (!r.empty()) return std::nullopt;
  return QLaurent::from_coeffs(vp - vh, q);
}

std::pair<QLaurent, QLaurent> lp_divmod(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {QLaurent{}, QLaurent{}};
  auto [va, da] = split(a);
  auto [vb, db] = split(b);
  auto [q, r] = dense::divmod(da, db);
  // a = x^va (q db + r) = (x^(va-vb) q) b + x^va r
  return {QLaurent::from_coeffs(va - vb, q), QLaurent::from_coeffs(va, r)};
}

QLaurent to_rational(const ZLaurent& f) {
  QLaurent r;
  for (const auto& [e, c] : f.terms()) r.set(e, mpq_class(c));
  return r;
}

std::optional<ZLaurent> to_integer(const QLaurent& f) {
  ZLaurent r;
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1) return std::nullopt;
    r.set(e, mpz_class(c.get_num()));
  }
  return r;
}

ZLaurent clear_denominators(const QLaurent& f) {
  if (f.is_zero()) return {};
  auto [v, d] = split(f);
  return ZLaurent::from_coeffs(v, dense::primitive_part(d));
}

mpq_class lp_eval(const QLaurent& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (const auto& [e, c] : f.terms()) {
    mpq_class p = 1;
    mpq_class base = e >= 0 ? x : mpq_class(1 / x);
    for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

QLaurent parse_qlaurent(std::string_view text) { return LaurentParser(text).parse(); }

ZLaurent parse_zlaurent(std::string_view text) {
  auto q = parse_qlaurent(text);
  auto z = to_integer(q);
  if (!z) throw ParseError("polynomial '" + std::string(text) + "' has non-integer coefficients");
  return *z;
}

std::string to_string(const ZLaurent& f) { return format_laurent(f); }
std::string to_string(const QLaurent& f) { return format_laurent(f); }

nlohmann::json to_json(const ZLaurent& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.dense()) coeffs.push_back(coeff_json(c));
  return {{"s", f.valuation().value_or(0)}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const QLaurent& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.dense()) coeffs.push_back(coeff_json(c));
  return {{"s", f.valuation().value_or(0)}, {"coeffs", coeffs}};
}

QLaurent qlaurent_from_json(const nlohmann::json& j) { return qlaurent_from_json_impl(j); }

ZLaurent zlaurent_from_json(const nlohmann::json& j) {
  auto z = to_integer(qlaurent_from_json_impl(j));
  if (!z) throw ParseError("polynomial " + j.dump() + " has non-integer coefficients");
  return *z;
}

}  // namespace wreath
