#include "wreath/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BaseVector parse_base_vector(const nlohmann::json& j, std::size_t rank, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of polynomials");
  if (j.size() != rank) {
    throw ParseError(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                     std::to_string(rank));
  }
  BaseVector v;
  for (const auto& p : j) v.push_back(zlaurent_from_json(p));
  return v;
}

nlohmann::json base_vector_json(const BaseVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

WreathElement base_element(const WreathGroupPtr& group, const BaseVector& v, std::int64_t t) {
  return WreathElement::from_laurent(group, v, t);
}

}  // namespace

LaurentMatrix generator_matrix(std::size_t k, const std::vector<BaseVector>& gens) {
  LaurentMatrix m(k, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != k) throw std::invalid_argument("generator has the wrong number of coordinates");
    for (std::size_t i = 0; i < k; ++i) m(i, j) = to_rational(gens[j][i]);
  }
  return m;
}

ExponentPrediction predict_exponent(std::size_t k, const std::vector<BaseVector>& gens) {
  LaurentMatrix m = generator_matrix(k, gens);
  if (gens.empty() || m.is_zero()) throw std::invalid_argument("all generators are zero");
  ExponentPrediction p;
  p.snf = snf_laurent(m);
  p.exponent = 1;
  for (const auto& d : p.snf.diagonal) {
    ZLaurent z = clear_denominators(d);
    auto cert = distortion_exponent(z);
    p.exponent = std::max(p.exponent, cert.exponent);
    p.cleared_diagonal.push_back(std::move(z));
    p.certificates.push_back(std::move(cert));
  }
  return p;
}

int predicted_exponent(std::size_t k, const std::vector<BaseVector>& gens) {
  return predict_exponent(k, gens).exponent;
}

ShiftGenReduction shift_gen_reduction(const FgAbelianGroup& A, const ShiftGenInput& shift_gen,
                                      const std::vector<BaseVector>& others) {
  if (shift_gen.t == 0) throw std::invalid_argument("t = 0: the subgroup lies in the abelian base (undistorted)");
  if (shift_gen.w0.size() != A.rank()) throw std::invalid_argument("w0 has the wrong number of coordinates");
  const std::int64_t T = shift_gen.t < 0 ? -shift_gen.t : shift_gen.t;
  ShiftGenReduction out{A.power(static_cast<std::size_t>(T)), T, {}};
  const std::size_t fr = A.free_rank(), tr = A.torsion_orders().size();
  auto new_index = [&](std::size_t summand, std::int64_t block) {
    const auto r = static_cast<std::size_t>(block);
    return summand < fr ? r * fr + summand : static_cast<std::size_t>(T) * fr + r * tr + (summand - fr);
  };
  for (const auto& w : others) {
    if (w.size() != A.rank()) throw std::invalid_argument("generator has the wrong number of coordinates");
    BaseVector nw(out.base.rank());
    for (std::size_t c = 0; c < w.size(); ++c) {
      for (const auto& [i, coef] : w[c].terms()) {
        const std::int64_t q = floor_div(i, T);
        const std::int64_t r = i - q * T;
        nw[new_index(c, r)].add_term(q, coef);
      }
    }
    // torsion coordinates reduced mod n
    for (std::size_t c = out.base.free_rank(); c < out.base.rank(); ++c) {
      ZLaurent red;
      for (const auto& [e, coef] : nw[c].terms()) {
        mpz_class v = coef % out.base.order(c);
        if (v < 0) v += out.base.order(c);
        red.set(e, v);
      }
      nw[c] = std::move(red);
    }
    out.gens.push_back(std::move(nw));
  }
  return out;
}

GeneratorFile parse_generator_file(const nlohmann::json& j) {
  try {
    GeneratorFile g;
    const auto k = j.at("k").get<std::int64_t>();
    if (k < 0) throw ParseError("k must be nonnegative");
    std::vector<std::int64_t> torsion;
    if (j.contains("torsion") && !j.at("torsion").is_null()) torsion = j.at("torsion").get<std::vector<std::int64_t>>();
    try {
      g.base = FgAbelianGroup(static_cast<std::size_t>(k), torsion);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (g.base.rank() == 0) throw ParseError("the base group A must be nontrivial");
    for (const auto& col : j.at("gens")) g.gens.push_back(parse_base_vector(col, g.base.rank(), "generator"));
    if (j.contains("shift_gen") && !j.at("shift_gen").is_null()) {
      const auto& s = j.at("shift_gen");
      g.shift_gen = ShiftGenInput{parse_base_vector(s.at("w0"), g.base.rank(), "w0"), s.at("t").get<std::int64_t>()};
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("generator file: ") + e.what());
  }
}

nlohmann::json to_json(const GeneratorFile& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& w : g.gens) gens.push_back(base_vector_json(w));
  nlohmann::json j{{"k", g.base.free_rank()}, {"gens", gens}};
  if (!g.base.torsion_orders().empty()) j["torsion"] = g.base.torsion_orders();
  if (g.shift_gen) {
    j["shift_gen"] = {{"w0", base_vector_json(g.shift_gen->w0)}, {"t", g.shift_gen->t}};
  } else {
    j["shift_gen"] = nullptr;
  }
  return j;
}

ReductionReport reduce_generator_file(const GeneratorFile& g) {
  ReductionReport r;
  FgAbelianGroup base = g.base;
  std::vector<BaseVector> gens = g.gens;
  if (g.shift_gen) {
    if (g.shift_gen->t == 0) {
      r.status = "abelian";
      r.note = "abelian; undistorted";
      r.predicted = 1;
      return r;
    }
    r.reduced = shift_gen_reduction(g.base, *g.shift_gen, g.gens);
    base = r.reduced->base;
    gens = r.reduced->gens;
  }
  if (base.is_finite()) {
    r.status = "undistorted-expected";
    r.note = "finite A: every subgroup is undistorted; measure empirically";
    return r;
  }
  if (!base.is_torsion_free()) {
    r.status = "empirical-only";
    r.note = "A has torsion and a free part; no exact prediction";
    return r;
  }
  bool all_zero = std::all_of(gens.begin(), gens.end(), [](const BaseVector& w) {
    return std::all_of(w.begin(), w.end(), [](const ZLaurent& p) { return p.is_zero(); });
  });
  r.status = "predicted";
  if (all_zero) {
    r.predicted = 1;
    r.note = "cyclic subgroup <b>";
    return r;
  }
  r.prediction = predict_exponent(base.rank(), gens);
  r.predicted = r.prediction->exponent;
  return r;
}

nlohmann::json to_json(const ReductionReport& r) {
  nlohmann::json j{{"status", r.status}};
  j["predicted_exponent"] = r.predicted ? nlohmann::json(*r.predicted) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.reduced) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& w : r.reduced->gens) gens.push_back(base_vector_json(w));
    j["reduced"] = {{"base", r.reduced->base.to_string()}, {"block", r.reduced->block}, {"gens", gens}};
  }
  if (r.prediction) {
    nlohmann::json diag = nlohmann::json::array();
    for (const auto& d : r.prediction->snf.diagonal) diag.push_back(to_string(d));
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : r.prediction->certificates) certs.push_back(to_json(c));
    j["snf_diagonal"] = diag;
    j["certificates"] = certs;
  }
  return j;
}

std::vector<WreathElement> subgroup_generators(const WreathGroupPtr& group, const GeneratorFile& g) {
  std::vector<WreathElement> out;
  if (g.shift_gen) {
    out.push_back(base_element(group, g.shift_gen->w0, g.shift_gen->t));
  } else {
    out.push_back(WreathElement::generator(group, {Generator::Kind::Active, 0, 1}));
  }
  for (const auto& w : g.gens) out.push_back(base_element(group, w, 0));
  return out;
}

}  // namespace wreath
