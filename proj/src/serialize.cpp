#include "formk1/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace formk1 {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("expected a ring element string, got " + j.dump());
}

Elem parse_elem(const Ring& ring, const json& j) { return ring.parse(scalar_text(j)); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) return parse_int(v.get<std::string>());
  bad(std::string("field \"") + key + "\" is not an integer");
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(std::string("field \"") + key + "\" is not a non-negative integer");
  return v.get<std::size_t>();
}

void check_involution(const json& j, const char* expected) {
  if (j.contains("involution") && j.at("involution") != expected)
    bad("involution " + j.at("involution").dump() + " is not supported for this kind (expected " + expected + ")");
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

RingPtr ring_from_json_impl(const json& j, const std::string& lambda);

RingPtr ring_from_text(std::string s, const std::string& lambda) {
  s = trim(s);
  if (s.empty()) bad("empty ring descriptor");
  if (s.front() == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::exception& e) {
      bad(std::string("ring descriptor is not valid JSON: ") + e.what());
    }
    return ring_from_json_impl(j, lambda);
  }
  if (ends_with(s, "[X]")) return make_polynomial(ring_from_text(s.substr(0, s.size() - 3), lambda));
  if (ends_with(s, "[i]")) {
    std::string inner = trim(s.substr(0, s.size() - 3));
    if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
    if (inner.rfind("Z/", 0) != 0) bad("unknown ring shorthand " + s);
    return make_gaussian(parse_int(inner.substr(2)), lambda.empty() ? "1" : lambda);
  }
  if (s.front() == '(' && s.back() == ')') return ring_from_text(s.substr(1, s.size() - 2), lambda);
  if (s == "Z") return make_integers(lambda.empty() ? Int(-1) : parse_int(lambda));
  if (s.rfind("Z/", 0) == 0) {
    Int m = parse_int(s.substr(2));
    if (m < 2) bad("modulus must be at least 2");
    return make_modular(m, lambda.empty() ? Int(1) : parse_int(lambda));
  }
  bad("unknown ring shorthand " + s);
}

RingPtr ring_from_json_impl(const json& j, const std::string& lambda) {
  if (j.is_string()) return ring_from_text(j.get<std::string>(), lambda);
  if (!j.is_object()) bad("ring descriptor must be an object or a shorthand string");
  std::string kind = field(j, "kind").get<std::string>();
  std::string lam = lambda;
  if (lam.empty() && j.contains("lambda")) lam = scalar_text(j.at("lambda"));
  if (kind == "Integers") {
    check_involution(j, "trivial");
    return make_integers(lam.empty() ? Int(-1) : parse_int(lam));
  }
  if (kind == "ModularInt") {
    check_involution(j, "trivial");
    Int m = int_field(j, "m");
    if (m < 2) bad("modulus must be at least 2");
    return make_modular(m, lam.empty() ? Int(1) : parse_int(lam));
  }
  if (kind == "GaussianModular") {
    check_involution(j, "conjugation");
    Int m = int_field(j, "m");
    if (m < 2) bad("modulus must be at least 2");
    return make_gaussian(m, lam.empty() ? "1" : lam);
  }
  if (!j.contains("base")) bad("descriptor of kind " + kind + " needs a \"base\"");
  RingPtr base = ring_from_json_impl(j.at("base"), lambda);
  if (kind == "Polynomial") {
    std::string var = j.value("variable", std::string("X"));
    if (var.size() != 1) bad("polynomial variable must be one character");
    return make_polynomial(base, var[0]);
  }
  if (kind == "TruncatedPolynomial") return make_truncated(base, static_cast<unsigned>(size_field(j, "t")));
  if (kind == "Graded") return make_graded(base, static_cast<unsigned>(size_field(j, "topDegree")));
  if (kind == "Excision") return make_excision(base, ideal_from_json(base, field(j, "ideal")));
  if (kind == "Double") return make_double(base, ideal_from_json(base, field(j, "ideal")));
  if (kind == "Matrix") return make_matrix_ring(base, size_field(j, "size"));
  bad("unknown ring kind " + kind);
}

}  // namespace

RingPtr ring_from_json(const json& j) { return ring_from_json_impl(j, ""); }

RingPtr parse_ring(const std::string& text, const std::string& lambda) {
  return ring_from_text(read_arg(text), trim(lambda));
}

// ---------------------------------------------------------------------------

FormParameter form_from_json(const RingPtr& ring, const json& j) {
  std::string mode;
  if (j.is_string()) {
    mode = j.get<std::string>();
  } else {
    mode = field(j, "mode").get<std::string>();
  }
  if (mode == "min") return FormParameter::min(ring);
  if (mode == "max") return FormParameter::max(ring);
  if (mode == "explicit") {
    std::vector<Elem> elems;
    for (const auto& e : field(j, "elements")) elems.push_back(parse_elem(*ring, e));
    return FormParameter::explicit_set(ring, std::move(elems));
  }
  if (mode == "poly") {
    auto cr = std::dynamic_pointer_cast<const CoefficientRing>(ring);
    if (!cr) bad("mode \"poly\" needs a polynomial, truncated or graded ring");
    return FormParameter::extend_poly(form_from_json(cr->base(), field(j, "base")), cr);
  }
  if (mode == "gamma_plus") {
    auto er = std::dynamic_pointer_cast<const ExcisionRing>(ring);
    if (!er) bad("mode \"gamma_plus\" needs an excision ring");
    return FormParameter::gamma_plus(form_from_json(er->base(), field(j, "base")), er);
  }
  if (mode == "lambda_prime") {
    auto dr = std::dynamic_pointer_cast<const DoubleRing>(ring);
    if (!dr) bad("mode \"lambda_prime\" needs a double ring");
    return FormParameter::lambda_prime(form_from_json(dr->base(), field(j, "base")), dr);
  }
  bad("unknown form parameter mode " + mode);
}

FormParameter parse_form(const RingPtr& ring, const std::string& text) {
  std::string s = trim(read_arg(text));
  if (s.empty() || s == "min" || s == "max") return form_from_json(ring, json(s.empty() ? "max" : s));
  return form_from_json(ring, parse_json_arg(s));
}

// ---------------------------------------------------------------------------

Ideal ideal_from_json(const RingPtr& ring, const json& j) {
  std::vector<Elem> gens;
  if (j.is_array()) {
    for (const auto& g : j) gens.push_back(parse_elem(*ring, g));
  } else if (j.is_object() && j.contains("generators")) {
    for (const auto& g : j.at("generators")) gens.push_back(parse_elem(*ring, g));
  } else {
    gens.push_back(parse_elem(*ring, j));
  }
  return Ideal::generated(ring, std::move(gens));
}

Ideal parse_ideal(const RingPtr& ring, const std::string& text) {
  std::string s = trim(read_arg(text));
  if (!s.empty() && (s.front() == '[' || s.front() == '{')) return ideal_from_json(ring, parse_json_arg(s));
  std::vector<Elem> gens;
  for (const auto& part : split_top_level(s, ',')) gens.push_back(ring->parse(part));
  return Ideal::generated(ring, std::move(gens));
}

json ideal_to_json(const Ideal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(ideal.ring()->format(g));
  return gens;
}

// ---------------------------------------------------------------------------

Matrix matrix_from_json(const Ring& ring, const json& j) {
  const json& rows = j.is_object() ? field(j, "entries") : j;
  if (!rows.is_array()) bad("matrix entries must be an array of rows");
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.at(0).size();
  Matrix m(nr, nc, ring.zero());
  for (std::size_t i = 0; i < nr; ++i) {
    if (!rows.at(i).is_array() || rows.at(i).size() != nc) bad("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < nc; ++k) m(i, k) = parse_elem(ring, rows.at(i).at(k));
  }
  if (j.is_object() && j.contains("n")) {
    std::size_t n = size_field(j, "n");
    if (nr != 2 * n || nc != 2 * n)
      fail(ErrorKind::DimensionMismatch, "matrix is " + std::to_string(nr) + "x" + std::to_string(nc) +
                                             " but n = " + std::to_string(n));
  }
  return m;
}

json rows_to_json(const Ring& ring, const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(ring.format(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const Ring& ring, const Matrix& m) {
  json out;
  if (m.rows() == m.cols() && m.rows() % 2 == 0 && m.rows() > 0) out["n"] = m.rows() / 2;
  out["entries"] = rows_to_json(ring, m);
  return out;
}

HVector vector_from_json(const Ring& ring, const json& j) {
  if (!j.is_array()) bad("vector must be an array");
  HVector v;
  for (const auto& e : j) v.push_back(parse_elem(ring, e));
  return v;
}

json vector_to_json(const Ring& ring, const HVector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(ring.format(e));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

ElemGen gen_from_json(const Ring& ring, const json& j) {
  auto fam = parse_family(field(j, "family").get<std::string>());
  if (!fam) bad("unknown generator family " + j.at("family").dump());
  ElemGen g;
  g.family = *fam;
  g.i = size_field(j, "i");
  g.j = size_field(j, "j");
  g.a = parse_elem(ring, field(j, "a"));
  return g;
}

json gen_to_json(const Ring& ring, const ElemGen& g) {
  return {{"family", std::string(family_name(g.family))}, {"i", g.i}, {"j", g.j}, {"a", ring.format(g.a)}};
}

}  // namespace

ElemWord word_from_json(const Ring& ring, const json& j, std::size_t default_n) {
  const json& factors = j.is_object() ? field(j, "factors") : j;
  if (!factors.is_array()) bad("word factors must be an array");
  ElemWord w;
  w.n = j.is_object() && j.contains("n") ? size_field(j, "n") : default_n;
  if (w.n == 0) bad("word needs a positive \"n\"");
  for (const auto& f : factors) {
    if (f.contains("family")) {
      w.factors.push_back({gen_from_json(ring, f)});
    } else if (f.contains("conjugator")) {
      RelGen rg{word_from_json(ring, f.at("conjugator"), w.n), gen_from_json(ring, field(f, "core"))};
      w.factors.push_back({rg});
    } else if (f.contains("block")) {
      BlockGen bg;
      std::string kind = f.at("block").get<std::string>();
      if (kind == "H") {
        bg.kind = BlockGen::Kind::H;
      } else if (kind == "T12") {
        bg.kind = BlockGen::Kind::T12;
      } else if (kind == "T21") {
        bg.kind = BlockGen::Kind::T21;
      } else {
        bad("unknown block generator " + kind);
      }
      bg.block = matrix_from_json(ring, field(f, "matrix"));
      if (bg.kind == BlockGen::Kind::H) {
        if (f.contains("inverse")) {
          bg.inverse = matrix_from_json(ring, f.at("inverse"));
        } else {
          auto inv = mat_inverse(ring, bg.block);
          if (!inv) fail(ErrorKind::NotInvertible, "H block has no inverse");
          bg.inverse = *inv;
        }
      }
      w.factors.push_back({bg});
    } else {
      fail(ErrorKind::MalformedWord, "factor is neither a generator, a relative generator nor a block: " + f.dump());
    }
  }
  return w;
}

json word_to_json(const Ring& ring, const ElemWord& w) {
  json factors = json::array();
  for (const auto& f : w.factors) {
    if (const auto* g = std::get_if<ElemGen>(&f.value)) {
      factors.push_back(gen_to_json(ring, *g));
    } else if (const auto* rg = std::get_if<RelGen>(&f.value)) {
      factors.push_back({{"conjugator", word_to_json(ring, rg->conjugator)}, {"core", gen_to_json(ring, rg->core)}});
    } else {
      const auto& bg = std::get<BlockGen>(f.value);
      const char* kind = bg.kind == BlockGen::Kind::H ? "H" : bg.kind == BlockGen::Kind::T12 ? "T12" : "T21";
      json out{{"block", kind}, {"matrix", rows_to_json(ring, bg.block)}};
      if (bg.kind == BlockGen::Kind::H) out["inverse"] = rows_to_json(ring, bg.inverse);
      factors.push_back(out);
    }
  }
  return {{"n", w.n}, {"factors", factors}};
}

// ---------------------------------------------------------------------------

KopeikoData kopeiko_from_json(const Ring& ring, const json& j) {
  KopeikoData d;
  d.a = matrix_from_json(ring, field(j, "a"));
  d.b = matrix_from_json(ring, field(j, "b"));
  d.c = matrix_from_json(ring, field(j, "c"));
  d.r = j.contains("r") ? size_field(j, "r") : d.a.rows();
  d.n = static_cast<unsigned>(size_field(j, "n"));
  if (d.n == 0) bad("degree n must be positive");
  for (const Matrix* m : {&d.a, &d.b, &d.c})
    if (!is_square_of_dim(*m, d.r)) fail(ErrorKind::DimensionMismatch, "blocks a, b, c must all be r x r");
  return d;
}

json kopeiko_to_json(const Ring& ring, const KopeikoData& d) {
  return {{"r", d.r},
          {"n", d.n},
          {"a", rows_to_json(ring, d.a)},
          {"b", rows_to_json(ring, d.b)},
          {"c", rows_to_json(ring, d.c)}};
}

json reduction_to_json(const Ring& ring, const ReductionResult& r) {
  return {{"alpha", rows_to_json(ring, r.alpha)},
          {"alphaInverse", rows_to_json(ring, r.alpha_inv)},
          {"certificate", word_to_json(ring, r.certificate)}};
}

// ---------------------------------------------------------------------------

Elem graded_from_json(const GradedRing& g, const json& j) {
  if (j.is_string() || j.is_number_integer()) return parse_elem(g, j);
  const json& comps = field(j, "components");
  if (!comps.is_object()) bad("\"components\" must map degrees to elements");
  std::vector<Elem> cs;
  for (const auto& [key, val] : comps.items()) {
    std::size_t k;
    try {
      std::size_t used = 0;
      k = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad("component key \"" + key + "\" is not a degree");
    }
    if (cs.size() <= k) cs.resize(k + 1, g.base()->zero());
    cs[k] = parse_elem(*g.base(), val);
  }
  return g.from_coeffs(std::move(cs));
}

json graded_to_json(const GradedRing& g, const Elem& x) {
  json comps = json::object();
  for (std::size_t k = 0; k <= g.top_degree(); ++k) {
    Elem c = g.coeff(x, k);
    if (!g.base()->is_zero(c)) comps[std::to_string(k)] = g.base()->format(c);
  }
  return {{"components", comps}};
}

// ---------------------------------------------------------------------------

std::string read_arg(const std::string& text) {
  std::string t = trim(text);
  if (t.empty() || t.front() == '{' || t.front() == '[') return text;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(t, ec)) return text;
  std::ifstream in(t);
  if (!in) bad("cannot read " + t);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_arg(const std::string& text) {
  try {
    return json::parse(read_arg(text));
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace formk1
