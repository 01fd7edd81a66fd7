#include "formk1/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "formk1/axioms.hpp"
#include "formk1/excision.hpp"
#include "formk1/factorization.hpp"
#include "formk1/graded.hpp"
#include "formk1/serialize.hpp"
#include "formk1/verify.hpp"

namespace formk1::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string ring, lambda, form, ideal, matrix, word, inverse, data, family, a, b, p, u;
  std::uint64_t seed = kDefaultSeed;
  bool pretty = false, sequential = false;
  std::string out;
  std::size_t n = 2, i = 1, j = 2, samples = 200;
  unsigned t = 3, r = 1, top = 8, bound = 64;
  long long k = 2;
  int suite = 0;
};

struct Outcome {
  json body;
  bool ok = true;
};

using Handler = std::function<Outcome(const Options&)>;

// Malformed input as opposed to a well-formed request the mathematics refuses.
bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::BadParameter:
    case ErrorKind::MalformedWord:
      return true;
    default:
      return false;
  }
}

json error_json(std::string_view kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

[[noreturn]] void missing(const char* flag) { fail(ErrorKind::ParseError, std::string("missing ") + flag); }

RingPtr ring_of(const Options& o) {
  if (o.ring.empty()) missing("--ring");
  return parse_ring(read_arg(o.ring), o.lambda);
}

FormParameter form_of(const Options& o, const RingPtr& ring) { return parse_form(ring, read_arg(o.form)); }

Matrix matrix_of(const Options& o, const Ring& ring) {
  if (o.matrix.empty()) missing("--matrix");
  return matrix_from_json(ring, parse_json_arg(o.matrix));
}

std::optional<Matrix> inverse_of(const Options& o, const Ring& ring) {
  if (o.inverse.empty()) return std::nullopt;
  return matrix_from_json(ring, parse_json_arg(o.inverse));
}

Ideal ideal_of(const Options& o, const RingPtr& ring) {
  if (o.ideal.empty()) missing("--ideal");
  return parse_ideal(ring, read_arg(o.ideal));
}

ElemWord word_of(const Options& o, const Ring& ring) {
  if (o.word.empty()) missing("--word");
  return word_from_json(ring, parse_json_arg(o.word), o.n);
}

Elem elem_of(const Ring& ring, const std::string& text, const char* flag) {
  if (text.empty()) missing(flag);
  return ring.parse(text);
}

json elems_to_json(const Ring& ring, const std::vector<Elem>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(ring.format(x));
  return out;
}

// ---------------------------------------------------------------------------

Outcome ring_check(const Options& o) {
  auto ring = ring_of(o);
  Rng rng(o.seed);
  auto rep = ring_axiom_suite(*ring, o.samples, rng);
  json body = rep.to_json();
  body["passed"] = rep.passed();
  return {body, rep.passed()};
}

Outcome form_validate(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  Rng rng(o.seed);
  auto rep = form_param_validate(form, o.samples, rng);
  json body = rep.to_json();
  body["form"] = form.describe();
  body["valid"] = rep.valid();
  return {body, rep.valid()};
}

Outcome gq_member_cmd(const Options& o) {
  auto ring = ring_of(o);
  bool m = gq_member(*ring, ring->lambda(), matrix_of(o, *ring));
  return {{{"member", m}}, m};
}

Outcome gq_conditions(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  auto c = lambda_quadratic_conditions(form, matrix_of(o, *ring));
  json body = c.to_json();
  body["quadratic"] = c.all();
  return {body, c.all()};
}

Outcome gq_gen(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  auto fam = parse_family(o.family);
  if (!fam) fail(ErrorKind::ParseError, "unknown generator family \"" + o.family + "\" (use QE, QR or QL)");
  Matrix m = elem_gen_eval(form, o.n, {*fam, o.i, o.j, elem_of(*ring, o.a, "--a")});
  return {{{"matrix", matrix_to_json(*ring, m)}, {"member", gq_member(*ring, ring->lambda(), m)}}, true};
}

Outcome word_eval_cmd(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  ElemWord w = word_of(o, *ring);
  std::optional<Ideal> ideal;
  if (!o.ideal.empty()) ideal = ideal_of(o, ring);
  Matrix m = word_eval(form, w, ideal ? &*ideal : nullptr);
  return {{{"matrix", matrix_to_json(*ring, m)}}, true};
}

Outcome word_lift(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  Ideal ideal = ideal_of(o, ring);
  ElemWord w = word_of(o, *ring);
  auto e = make_excision(ring, ideal);
  ElemWord lifted = lift_relative_word(*e, w);
  Matrix folded = fold_matrix(*e, word_eval(FormParameter::gamma_plus(form, e), lifted));
  bool agrees = folded == word_eval(form, w, &ideal);
  return {{{"ring", e->descriptor()}, {"word", word_to_json(*e, lifted)}, {"foldAgrees", agrees}}, agrees};
}

Outcome excision_roundtrip(const Options& o) {
  auto ring = ring_of(o);
  Ideal ideal = ideal_of(o, ring);
  auto d = make_double(ring, ideal);
  auto e = make_excision(ring, ideal);
  std::vector<Elem> xs, ys;
  bool exhaustive = d->cardinality().has_value() && *d->cardinality() <= 4096;
  if (exhaustive) {
    xs = d->elements();
    ys = e->elements();
  } else {
    Rng rng(o.seed);
    for (std::size_t s = 0; s < o.samples; ++s) {
      xs.push_back(d->random(rng));
      ys.push_back(e->random(rng));
    }
  }
  json body{{"exhaustive", exhaustive}, {"checked", xs.size() + ys.size()}};
  for (const auto& x : xs)
    if (double_iso_g(*d, *e, double_iso_f(*d, *e, x)) != x) {
      body["counterexample"] = "g(f(" + d->format(x) + ")) differs";
      break;
    }
  if (!body.contains("counterexample"))
    for (const auto& y : ys)
      if (double_iso_f(*d, *e, double_iso_g(*d, *e, y)) != y) {
        body["counterexample"] = "f(g(" + e->format(y) + ")) differs";
        break;
      }
  bool ok = !body.contains("counterexample");
  body["roundtrip"] = ok;
  return {body, ok};
}

Handler reduce_cmd(ReductionResult (*fn)(const FormParameter&, const Matrix&, const std::optional<Matrix>&)) {
  return [fn](const Options& o) {
    auto ring = ring_of(o);
    auto form = form_of(o, ring);
    Matrix m = matrix_of(o, *ring);
    auto res = fn(form, m, inverse_of(o, *ring));
    json body = reduction_to_json(*ring, res);
    bool ok = verify_reduction(form, m, res);
    body["verified"] = ok;
    return Outcome{body, ok};
  };
}

KopeikoData kopeiko_of(const Options& o, const Ring& ring) {
  if (o.data.empty()) missing("--data");
  return kopeiko_from_json(ring, parse_json_arg(o.data));
}

Outcome kopeiko_validate_cmd(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  int failing = kopeiko_failing_condition(form, kopeiko_of(o, *ring));
  json body{{"valid", failing == 0}};
  if (failing != 0) body["failingCondition"] = failing;
  return {body, failing == 0};
}

Outcome kopeiko_build(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  KopeikoData d = kopeiko_of(o, *ring);
  kopeiko_require(form, d);
  auto pf = poly_form(form);
  return {{{"ring", pf.ring->descriptor()}, {"matrix", matrix_to_json(*pf.ring, kopeiko_matrix(*pf.ring, d))}}, true};
}

Outcome kopeiko_reduce(const Options& o) {
  auto ring = ring_of(o);
  auto form = form_of(o, ring);
  auto kr = kopeiko_to_hyperbolic(form, kopeiko_of(o, *ring), o.bound);
  const auto& px = *kr.poly.ring;
  bool ok = verify_reduction(kr.poly.form, kr.matrix, kr.result);
  json body{{"ring", px.descriptor()}, {"matrix", matrix_to_json(px, kr.matrix)},
            {"reduction", reduction_to_json(px, kr.result)}, {"verified", ok}};
  return {body, ok};
}

std::shared_ptr<const TruncatedRing> truncated_of(const Options& o) { return make_truncated(ring_of(o), o.t); }

Outcome trunc_split_cmd(const Options& o) {
  auto rt = truncated_of(o);
  auto [c, q] = trunc_split(*rt, elem_of(*rt, o.p, "--p"), o.r);
  return {{{"constant", rt->base()->format(c)}, {"Q", rt->format(q)}}, true};
}

Outcome trunc_decomp(const Options& o) {
  auto rt = truncated_of(o);
  return {{{"a", elems_to_json(*rt->base(), trunc_product_decomp(*rt, elem_of(*rt, o.p, "--p")))}}, true};
}

Outcome trunc_descent(const Options& o) {
  auto rt = truncated_of(o);
  Elem q = torsion_descent(*rt, elem_of(*rt, o.u, "--u"), Int(o.k), o.r);
  return {{{"Q", rt->format(q)}}, true};
}

std::shared_ptr<const GradedRing> graded_of(const Options& o) { return make_graded(ring_of(o), o.top); }

Elem graded_arg(const GradedRing& g, const std::string& text, const char* flag) {
  if (text.empty()) missing(flag);
  std::string t = trim(read_arg(text));
  if (!t.empty() && t.front() == '{') return graded_from_json(g, parse_json_arg(t));
  return g.parse(t);
}

Outcome graded_eval(const Options& o) {
  auto g = graded_of(o);
  Elem v = plus_eval(*g, graded_arg(*g, o.b, "--b"), graded_arg(*g, o.a, "--a"));
  return {{{"value", graded_to_json(*g, v)}, {"text", g->format(v)}}, true};
}

Outcome graded_dilate(const Options& o) {
  auto g = graded_of(o);
  Matrix m = plus_eval_matrix(*g, matrix_of(o, *g), graded_arg(*g, o.a, "--a"));
  return {{{"matrix", matrix_to_json(*g, m)}, {"member", gq_member(*g, g->lambda(), m)}}, true};
}

Outcome verify_cmd(const Options& o) {
  std::vector<SuiteResult> results;
  if (o.suite != 0)
    results.push_back(run_suite(o.suite, o.seed));
  else
    results = run_all(o.seed, !o.sequential);
  json body = report_json(results, o.seed);
  return {body, body["status"] == "pass"};
}

// ---------------------------------------------------------------------------

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_table(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array()) return false;
    for (const auto& c : row)
      if (c.is_structured()) return false;
  }
  return true;
}

bool is_flat(const json& j) {
  for (const auto& v : j)
    if (v.is_structured()) return false;
  return true;
}

void render_table(std::ostream& os, const json& rows, int indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], cell(row[c]).size());
    }
  for (const auto& row : rows) {
    os << std::string(static_cast<std::size_t>(indent), ' ');
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cell(row[c]);
    os << '\n';
  }
}

}  // namespace

void render_pretty(std::ostream& os, const json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!j.is_structured()) {
    os << pad << cell(j) << '\n';
    return;
  }
  if (is_table(j)) {
    render_table(os, j, indent);
    return;
  }
  if (j.is_array()) {
    if (is_flat(j)) {
      os << pad;
      for (std::size_t k = 0; k < j.size(); ++k) os << (k ? ", " : "") << cell(j[k]);
      os << '\n';
      return;
    }
    for (const auto& item : j) {
      os << pad << "-\n";
      render_pretty(os, item, indent + 2);
    }
    return;
  }
  for (const auto& [key, val] : j.items()) {
    if (!val.is_structured()) {
      os << pad << key << ": " << cell(val) << '\n';
    } else if (val.is_array() && is_flat(val)) {
      os << pad << key << ": ";
      for (std::size_t k = 0; k < val.size(); ++k) os << (k ? ", " : "") << cell(val[k]);
      os << '\n';
    } else {
      os << pad << key << ":\n";
      render_pretty(os, val, indent + 2);
    }
  }
}

int run(int argc, const char* const* argv, std::ostream& out) {
  Options o;
  if (const char* env = std::getenv("FORMK1_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      out << error_json("ParseError", std::string("FORMK1_SEED is not an integer: ") + env).dump() << '\n';
      return kExitBadInput;
    }
  }

  CLI::App app{"Unitary groups over form rings: membership, certificates and reductions", "formk1"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", o.ring, "ring shorthand (Z, Z/4, (Z/5)[i], ...[X]), JSON descriptor or file");
  app.add_option("--lambda", o.lambda, "override lambda of the ring");
  app.add_option("--form", o.form, "form parameter: min, max or JSON (default max)");
  app.add_option("--ideal", o.ideal, "ideal generators, comma separated or JSON array");
  app.add_option("--matrix", o.matrix, "matrix JSON or file");
  app.add_option("--word", o.word, "elementary word JSON or file");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_flag("--pretty", o.pretty, "human readable output");
  app.add_option("--out", o.out, "write output to a file");
  app.add_option("--samples", o.samples, "samples for checks on large rings");

  std::map<const CLI::App*, Handler> handlers;
  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help, Handler h) {
    auto* c = parent->add_subcommand(name, help);
    c->fallthrough();
    handlers[c] = std::move(h);
    return c;
  };

  leaf(group("ring", "ring descriptors"), "check", "ring and involution axioms", ring_check);
  leaf(group("form", "form parameters"), "validate", "form parameter axioms", form_validate);

  auto* gq = group("gq", "quadratic group membership");
  leaf(gq, "member", "sigma* psi sigma = psi", gq_member_cmd);
  leaf(gq, "conditions", "the four lambda-quadratic conditions", gq_conditions);
  auto* gen = leaf(gq, "gen", "elementary generator matrix", gq_gen);
  gen->add_option("--n", o.n, "half size")->capture_default_str();
  gen->add_option("--family", o.family, "QE, QR or QL")->required();
  gen->add_option("--i", o.i, "1-based index")->capture_default_str();
  gen->add_option("--j", o.j, "1-based index")->capture_default_str();
  gen->add_option("--a", o.a, "parameter")->required();

  auto* word = group("word", "elementary words");
  leaf(word, "eval", "product of a word", word_eval_cmd)->add_option("--n", o.n, "half size when the word omits it");
  leaf(word, "lift", "lift a relative word to the excision ring", word_lift)
      ->add_option("--n", o.n, "half size when the word omits it");

  leaf(group("excision", "excision and double rings"), "roundtrip", "g(f(x)) = x and f(g(y)) = y",
       excision_roundtrip);

  auto* reduce = group("reduce", "reductions to hyperbolic form");
  for (auto [name, fn] : {std::pair{"upper", &reduce_upper}, std::pair{"lower", &reduce_lower},
                          std::pair{"corner", &reduce_invertible_corner}})
    leaf(reduce, name, "reduce and certify", reduce_cmd(fn))->add_option("--inverse", o.inverse, "inverse of the block");

  auto* kop = group("kopeiko", "nil representatives [a;b,c]_n");
  for (auto [name, fn] : {std::pair<const char*, Handler>{"validate", kopeiko_validate_cmd},
                          std::pair<const char*, Handler>{"build", kopeiko_build},
                          std::pair<const char*, Handler>{"reduce", kopeiko_reduce}}) {
    auto* c = leaf(kop, name, "", fn);
    c->add_option("--data", o.data, "{\"n\":..,\"a\":..,\"b\":..,\"c\":..}")->required();
    if (std::string(name) == "reduce") c->add_option("--bound", o.bound, "nilpotency search bound");
  }

  auto* trunc = group("trunc", "truncated polynomial rings R[X]/(X^{t+1})");
  auto* split = leaf(trunc, "split", "1+X^r P = (1+X^r c)(1+X^{r+1} Q)", trunc_split_cmd);
  auto* decomp = leaf(trunc, "decomp", "1+XP as a product of 1+a_i X^i", trunc_decomp);
  auto* descent = leaf(trunc, "descent", "torsion descent", trunc_descent);
  for (auto* c : {split, decomp, descent}) c->add_option("--t", o.t, "truncation degree")->capture_default_str();
  split->add_option("--p", o.p, "polynomial P")->required();
  split->add_option("--r", o.r)->capture_default_str();
  decomp->add_option("--p", o.p, "polynomial P")->required();
  descent->add_option("--u", o.u, "unit u = 1+X^r P")->required();
  descent->add_option("--k", o.k, "exponent base k")->capture_default_str();
  descent->add_option("--r", o.r)->capture_default_str();

  auto* graded = group("graded", "graded rings over the --ring base");
  auto* geval = leaf(graded, "eval", "b+(a)", graded_eval);
  auto* dilate = leaf(graded, "dilate", "entrywise b+(a) on a matrix", graded_dilate);
  for (auto* c : {geval, dilate}) {
    c->add_option("--top", o.top, "top degree")->capture_default_str();
    c->add_option("--a", o.a, "degree 0 point")->required();
  }
  geval->add_option("--b", o.b, "graded element")->required();

  auto* verify = app.add_subcommand("verify", "run the randomized property suites");
  verify->fallthrough();
  verify->add_option("--suite", o.suite, "run one suite by id")->check(CLI::Range(1, kSuiteCount));
  verify->add_flag("--sequential", o.sequential, "run suites one after another");
  handlers[verify] = verify_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("UsageError", e.what()).dump() << '\n';
    return kExitBadInput;
  }

  const CLI::App* chosen = nullptr;
  for (const auto& [cmd, h] : handlers)
    if (cmd->parsed()) chosen = cmd;
  if (chosen == nullptr) {
    out << error_json("UsageError", "no command given").dump() << '\n';
    return kExitBadInput;
  }

  json body;
  int code = kExitOk;
  try {
    Outcome res = handlers[chosen](o);
    body = std::move(res.body);
    if (!res.ok) code = kExitCheckFailed;
  } catch (const Error& e) {
    body = error_json(error_kind_name(e.kind()), e.what());
    if (e.kind() == ErrorKind::ConditionViolated) body["error"]["detail"] = e.detail();
    code = is_input_error(e.kind()) ? kExitBadInput : kExitCheckFailed;
  } catch (const json::exception& e) {
    body = error_json("ParseError", e.what());
    code = kExitBadInput;
  } catch (const std::exception& e) {
    body = error_json("InternalError", e.what());
    code = kExitCheckFailed;
  }

  std::ostringstream text;
  if (o.pretty)
    render_pretty(text, body);
  else
    text << body.dump() << '\n';
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      out << error_json("IoError", "cannot write " + o.out).dump() << '\n';
      return kExitBadInput;
    }
    file << text.str();
  }
  return code;
}

}  // namespace formk1::cli
