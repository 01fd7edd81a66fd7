#include "formk1/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "formk1/matrix.hpp"

namespace formk1 {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParameterNotInIdeal: return "ParameterNotInIdeal";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::NotCongruent: return "NotCongruent";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::KNotInvertible: return "KNotInvertible";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::DegreeError: return "DegreeError";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

std::string_view ring_kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::Integers: return "Integers";
    case RingKind::ModularInt: return "ModularInt";
    case RingKind::GaussianModular: return "GaussianModular";
    case RingKind::Polynomial: return "Polynomial";
    case RingKind::TruncatedPolynomial: return "TruncatedPolynomial";
    case RingKind::Excision: return "Excision";
    case RingKind::Double: return "Double";
    case RingKind::Graded: return "Graded";
    case RingKind::Matrix: return "Matrix";
  }
  return "Unknown";
}

std::string_view involution_name(Involution inv) {
  switch (inv) {
    case Involution::Trivial: return "trivial";
    case Involution::Conjugation: return "conjugation";
    case Involution::Componentwise: return "componentwise";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Text helpers

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

namespace {

/// Split a sum into signed terms at top-level '+' / '-'. Each returned term
/// keeps its leading '-' if any.
std::vector<std::string> split_terms(std::string_view s) {
  std::string text;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && !cur.empty() && cur.back() != '^') {
      out.push_back(cur);
      cur.clear();
      if (c == '-') cur.push_back('-');
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) fail(ErrorKind::ParseError, "empty expression");
  return out;
}

std::string strip_parens(const std::string& s, char open = '(', char close = ')') {
  if (s.size() >= 2 && s.front() == open && s.back() == close) {
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == open) ++depth;
      if (s[k] == close) --depth;
      if (depth == 0 && k + 1 < s.size()) return s;  // "(a)+(b)" is not wrapped
    }
    return s.substr(1, s.size() - 2);
  }
  return s;
}

bool needs_parens(const std::string& s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-' || s[k] == ',' || s[k] == '|') return true;
  return false;
}

Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

Int egcd_inverse(const Int& a, const Int& m) {
  // Returns 0 when not invertible.
  Int old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return 0;
  return mod_floor(old_s, m);
}

std::string int_str(const Int& x) { return x.str(); }

/// All tuples over `base_elems` of length `len`, first coordinate slowest.
std::vector<std::vector<Elem>> tuples(const std::vector<Elem>& base_elems, std::size_t len) {
  std::vector<std::vector<Elem>> out{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::vector<Elem>> next;
    next.reserve(out.size() * base_elems.size());
    for (const auto& prefix : out)
      for (const auto& e : base_elems) {
        auto t = prefix;
        t.push_back(e);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

void require_enumerable(const Ring& r) {
  if (!r.enumerable())
    fail(ErrorKind::Undecidable, "ring " + r.name() + " is too large or infinite to enumerate");
}

}  // namespace

Int parse_int(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) fail(ErrorKind::ParseError, "empty integer");
  std::size_t k = 0;
  if (t[0] == '-' || t[0] == '+') k = 1;
  if (k == t.size()) fail(ErrorKind::ParseError, "malformed integer '" + t + "'");
  for (std::size_t j = k; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j])))
      fail(ErrorKind::ParseError, "malformed integer '" + t + "'");
  Int v(t.substr(k));
  return t[0] == '-' ? Int(-v) : v;
}

// ---------------------------------------------------------------------------
// Ring defaults

std::vector<Elem> Ring::elements() const {
  fail(ErrorKind::Undecidable, "ring " + name() + " cannot be enumerated");
}

Elem Ring::pow(const Elem& a, const Int& exponent) const {
  if (exponent < 0) fail(ErrorKind::BadParameter, "negative exponent");
  Elem result = one();
  Elem base = a;
  Int e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool Ring::enumerable() const {
  auto c = cardinality();
  return c && *c <= kEnumerationLimit;
}

std::optional<unsigned> Ring::nilpotency_index(const Elem& a, unsigned bound) const {
  Elem x = a;
  for (unsigned k = 1; k <= bound; ++k) {
    if (is_zero(x)) return k;
    x = mul(x, a);
  }
  return std::nullopt;
}

bool Ring::is_central(const Elem& a) const {
  if (is_commutative()) return true;
  if (enumerable()) {
    for (const auto& x : elements())
      if (!(mul(a, x) == mul(x, a))) return false;
    return true;
  }
  if (kind() == RingKind::Matrix) {
    // Central in M_r(R) iff commuting with every matrix unit.
    const auto& mr = static_cast<const MatrixRing&>(*this);
    std::size_t r = mr.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Elem unit = mr.zero();
        unit.parts[i * r + j] = mr.base()->one();
        if (!(mul(a, unit) == mul(unit, a))) return false;
      }
    return true;
  }
  fail(ErrorKind::Undecidable, "centrality is not decidable in " + name());
}

// ---------------------------------------------------------------------------
// Z

IntegerRing::IntegerRing(Int lambda) { lambda_ = Elem::scalar(std::move(lambda)); }

std::optional<Elem> IntegerRing::inverse(const Elem& a) const {
  if (a.v == 1 || a.v == -1) return a;
  return std::nullopt;
}

bool IntegerRing::contains(const Elem& a) const { return a.w == 0 && a.parts.empty(); }

Elem IntegerRing::random(Rng& rng) const { return Elem::scalar(draw_range(rng, -9, 9)); }

std::string IntegerRing::format(const Elem& a) const { return int_str(a.v); }

Elem IntegerRing::parse(std::string_view text) const { return Elem::scalar(parse_int(strip_parens(trim(text)))); }

nlohmann::json IntegerRing::descriptor() const {
  return {{"kind", "Integers"}, {"involution", "trivial"}, {"lambda", format(lambda_)}};
}

// ---------------------------------------------------------------------------
// Z/m

ModularRing::ModularRing(Int modulus, Int lambda) : m_(std::move(modulus)) {
  if (m_ < 2) fail(ErrorKind::BadParameter, "modulus must be at least 2");
  lambda_ = reduce(lambda);
}

Elem ModularRing::reduce(const Int& x) const { return Elem::scalar(mod_floor(x, m_)); }

std::string ModularRing::name() const { return "Z/" + int_str(m_); }

std::optional<Elem> ModularRing::inverse(const Elem& a) const {
  Int inv = egcd_inverse(a.v, m_);
  if (inv == 0 && m_ != 1) return std::nullopt;
  return Elem::scalar(inv);
}

bool ModularRing::contains(const Elem& a) const {
  return a.w == 0 && a.parts.empty() && a.v >= 0 && a.v < m_;
}

std::vector<Elem> ModularRing::elements() const {
  require_enumerable(*this);
  std::vector<Elem> out;
  for (Int k = 0; k < m_; ++k) out.push_back(Elem::scalar(k));
  return out;
}

Elem ModularRing::random(Rng& rng) const {
  return Elem::scalar(Int(draw(rng, static_cast<std::uint64_t>(m_))));
}

std::string ModularRing::format(const Elem& a) const { return int_str(a.v); }

Elem ModularRing::parse(std::string_view text) const { return reduce(parse_int(strip_parens(trim(text)))); }

nlohmann::json ModularRing::descriptor() const {
  return {{"kind", "ModularInt"}, {"m", static_cast<long long>(m_)}, {"involution", "trivial"},
          {"lambda", format(lambda_)}};
}

// ---------------------------------------------------------------------------
// (Z/m)[i]

GaussianRing::GaussianRing(Int modulus, const Elem& lambda) : m_(std::move(modulus)) {
  if (m_ < 2) fail(ErrorKind::BadParameter, "modulus must be at least 2");
  lambda_ = make(lambda.v, lambda.w);
}

Elem GaussianRing::make(const Int& re, const Int& im) const {
  return Elem::gaussian(mod_floor(re, m_), mod_floor(im, m_));
}

std::string GaussianRing::name() const { return "(Z/" + int_str(m_) + ")[i]"; }

std::optional<Elem> GaussianRing::inverse(const Elem& a) const {
  Int norm = mod_floor(a.v * a.v + a.w * a.w, m_);
  Int ninv = egcd_inverse(norm, m_);
  if (ninv == 0) return std::nullopt;
  return make(a.v * ninv, -a.w * ninv);
}

bool GaussianRing::contains(const Elem& a) const {
  return a.parts.empty() && a.v >= 0 && a.v < m_ && a.w >= 0 && a.w < m_;
}

std::vector<Elem> GaussianRing::elements() const {
  require_enumerable(*this);
  std::vector<Elem> out;
  for (Int re = 0; re < m_; ++re)
    for (Int im = 0; im < m_; ++im) out.push_back(Elem::gaussian(re, im));
  return out;
}

Elem GaussianRing::random(Rng& rng) const {
  auto m = static_cast<std::uint64_t>(m_);
  Int re(draw(rng, m));
  Int im(draw(rng, m));
  return Elem::gaussian(re, im);
}

std::string GaussianRing::format(const Elem& a) const {
  std::string im;
  if (a.w != 0) im = (a.w == 1 ? std::string() : int_str(a.w)) + "i";
  if (a.w == 0) return int_str(a.v);
  if (a.v == 0) return im;
  return int_str(a.v) + "+" + im;
}

Elem GaussianRing::parse(std::string_view text) const {
  Int re = 0, im = 0;
  for (const auto& term : split_terms(strip_parens(trim(text)))) {
    std::string t = strip_parens(term);
    if (!t.empty() && t.back() == 'i') {
      std::string c = t.substr(0, t.size() - 1);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (c.empty() || c == "+") im += 1;
      else if (c == "-") im -= 1;
      else im += parse_int(c);
    } else {
      re += parse_int(t);
    }
  }
  return make(re, im);
}

nlohmann::json GaussianRing::descriptor() const {
  return {{"kind", "GaussianModular"}, {"m", static_cast<long long>(m_)},
          {"involution", "conjugation"}, {"lambda", format(lambda_)}};
}

// ---------------------------------------------------------------------------
// Coefficient rings

Elem CoefficientRing::coeff(const Elem& a, std::size_t k) const {
  return k < a.parts.size() ? a.parts[k] : base_->zero();
}

long CoefficientRing::degree(const Elem& a) const {
  for (std::size_t k = a.parts.size(); k-- > 0;)
    if (!base_->is_zero(a.parts[k])) return static_cast<long>(k);
  return -1;
}

Elem CoefficientRing::monomial(const Elem& c, std::size_t k) const {
  std::vector<Elem> cs(k + 1, base_->zero());
  cs[k] = c;
  return from_coeffs(std::move(cs));
}

Elem CoefficientRing::add(const Elem& a, const Elem& b) const {
  std::size_t n = std::max(a.parts.size(), b.parts.size());
  std::vector<Elem> cs;
  cs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) cs.push_back(base_->add(coeff(a, k), coeff(b, k)));
  return from_coeffs(std::move(cs));
}

Elem CoefficientRing::neg(const Elem& a) const {
  std::vector<Elem> cs;
  cs.reserve(a.parts.size());
  for (const auto& c : a.parts) cs.push_back(base_->neg(c));
  return from_coeffs(std::move(cs));
}

Elem CoefficientRing::conj(const Elem& a) const {
  std::vector<Elem> cs;
  cs.reserve(a.parts.size());
  for (const auto& c : a.parts) cs.push_back(base_->conj(c));
  return from_coeffs(std::move(cs));
}

std::vector<Elem> CoefficientRing::convolve(const Elem& a, const Elem& b, std::size_t limit,
                                            bool overflow_is_error) const {
  long da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return {};
  std::size_t full = static_cast<std::size_t>(da + db) + 1;
  std::size_t n = std::min(full, limit + 1);
  std::vector<Elem> cs(n, base_->zero());
  for (long i = 0; i <= da; ++i) {
    if (base_->is_zero(a.parts[i])) continue;
    for (long j = 0; j <= db; ++j) {
      std::size_t k = static_cast<std::size_t>(i + j);
      if (k > limit) {
        if (!overflow_is_error) break;
        if (!base_->is_zero(base_->mul(a.parts[i], b.parts[j]))) {
          // Overflow is only an error if the whole degree-k coefficient is nonzero.
          Elem total = base_->zero();
          for (long ii = std::max(0L, static_cast<long>(k) - db); ii <= std::min<long>(da, k); ++ii)
            total = base_->add(total, base_->mul(a.parts[ii], b.parts[k - ii]));
          if (!base_->is_zero(total))
            fail(ErrorKind::DegreeError,
                 "graded product exceeds top degree " + std::to_string(limit));
        }
        continue;
      }
      cs[k] = base_->add(cs[k], base_->mul(a.parts[i], b.parts[j]));
    }
  }
  return cs;
}

std::string CoefficientRing::format(const Elem& a) const {
  std::string out;
  for (std::size_t k = 0; k < a.parts.size(); ++k) {
    const Elem& c = a.parts[k];
    if (base_->is_zero(c)) continue;
    std::string cs = base_->format(c);
    std::string term;
    if (k == 0) {
      term = needs_parens(cs) ? "(" + cs + ")" : cs;
    } else {
      if (base_->is_one(c)) term = "";
      else if (cs == "-1") term = "-";
      else term = needs_parens(cs) ? "(" + cs + ")" : cs;
      term.push_back(var_);
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Elem CoefficientRing::parse(std::string_view text) const {
  std::string body = strip_parens(trim(text));
  std::vector<Elem> cs;
  for (auto term : split_terms(body)) {
    bool negative = false;
    if (!term.empty() && term[0] == '-') {
      negative = true;
      term.erase(0, 1);
    }
    // Locate the variable at nesting depth zero.
    int depth = 0;
    std::size_t var_pos = std::string::npos;
    for (std::size_t k = 0; k < term.size(); ++k) {
      char c = term[k];
      if (c == '(' || c == '[') ++depth;
      else if (c == ')' || c == ']') --depth;
      else if (c == var_ && depth == 0) var_pos = k;
    }
    std::size_t exponent = 0;
    std::string coef_text = term;
    if (var_pos != std::string::npos) {
      coef_text = term.substr(0, var_pos);
      std::string rest = term.substr(var_pos + 1);
      exponent = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') fail(ErrorKind::ParseError, "malformed monomial '" + term + "'");
        exponent = static_cast<std::size_t>(parse_int(rest.substr(1)));
      }
      if (!coef_text.empty() && coef_text.back() == '*') coef_text.pop_back();
    }
    Elem c = coef_text.empty() ? base_->one() : base_->parse(strip_parens(coef_text));
    if (negative) c = base_->neg(c);
    if (cs.size() <= exponent) cs.resize(exponent + 1, base_->zero());
    cs[exponent] = base_->add(cs[exponent], c);
  }
  return from_coeffs(std::move(cs));
}

// ---------------------------------------------------------------------------
// R[X]

PolynomialRing::PolynomialRing(RingPtr base, char var, unsigned random_degree)
    : CoefficientRing(std::move(base), var), random_degree_(random_degree) {
  lambda_ = from_coeffs({base_->lambda()});
}

Elem PolynomialRing::from_coeffs(std::vector<Elem> coeffs) const {
  while (!coeffs.empty() && base_->is_zero(coeffs.back())) coeffs.pop_back();
  return Elem::composite(std::move(coeffs));
}

Elem PolynomialRing::evaluate(const Elem& p, const Elem& x) const {
  Elem acc = base_->zero();
  for (std::size_t k = p.parts.size(); k-- > 0;) acc = base_->add(base_->mul(acc, x), p.parts[k]);
  return acc;
}

std::string PolynomialRing::name() const { return "(" + base_->name() + ")[" + std::string(1, var_) + "]"; }

Elem PolynomialRing::mul(const Elem& a, const Elem& b) const {
  return from_coeffs(convolve(a, b, static_cast<std::size_t>(-1) / 2, false));
}

std::optional<Elem> PolynomialRing::inverse(const Elem& a) const {
  if (degree(a) < 0) return std::nullopt;
  auto inv0 = base_->inverse(coeff(a, 0));
  if (!inv0) return std::nullopt;
  if (degree(a) == 0) return from_coeffs({*inv0});
  if (!base_->is_commutative() || base_->kind() == RingKind::Integers) return std::nullopt;
  // a = a0 (1 + a0^{-1} N) with N nilpotent iff a is a unit.
  Elem v = from_coeffs({*inv0});
  Elem tail = sub(a, from_coeffs({coeff(a, 0)}));
  Elem y = neg(mul(v, tail));
  Elem sum = zero(), term = one();
  for (unsigned k = 0; k < 64 && !is_zero(term); ++k) {
    sum = add(sum, term);
    term = mul(term, y);
  }
  if (!is_zero(term)) return std::nullopt;
  Elem inv = mul(sum, v);
  if (!is_one(mul(inv, a)) || !is_one(mul(a, inv))) return std::nullopt;
  return inv;
}

bool PolynomialRing::contains(const Elem& a) const {
  if (a.v != 0 || a.w != 0) return false;
  for (const auto& c : a.parts)
    if (!base_->contains(c)) return false;
  return a.parts.empty() || !base_->is_zero(a.parts.back());
}

Elem PolynomialRing::random(Rng& rng) const {
  std::size_t deg = draw(rng, random_degree_ + 1);
  std::vector<Elem> cs;
  for (std::size_t k = 0; k <= deg; ++k) cs.push_back(base_->random(rng));
  return from_coeffs(std::move(cs));
}

nlohmann::json PolynomialRing::descriptor() const {
  return {{"kind", "Polynomial"}, {"base", base_->descriptor()}, {"variable", std::string(1, var_)}};
}

// ---------------------------------------------------------------------------
// R_t

TruncatedRing::TruncatedRing(RingPtr base, unsigned t) : CoefficientRing(std::move(base), 'X'), t_(t) {
  lambda_ = from_coeffs({base_->lambda()});
}

Elem TruncatedRing::from_coeffs(std::vector<Elem> coeffs) const {
  coeffs.resize(t_ + 1, base_->zero());
  return Elem::composite(std::move(coeffs));
}

std::string TruncatedRing::name() const {
  return "(" + base_->name() + ")[X]/(X^" + std::to_string(t_ + 1) + ")";
}

Elem TruncatedRing::mul(const Elem& a, const Elem& b) const { return from_coeffs(convolve(a, b, t_, false)); }

std::optional<Elem> TruncatedRing::inverse(const Elem& a) const {
  auto inv0 = base_->inverse(coeff(a, 0));
  if (!inv0) return std::nullopt;
  Elem v = from_coeffs({*inv0});
  Elem tail = sub(a, from_coeffs({coeff(a, 0)}));
  Elem y = neg(mul(v, tail));
  Elem sum = zero(), term = one();
  for (unsigned k = 0; k <= t_; ++k) {
    sum = add(sum, term);
    term = mul(term, y);
  }
  Elem inv = mul(sum, v);
  if (!is_one(mul(inv, a)) || !is_one(mul(a, inv))) return std::nullopt;
  return inv;
}

bool TruncatedRing::contains(const Elem& a) const {
  if (a.v != 0 || a.w != 0 || a.parts.size() != t_ + 1) return false;
  return std::all_of(a.parts.begin(), a.parts.end(), [&](const Elem& c) { return base_->contains(c); });
}

std::optional<Int> TruncatedRing::cardinality() const {
  auto b = base_->cardinality();
  if (!b) return std::nullopt;
  return boost::multiprecision::pow(*b, t_ + 1);
}

std::vector<Elem> TruncatedRing::elements() const {
  require_enumerable(*this);
  std::vector<Elem> out;
  for (auto& t : tuples(base_->elements(), t_ + 1)) out.push_back(from_coeffs(std::move(t)));
  return out;
}

Elem TruncatedRing::random(Rng& rng) const {
  std::vector<Elem> cs;
  for (unsigned k = 0; k <= t_; ++k) cs.push_back(base_->random(rng));
  return from_coeffs(std::move(cs));
}

nlohmann::json TruncatedRing::descriptor() const {
  return {{"kind", "TruncatedPolynomial"}, {"base", base_->descriptor()}, {"t", t_}};
}

// ---------------------------------------------------------------------------
// Graded R0[Y]

GradedRing::GradedRing(RingPtr base, unsigned top_degree)
    : CoefficientRing(std::move(base), 'Y'), top_(top_degree) {
  lambda_ = from_coeffs({base_->lambda()});
}

Elem GradedRing::from_coeffs(std::vector<Elem> coeffs) const {
  for (std::size_t k = top_ + 1; k < coeffs.size(); ++k)
    if (!base_->is_zero(coeffs[k]))
      fail(ErrorKind::DegreeError, "component of degree " + std::to_string(k) +
                                       " exceeds top degree " + std::to_string(top_));
  coeffs.resize(top_ + 1, base_->zero());
  return Elem::composite(std::move(coeffs));
}

Elem GradedRing::component(const Elem& a, std::size_t k) const { return monomial(coeff(a, k), k); }

bool GradedRing::is_homogeneous(const Elem& a, std::size_t k) const {
  for (std::size_t j = 0; j < a.parts.size(); ++j)
    if (j != k && !base_->is_zero(a.parts[j])) return false;
  return true;
}

std::string GradedRing::name() const {
  return "(" + base_->name() + ")[Y]_{<=" + std::to_string(top_) + "}";
}

Elem GradedRing::mul(const Elem& a, const Elem& b) const { return from_coeffs(convolve(a, b, top_, true)); }

std::optional<Elem> GradedRing::inverse(const Elem& a) const {
  auto inv0 = base_->inverse(coeff(a, 0));
  if (!inv0) return std::nullopt;
  try {
    Elem v = from_coeffs({*inv0});
    Elem tail = sub(a, from_coeffs({coeff(a, 0)}));
    Elem y = neg(mul(v, tail));
    Elem sum = zero(), term = one();
    for (unsigned k = 0; k <= top_ + 1 && !is_zero(term); ++k) {
      sum = add(sum, term);
      term = mul(term, y);
    }
    if (!is_zero(term)) return std::nullopt;
    Elem inv = mul(sum, v);
    if (!is_one(mul(inv, a)) || !is_one(mul(a, inv))) return std::nullopt;
    return inv;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegreeError) return std::nullopt;
    throw;
  }
}

bool GradedRing::contains(const Elem& a) const {
  if (a.v != 0 || a.w != 0 || a.parts.size() != top_ + 1) return false;
  return std::all_of(a.parts.begin(), a.parts.end(), [&](const Elem& c) { return base_->contains(c); });
}

std::optional<Int> GradedRing::cardinality() const {
  auto b = base_->cardinality();
  if (!b) return std::nullopt;
  return boost::multiprecision::pow(*b, top_ + 1);
}

std::vector<Elem> GradedRing::elements() const {
  require_enumerable(*this);
  std::vector<Elem> out;
  for (auto& t : tuples(base_->elements(), top_ + 1)) out.push_back(from_coeffs(std::move(t)));
  return out;
}

Elem GradedRing::random(Rng& rng) const {
  std::size_t deg = draw(rng, top_ / 3 + 1);
  std::vector<Elem> cs;
  for (std::size_t k = 0; k <= deg; ++k) cs.push_back(base_->random(rng));
  return from_coeffs(std::move(cs));
}

nlohmann::json GradedRing::descriptor() const {
  return {{"kind", "Graded"}, {"base", base_->descriptor()}, {"topDegree", top_}};
}

// ---------------------------------------------------------------------------
// R (+) J

namespace {

std::pair<std::string, std::string> split_pair(std::string_view text, char sep, const char* what) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    fail(ErrorKind::ParseError, std::string("expected ") + what + ", got '" + t + "'");
  auto parts = split_top_level(std::string_view(t).substr(1, t.size() - 2), sep);
  if (parts.size() != 2) fail(ErrorKind::ParseError, std::string("expected ") + what + ", got '" + t + "'");
  return {parts[0], parts[1]};
}

nlohmann::json ideal_json(const Ideal& j) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : j.generators()) gens.push_back(j.ring()->format(g));
  return gens;
}

}  // namespace

ExcisionRing::ExcisionRing(RingPtr base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
  if (!ideal_.involution_invariant())
    fail(ErrorKind::PreconditionFailed, "ideal " + ideal_.format() + " is not involution-invariant");
  lambda_ = Elem::composite({base_->lambda(), base_->zero()});
}

Elem ExcisionRing::make(Elem r, Elem i) const {
  if (!ideal_.contains(i))
    fail(ErrorKind::ConstraintViolated, "second component " + base_->format(i) + " is not in " + ideal_.format());
  return Elem::composite({std::move(r), std::move(i)});
}

std::string ExcisionRing::name() const { return base_->name() + "(+)" + ideal_.format(); }
Elem ExcisionRing::zero() const { return Elem::composite({base_->zero(), base_->zero()}); }
Elem ExcisionRing::one() const { return Elem::composite({base_->one(), base_->zero()}); }
Elem ExcisionRing::from_int(const Int& k) const { return Elem::composite({base_->from_int(k), base_->zero()}); }

Elem ExcisionRing::add(const Elem& a, const Elem& b) const {
  return Elem::composite({base_->add(a.parts[0], b.parts[0]), base_->add(a.parts[1], b.parts[1])});
}
Elem ExcisionRing::neg(const Elem& a) const {
  return Elem::composite({base_->neg(a.parts[0]), base_->neg(a.parts[1])});
}
Elem ExcisionRing::mul(const Elem& a, const Elem& b) const {
  const Elem &r = a.parts[0], &i = a.parts[1], &s = b.parts[0], &j = b.parts[1];
  Elem second = base_->add(base_->add(base_->mul(r, j), base_->mul(i, s)), base_->mul(i, j));
  return Elem::composite({base_->mul(r, s), std::move(second)});
}
Elem ExcisionRing::conj(const Elem& a) const {
  return Elem::composite({base_->conj(a.parts[0]), base_->conj(a.parts[1])});
}

std::optional<Elem> ExcisionRing::inverse(const Elem& a) const {
  // Through D: (r, i) <-> (r, r+i), a unit iff both components are.
  auto u = base_->inverse(a.parts[0]);
  auto v = base_->inverse(base_->add(a.parts[0], a.parts[1]));
  if (!u || !v) return std::nullopt;
  return Elem::composite({*u, base_->sub(*v, *u)});
}

bool ExcisionRing::contains(const Elem& a) const {
  return a.parts.size() == 2 && a.v == 0 && a.w == 0 && base_->contains(a.parts[0]) &&
         base_->contains(a.parts[1]) && ideal_.contains(a.parts[1]);
}

std::optional<Int> ExcisionRing::cardinality() const {
  auto b = base_->cardinality();
  if (!b || !ideal_.is_finite()) return std::nullopt;
  return *b * Int(ideal_.elements().size());
}

std::vector<Elem> ExcisionRing::elements() const {
  require_enumerable(*this);
  std::vector<Elem> out;
  auto js = ideal_.elements();
  for (const auto& r : base_->elements())
    for (const auto& i : js) out.push_back(Elem::composite({r, i}));
  return out;
}

Elem ExcisionRing::random(Rng& rng) const {
  Elem r = base_->random(rng);
  return Elem::composite({std::move(r), ideal_.random_member(rng)});
}

std::string ExcisionRing::format(const Elem& a) const {
  return "(" + base_->format(a.parts[0]) + "," + base_->format(a.parts[1]) + ")";
}

Elem ExcisionRing::parse(std::string_view text) const {
  auto [r, i] = split_pair(text, ',', "excision pair (r,i)");
  return make(base_->parse(r), base_->parse(i));
}

nlohmann::json ExcisionRing::descriptor() const {
  return {{"kind", "Excision"}, {"base", base_->descriptor()}, {"ideal", ideal_json(ideal_)}};
}

// ---------------------------------------------------------------------------
// D

DoubleRing::DoubleRing(RingPtr base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
  if (!ideal_.involution_invariant())
    fail(ErrorKind::PreconditionFailed, "ideal " + ideal_.format() + " is not involution-invariant");
  lambda_ = Elem::composite({base_->lambda(), base_->lambda()});
}

Elem DoubleRing::make(Elem a, Elem b) const {
  if (!ideal_.contains(base_->sub(a, b)))
    fail(ErrorKind::ConstraintViolated, "(" + base_->format(a) + "|" + base_->format(b) +
                                            "): difference is not in " + ideal_.format());
  return Elem::composite({std::move(a), std::move(b)});
}

std::string DoubleRing::name() const { return "D(" + base_->name() + "," + ideal_.format() + ")"; }
Elem DoubleRing::zero() const { return Elem::composite({base_->zero(), base_->zero()}); }
Elem DoubleRing::one() const { return Elem::composite({base_->one(), base_->one()}); }
Elem DoubleRing::from_int(const Int& k) const {
  return Elem::composite({base_->from_int(k), base_->from_int(k)});
}
Elem DoubleRing::add(const Elem& a, const Elem& b) const {
  return Elem::composite({base_->add(a.parts[0], b.parts[0]), base_->add(a.parts[1], b.parts[1])});
}
Elem DoubleRing::neg(const Elem& a) const {
  return Elem::composite({base_->neg(a.parts[0]), base_->neg(a.parts[1])});
}
Elem DoubleRing::mul(const Elem& a, const Elem& b) const {
  return Elem::composite({base_->mul(a.parts[0], b.parts[0]), base_->mul(a.parts[1], b.parts[1])});
}
Elem DoubleRing::conj(const Elem& a) const {
  return Elem::composite({base_->conj(a.parts[0]), base_->conj(a.parts[1])});
}

std::optional<Elem> DoubleRing::inverse(const Elem& a) const {
  auto u = base_->inverse(a.parts[0]);
  auto v = base_->inverse(a.parts[1]);
  if (!u || !v) return std::nullopt;
  return Elem::composite({*u, *v});
}

bool DoubleRing::contains(const Elem& a) const {
  return a.parts.size() == 2 && a.v == 0 && a.w == 0 && base_->contains(a.parts[0]) &&
         base_->contains(a.parts[1]) && ideal_.contains(base_->sub(a.parts[0], a.parts[1]));
}

std::optional<Int> DoubleRing::cardinality() const {
  auto b = base_->cardinality();
  if (!b || !ideal_.is_finite()) return std::nullopt;
  return *b * Int(ideal_.elements().size());
}

std::vector<Elem> DoubleRing::elements() const {
  require_enumerable(*this);
  std::vector<Elem> out;
  auto js = ideal_.elements();
  for (const auto& a : base_->elements())
    for (const auto& j : js) out.push_back(Elem::composite({a, base_->add(a, j)}));
  return out;
}

Elem DoubleRing::random(Rng& rng) const {
  Elem a = base_->random(rng);
  Elem b = base_->add(a, ideal_.random_member(rng));
  return Elem::composite({std::move(a), std::move(b)});
}

std::string DoubleRing::format(const Elem& a) const {
  return "(" + base_->format(a.parts[0]) + "|" + base_->format(a.parts[1]) + ")";
}

Elem DoubleRing::parse(std::string_view text) const {
  auto [a, b] = split_pair(text, '|', "double pair (a|b)");
  return make(base_->parse(a), base_->parse(b));
}

nlohmann::json DoubleRing::descriptor() const {
  return {{"kind", "Double"}, {"base", base_->descriptor()}, {"ideal", ideal_json(ideal_)}};
}

// ---------------------------------------------------------------------------
// M_r(R)

MatrixRing::MatrixRing(RingPtr base, std::size_t size) : base_(std::move(base)), size_(size) {
  if (size_ == 0) fail(ErrorKind::BadParameter, "matrix ring size must be positive");
  lambda_ = from_int(0);
  for (std::size_t i = 0; i < size_; ++i) lambda_.parts[i * size_ + i] = base_->lambda();
}

std::string MatrixRing::name() const { return "M_" + std::to_string(size_) + "(" + base_->name() + ")"; }

Elem MatrixRing::zero() const { return Elem::composite(std::vector<Elem>(size_ * size_, base_->zero())); }

Elem MatrixRing::one() const { return from_int(1); }

Elem MatrixRing::from_int(const Int& k) const {
  Elem e = zero();
  for (std::size_t i = 0; i < size_; ++i) e.parts[i * size_ + i] = base_->from_int(k);
  return e;
}

Elem MatrixRing::add(const Elem& a, const Elem& b) const {
  Elem e = a;
  for (std::size_t k = 0; k < e.parts.size(); ++k) e.parts[k] = base_->add(a.parts[k], b.parts[k]);
  return e;
}

Elem MatrixRing::neg(const Elem& a) const {
  Elem e = a;
  for (auto& p : e.parts) p = base_->neg(p);
  return e;
}

Elem MatrixRing::mul(const Elem& a, const Elem& b) const {
  Elem e = zero();
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t k = 0; k < size_; ++k) {
      const Elem& aik = a.parts[i * size_ + k];
      if (base_->is_zero(aik)) continue;
      for (std::size_t j = 0; j < size_; ++j)
        e.parts[i * size_ + j] = base_->add(e.parts[i * size_ + j], base_->mul(aik, b.parts[k * size_ + j]));
    }
  return e;
}

Elem MatrixRing::conj(const Elem& a) const {
  Elem e = zero();
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) e.parts[i * size_ + j] = base_->conj(a.parts[j * size_ + i]);
  return e;
}

std::optional<Elem> MatrixRing::inverse(const Elem& a) const {
  Matrix m(size_, size_, base_->zero());
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) m(i, j) = a.parts[i * size_ + j];
  auto inv = mat_inverse(*base_, m);
  if (!inv) return std::nullopt;
  Elem e = zero();
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) e.parts[i * size_ + j] = (*inv)(i, j);
  return e;
}

bool MatrixRing::contains(const Elem& a) const {
  if (a.v != 0 || a.w != 0 || a.parts.size() != size_ * size_) return false;
  return std::all_of(a.parts.begin(), a.parts.end(), [&](const Elem& c) { return base_->contains(c); });
}

std::optional<Int> MatrixRing::cardinality() const {
  auto b = base_->cardinality();
  if (!b) return std::nullopt;
  return boost::multiprecision::pow(*b, static_cast<unsigned>(size_ * size_));
}

std::vector<Elem> MatrixRing::elements() const {
  require_enumerable(*this);
  std::vector<Elem> out;
  for (auto& t : tuples(base_->elements(), size_ * size_)) out.push_back(Elem::composite(std::move(t)));
  return out;
}

Elem MatrixRing::random(Rng& rng) const {
  Elem e = zero();
  for (auto& p : e.parts) p = base_->random(rng);
  return e;
}

std::string MatrixRing::format(const Elem& a) const {
  std::string out = "[";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < size_; ++j) {
      if (j) out += ",";
      out += base_->format(a.parts[i * size_ + j]);
    }
  }
  return out + "]";
}

Elem MatrixRing::parse(std::string_view text) const {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail(ErrorKind::ParseError, "expected matrix element [a,b;c,d], got '" + t + "'");
  auto rows = split_top_level(std::string_view(t).substr(1, t.size() - 2), ';');
  if (rows.size() != size_) fail(ErrorKind::ParseError, "wrong number of rows in '" + t + "'");
  Elem e = zero();
  for (std::size_t i = 0; i < size_; ++i) {
    auto cols = split_top_level(rows[i], ',');
    if (cols.size() != size_) fail(ErrorKind::ParseError, "wrong number of columns in '" + t + "'");
    for (std::size_t j = 0; j < size_; ++j) e.parts[i * size_ + j] = base_->parse(cols[j]);
  }
  return e;
}

nlohmann::json MatrixRing::descriptor() const {
  return {{"kind", "Matrix"}, {"base", base_->descriptor()}, {"size", size_}};
}

// ---------------------------------------------------------------------------
// Factories

RingPtr make_integers(Int lambda) { return std::make_shared<IntegerRing>(std::move(lambda)); }

RingPtr make_modular(Int modulus, Int lambda) {
  return std::make_shared<ModularRing>(std::move(modulus), std::move(lambda));
}

RingPtr make_gaussian(Int modulus, const std::string& lambda) {
  GaussianRing probe(modulus, Elem::gaussian(0, 0));
  return std::make_shared<GaussianRing>(std::move(modulus), probe.parse(lambda));
}

std::shared_ptr<const PolynomialRing> make_polynomial(RingPtr base, char var) {
  return std::make_shared<PolynomialRing>(std::move(base), var);
}

std::shared_ptr<const TruncatedRing> make_truncated(RingPtr base, unsigned t) {
  return std::make_shared<TruncatedRing>(std::move(base), t);
}

std::shared_ptr<const GradedRing> make_graded(RingPtr base, unsigned top_degree) {
  return std::make_shared<GradedRing>(std::move(base), top_degree);
}

std::shared_ptr<const ExcisionRing> make_excision(RingPtr base, Ideal ideal) {
  return std::make_shared<ExcisionRing>(std::move(base), std::move(ideal));
}

std::shared_ptr<const DoubleRing> make_double(RingPtr base, Ideal ideal) {
  return std::make_shared<DoubleRing>(std::move(base), std::move(ideal));
}

std::shared_ptr<const MatrixRing> make_matrix_ring(RingPtr base, std::size_t size) {
  return std::make_shared<MatrixRing>(std::move(base), size);
}

}  // namespace formk1
