#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "formk1/elementary.hpp"
#include "formk1/kopeiko.hpp"
#include "formk1/reduction.hpp"

namespace formk1 {

/// Ring from a descriptor object, e.g.
///   {"kind":"ModularInt","m":4,"involution":"trivial","lambda":"3"}
/// Composite kinds nest their base under "base". A JSON string is read as
/// a shorthand (see parse_ring). Throws ParseError.
RingPtr ring_from_json(const nlohmann::json& j);

/// Shorthand or descriptor text: "Z", "Z/4", "(Z/5)[i]", any of those
/// followed by "[X]", or a JSON object. A non-empty `lambda` replaces the
/// descriptor's lambda on the innermost scalar ring.
RingPtr parse_ring(const std::string& text, const std::string& lambda = "");

/// {"mode":"min"} / {"mode":"max"} / {"mode":"explicit","elements":[...]},
/// plus {"mode":"poly"|"gamma_plus"|"lambda_prime","base":{...}} for the
/// extended parameters. Bare strings "min" and "max" are accepted.
FormParameter form_from_json(const RingPtr& ring, const nlohmann::json& j);
FormParameter parse_form(const RingPtr& ring, const std::string& text);

/// Array of generator strings, or a comma separated list.
Ideal parse_ideal(const RingPtr& ring, const std::string& text);
Ideal ideal_from_json(const RingPtr& ring, const nlohmann::json& j);
nlohmann::json ideal_to_json(const Ideal& ideal);

/// {"n":3,"entries":[[...]]} or a bare array of rows. "n" is half the size
/// and is only written for square matrices of even size.
Matrix matrix_from_json(const Ring& ring, const nlohmann::json& j);
nlohmann::json matrix_to_json(const Ring& ring, const Matrix& m);
nlohmann::json rows_to_json(const Ring& ring, const Matrix& m);

HVector vector_from_json(const Ring& ring, const nlohmann::json& j);
nlohmann::json vector_to_json(const Ring& ring, const HVector& v);

/// {"n":3,"factors":[{"family":"QE","i":1,"j":2,"a":"1"}, ...]}. Relative
/// factors are {"conjugator":{word},"core":{generator}}, block factors
/// {"block":"H"|"T12"|"T21","matrix":[[...]],"inverse":[[...]]}.
ElemWord word_from_json(const Ring& ring, const nlohmann::json& j, std::size_t default_n = 0);
nlohmann::json word_to_json(const Ring& ring, const ElemWord& w);

KopeikoData kopeiko_from_json(const Ring& ring, const nlohmann::json& j);
nlohmann::json kopeiko_to_json(const Ring& ring, const KopeikoData& d);

nlohmann::json reduction_to_json(const Ring& ring, const ReductionResult& r);

/// Graded element JSON {"components":{"0":"2","1":"3"}}; plain strings
/// are parsed in the ring's own syntax.
Elem graded_from_json(const GradedRing& g, const nlohmann::json& j);
nlohmann::json graded_to_json(const GradedRing& g, const Elem& x);

/// Reads a file when `text` names one, otherwise returns it unchanged.
std::string read_arg(const std::string& text);
nlohmann::json parse_json_arg(const std::string& text);

}  // namespace formk1
