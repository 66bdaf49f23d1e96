#pragma once

// JSON encodings of characters, reports and structure-constant tables.
// Output uses insertion-ordered objects so that it is a deterministic
// function of the value.
//
// Structure-constant format:
//   {"basis": [{"label": "h1", "degree": 0, "parity": "even"}, ...],
//    "brackets": [[i, j, [[k, c], ...]], ...]}
// listing only nonzero [e_i, e_j] with i <= j. Coefficients are JSON integers
// when integral and "p/q" strings otherwise; both forms are accepted on input.

#include "svf/chars.hpp"
#include "svf/glsa.hpp"
#include "svf/models.hpp"
#include "svf/sections.hpp"
#include "svf/superfields.hpp"

#include <json.hpp>

namespace svf {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const DimInterval& d);
Json to_json(const Character& c);
Json to_json(const SectionReport& r);
Json to_json(const Assumptions& a);
Json to_json(const GradedDimReport& r);
Json to_json(const TransitivityVerdict& v);
Json to_json(const D0Structure& d);
Json to_json(const CotangentReport& r);
Json to_json(const InvariantComparison& c);
Json to_json(const SparseVector& v);

Json glsa_to_json(const GradedLSA& a);
/// Throws InvalidInput on malformed input (including failed validation).
GradedLSA glsa_from_json(const Json& j);

}  // namespace svf
