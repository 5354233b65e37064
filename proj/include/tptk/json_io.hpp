#ifndef TPTK_JSON_IO_HPP
#define TPTK_JSON_IO_HPP

#include <json.hpp>

#include "tptk/interval.hpp"
#include "tptk/rational.hpp"
#include "tptk/seqcore.hpp"

namespace tptk {

using Json = nlohmann::json;

// Rationals travel as strings: "p/q" or an integer string.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

std::vector<Rational> rationals_from_json(const Json& j);
Json rationals_to_json(const std::vector<Rational>& values);

// Enclosures as ["lo", "hi"] decimal string pairs.
Json interval_to_json(const Interval& value, int digits = 20);

// {"type":"explicit","coeffs":[...]}, {"type":"geometric","c":..,"beta":..},
// nested specs under "left"/"right"/"inner". Throws std::invalid_argument
// on unknown types or missing fields.
SequenceSpec spec_from_json(const Json& j);
Json spec_to_json(const SequenceSpec& spec);

SequenceSpec parse_spec(const std::string& text);

}  // namespace tptk

#endif
