#include "tptk/json_io.hpp"

#include <stdexcept>

namespace tptk {

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational encoded as a string");
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(rational_from_json(item));
    return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Json interval_to_json(const Interval& value, int digits) {
    return Json::array({value.lo_string(digits), value.hi_string(digits)});
}

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("spec is missing field \"") + name + "\"");
    return *it;
}

}  // namespace

SequenceSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
    std::string type = field(j, "type").get<std::string>();
    if (type == "explicit")
        return {ExplicitSpec{rationals_from_json(field(j, "coeffs"))}};
    if (type == "from_quotients")
        return {FromQuotientsSpec{rationals_from_json(field(j, "q")),
                                  rational_from_json(field(j, "a0")),
                                  rational_from_json(field(j, "a1"))}};
    if (type == "rational_gf")
        return {RationalGFSpec{rationals_from_json(field(j, "numerator")),
                               rational_from_json(field(j, "beta")),
                               field(j, "pole_order").get<int>()}};
    if (type == "aswe_finite")
        return {AsweFiniteSpec{rational_from_json(field(j, "c")),
                               field(j, "shift").get<int>(),
                               rationals_from_json(field(j, "alphas")),
                               rationals_from_json(field(j, "betas")),
                               rational_from_json(field(j, "gamma"))}};
    if (type == "partial_theta")
        return {PartialThetaSpec{rational_from_json(field(j, "a_squared"))}};
    if (type == "exponential") return {ExponentialSpec{}};
    if (type == "geometric")
        return {GeometricSpec{rational_from_json(field(j, "c")),
                              rational_from_json(field(j, "beta"))}};
    if (type == "hadamard")
        return {HadamardSpec{make_spec(spec_from_json(field(j, "left"))),
                             make_spec(spec_from_json(field(j, "right")))}};
    if (type == "remainder")
        return {RemainderSpec{make_spec(spec_from_json(field(j, "inner"))),
                              field(j, "l").get<int>()}};
    if (type == "derivative")
        return {DerivativeSpec{make_spec(spec_from_json(field(j, "inner")))}};
    throw std::invalid_argument("unknown spec type \"" + type + "\"");
}

Json spec_to_json(const SequenceSpec& spec) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            Json j;
            if constexpr (std::is_same_v<T, ExplicitSpec>) {
                j["type"] = "explicit";
                j["coeffs"] = rationals_to_json(s.coeffs);
            } else if constexpr (std::is_same_v<T, FromQuotientsSpec>) {
                j["type"] = "from_quotients";
                j["q"] = rationals_to_json(s.q);
                j["a0"] = to_string(s.a0);
                j["a1"] = to_string(s.a1);
            } else if constexpr (std::is_same_v<T, RationalGFSpec>) {
                j["type"] = "rational_gf";
                j["numerator"] = rationals_to_json(s.numerator);
                j["beta"] = to_string(s.beta);
                j["pole_order"] = s.pole_order;
            } else if constexpr (std::is_same_v<T, AsweFiniteSpec>) {
                j["type"] = "aswe_finite";
                j["c"] = to_string(s.c);
                j["shift"] = s.shift;
                j["alphas"] = rationals_to_json(s.alphas);
                j["betas"] = rationals_to_json(s.betas);
                j["gamma"] = to_string(s.gamma);
            } else if constexpr (std::is_same_v<T, PartialThetaSpec>) {
                j["type"] = "partial_theta";
                j["a_squared"] = to_string(s.a_squared);
            } else if constexpr (std::is_same_v<T, ExponentialSpec>) {
                j["type"] = "exponential";
            } else if constexpr (std::is_same_v<T, GeometricSpec>) {
                j["type"] = "geometric";
                j["c"] = to_string(s.c);
                j["beta"] = to_string(s.beta);
            } else if constexpr (std::is_same_v<T, HadamardSpec>) {
                j["type"] = "hadamard";
                j["left"] = spec_to_json(*s.left);
                j["right"] = spec_to_json(*s.right);
            } else if constexpr (std::is_same_v<T, RemainderSpec>) {
                j["type"] = "remainder";
                j["inner"] = spec_to_json(*s.inner);
                j["l"] = s.l;
            } else {
                static_assert(std::is_same_v<T, DerivativeSpec>);
                j["type"] = "derivative";
                j["inner"] = spec_to_json(*s.inner);
            }
            return j;
        },
        spec.value);
}

SequenceSpec parse_spec(const std::string& text) {
    Json j = Json::parse(text);
    return spec_from_json(j);
}

}  // namespace tptk
