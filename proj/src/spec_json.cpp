#include "uqd/spec_json.hpp"

#include <string>
#include <vector>

#include "uqd/error.hpp"

namespace uqd {

namespace {

using nlohmann::json;

const json& field(const json& spec, const char* name) {
    const auto it = spec.find(name);
    if (it == spec.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

double number(const json& value, const char* name) {
    if (!value.is_number()) throw ParseError(std::string("field '") + name + "' must be a number");
    return value.get<double>();
}

std::vector<double> numbers(const json& value, const char* name) {
    if (!value.is_array()) throw ParseError(std::string("field '") + name + "' must be an array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (const auto& v : value) out.push_back(number(v, name));
    return out;
}

SecondOrderDistribution parse(const json& spec, int depth) {
    if (!spec.is_object()) throw ParseError("distribution spec must be a JSON object");
    const json& kind_field = field(spec, "kind");
    if (!kind_field.is_string()) throw ParseError("field 'kind' must be a string");
    const auto kind = kind_field.get<std::string>();

    if (kind == "point") {
        return SecondOrderDistribution::point(Categorical(numbers(field(spec, "theta"), "theta")));
    }
    if (kind == "dirichlet") {
        return SecondOrderDistribution::dirichlet(numbers(field(spec, "alpha"), "alpha"));
    }
    if (kind == "interval_uniform") {
        return SecondOrderDistribution::interval_uniform(number(field(spec, "lo"), "lo"),
                                                         number(field(spec, "hi"), "hi"));
    }
    if (kind == "ensemble") {
        const json& members = field(spec, "members");
        if (!members.is_array()) throw ParseError("field 'members' must be an array of probability vectors");
        std::vector<Categorical> parsed;
        parsed.reserve(members.size());
        for (const auto& m : members) parsed.emplace_back(numbers(m, "members"));
        return SecondOrderDistribution::ensemble(std::move(parsed));
    }
    if (kind == "mixture") {
        if (depth >= kMaxMixtureDepth) {
            throw ValidationError(ValidationKind::InvalidParameter,
                                  "mixture nesting deeper than " + std::to_string(kMaxMixtureDepth));
        }
        const json& components = field(spec, "components");
        if (!components.is_array()) throw ParseError("field 'components' must be an array");
        std::vector<SecondOrderDistribution> parsed;
        parsed.reserve(components.size());
        for (const auto& c : components) parsed.push_back(parse(c, depth + 1));
        return SecondOrderDistribution::mixture(numbers(field(spec, "weights"), "weights"), std::move(parsed));
    }
    throw ParseError("unknown distribution kind '" + kind + "'");
}

}  // namespace

SecondOrderDistribution distribution_from_json(const nlohmann::json& spec) {
    return parse(spec, 0);
}

SecondOrderDistribution parse_distribution(std::string_view text) {
    json spec;
    try {
        spec = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    return distribution_from_json(spec);
}

}  // namespace uqd
