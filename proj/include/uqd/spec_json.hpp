#pragma once

#include <string_view>

#include <json.hpp>

#include "uqd/distribution.hpp"

namespace uqd {

// Distribution spec schema:
//   {"kind":"point","theta":[0.5,0.5]}
//   {"kind":"dirichlet","alpha":[2,2]}
//   {"kind":"interval_uniform","lo":0.3,"hi":0.7}
//   {"kind":"mixture","weights":[0.5,0.5],"components":[{...},{...}]}
//   {"kind":"ensemble","members":[[0.2,0.8],[0.8,0.2]]}
//
// Structural problems (bad JSON, missing or mistyped fields, unknown kind)
// throw ParseError; invariant violations throw ValidationError.

SecondOrderDistribution distribution_from_json(const nlohmann::json& spec);

SecondOrderDistribution parse_distribution(std::string_view text);

}  // namespace uqd
