#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "vertexlab/lattice.hpp"

namespace vertexlab {

using json = nlohmann::json;

// Malformed model documents (wrong shape, wrong types, bad enum values).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex values are [re, im] pairs everywhere.
json complex_to_json(const cplx& z);
cplx complex_from_json(const json& j, const std::string& where);

json weights_to_json(const Weights16& wt);
Weights16 weights_from_json(const json& j, const std::string& where);

// {"lattice":{"rows":M,"cols":N,"staggering":"homogeneous"},
//  "weights":{"w":[[re,im]x8],"v":[[re,im]x8]},
//  "weights_bar": optional second cell, "fugacities": optional}
json spec_to_json(const LatticeSpec& spec);
LatticeSpec spec_from_json(const json& j);

LatticeSpec spec_from_file(const std::string& path);
void spec_to_file(const LatticeSpec& spec, const std::string& path);

}  // namespace vertexlab
