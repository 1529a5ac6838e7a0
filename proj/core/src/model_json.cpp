#include "vertexlab/model_json.hpp"

#include <fstream>

namespace vertexlab {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError(where + ": complex values must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json weights_to_json(const Weights16& wt) {
  json w = json::array(), v = json::array();
  for (int i = 0; i < 8; ++i) {
    w.push_back(complex_to_json(wt.w[i]));
    v.push_back(complex_to_json(wt.v[i]));
  }
  return json{{"w", w}, {"v", v}};
}

Weights16 weights_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": weights must be an object with w and v");
  Weights16 wt;
  for (const char* key : {"w", "v"}) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 8)
      throw SchemaError(where + "." + key + ": expected 8 complex entries");
    for (int i = 0; i < 8; ++i) {
      cplx z = complex_from_json(j[key][i], where + "." + key + "[" + std::to_string(i) + "]");
      (key[0] == 'w' ? wt.w : wt.v)[i] = z;
    }
  }
  return wt;
}

json spec_to_json(const LatticeSpec& spec) {
  json j;
  j["lattice"] = {{"rows", spec.rows},
                  {"cols", spec.cols},
                  {"staggering", staggering_name(spec.staggering)}};
  j["weights"] = weights_to_json(spec.cellA);
  if (spec.cellB) j["weights_bar"] = weights_to_json(*spec.cellB);
  if (spec.fugacities) {
    j["fugacities"] = {{"s_h", complex_to_json(spec.fugacities->s_h)},
                       {"s_v", complex_to_json(spec.fugacities->s_v)},
                       {"d_h", complex_to_json(spec.fugacities->d_h)},
                       {"d_v", complex_to_json(spec.fugacities->d_v)}};
  }
  return j;
}

LatticeSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("model: expected an object");
  if (!j.contains("lattice") || !j["lattice"].is_object())
    throw SchemaError("model.lattice: missing");
  const json& lat = j["lattice"];
  LatticeSpec spec;
  if (!lat.contains("rows") || !lat["rows"].is_number_integer())
    throw SchemaError("model.lattice.rows: expected integer");
  if (!lat.contains("cols") || !lat["cols"].is_number_integer())
    throw SchemaError("model.lattice.cols: expected integer");
  spec.rows = lat["rows"].get<int>();
  spec.cols = lat["cols"].get<int>();
  if (lat.contains("staggering")) {
    if (!lat["staggering"].is_string())
      throw SchemaError("model.lattice.staggering: expected string");
    auto st = staggering_from_name(lat["staggering"].get<std::string>());
    if (!st)
      throw SchemaError("model.lattice.staggering: must be one of "
                        "homogeneous|column|row|bipartite");
    spec.staggering = *st;
  }
  if (!j.contains("weights")) throw SchemaError("model.weights: missing");
  spec.cellA = weights_from_json(j["weights"], "model.weights");
  if (j.contains("weights_bar"))
    spec.cellB = weights_from_json(j["weights_bar"], "model.weights_bar");
  if (j.contains("fugacities")) {
    const json& f = j["fugacities"];
    if (!f.is_object()) throw SchemaError("model.fugacities: expected an object");
    BondFugacities fug;
    if (f.contains("s_h")) fug.s_h = complex_from_json(f["s_h"], "model.fugacities.s_h");
    if (f.contains("s_v")) fug.s_v = complex_from_json(f["s_v"], "model.fugacities.s_v");
    if (f.contains("d_h")) fug.d_h = complex_from_json(f["d_h"], "model.fugacities.d_h");
    if (f.contains("d_v")) fug.d_v = complex_from_json(f["d_v"], "model.fugacities.d_v");
    spec.fugacities = fug;
  }
  if (spec.rows < 1 || spec.cols < 1)
    throw SchemaError("model.lattice: rows and cols must be >= 1");
  if (spec.staggering != Staggering::homogeneous && !spec.cellB)
    throw SchemaError("model: staggered lattice requires weights_bar");
  return spec;
}

LatticeSpec spec_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("model parse error: ") + e.what());
  }
  return spec_from_json(j);
}

void spec_to_file(const LatticeSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << spec_to_json(spec).dump(2) << "\n";
}

}  // namespace vertexlab
