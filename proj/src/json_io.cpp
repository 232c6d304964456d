#include "opuc/json_io.hpp"

namespace opuc {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("json: missing key \"") + key + "\"");
  return j.at(key);
}

Eigen::VectorXd real_vector(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string("json: ") + what + " must be an array");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw DomainError(std::string("json: ") + what + " entries must be numbers");
    v(i) = j[i].get<double>();
  }
  return v;
}

json real_vector_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

}  // namespace

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
  throw DomainError("json: expected a complex number as [re, im]");
}

json cvector_to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Eigen::VectorXcd cvector_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("json: expected an array of complex numbers");
  Eigen::VectorXcd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

json to_json(const CircleMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"theta", a.theta}, {"mass", a.mass}});
  return {{"grid_size", mu.grid_size()}, {"ac_weight", real_vector_json(mu.ac_weight())}, {"point_masses", atoms}};
}

json to_json(const MomentSeq<double>& c) { return {{"c", cvector_to_json(c.values())}}; }

json to_json(const VerblunskySeq<double>& a) {
  return {{"alphas", cvector_to_json(a.alphas())}, {"terminal_unimodular", a.terminal()}};
}

// coefficient list, low to high
json to_json(const ComplexPoly<double>& p) { return cvector_to_json(p.coeffs()); }

json to_json(const JacobiParams& j) { return {{"a", real_vector_json(j.a)}, {"b", real_vector_json(j.b)}}; }

json to_json(const BandStructure& bs) {
  json bands = json::array(), merged = json::array(), gaps = json::array();
  for (std::size_t i = 0; i < bs.bands.size(); ++i)
    bands.push_back({{"x", bs.bands[i].x}, {"y", bs.bands[i].y}, {"mass", bs.band_masses[i]}});
  for (const auto& a : bs.merged) merged.push_back({{"x", a.x}, {"y", a.y}});
  for (const auto& a : bs.gaps) gaps.push_back({{"x", a.x}, {"y", a.y}});
  return {{"bands", bands}, {"merged", merged}, {"gaps", gaps}};
}

json to_json(const CMVMatrix<double>& c) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < c.n; ++i)
    for (Eigen::Index k = 0; k < c.n; ++k)
      if (c.dense(i, k) != 0.0) entries.push_back({{"row", i}, {"col", k}, {"value", complex_to_json(c.dense(i, k))}});
  return {{"n", c.n}, {"order", c.order == CmvOrder::LM ? "LM" : "ML"}, {"entries", entries}};
}

CircleMeasure measure_from_json(const json& j) {
  const auto m = require(j, "grid_size").get<Eigen::Index>();
  Eigen::VectorXd w = j.contains("ac_weight") ? real_vector(j.at("ac_weight"), "ac_weight") : Eigen::VectorXd::Zero(m);
  std::vector<PointMass> atoms;
  if (j.contains("point_masses")) {
    for (const auto& a : j.at("point_masses")) atoms.push_back({require(a, "theta").get<double>(), require(a, "mass").get<double>()});
  }
  return CircleMeasure(m, std::move(w), std::move(atoms));
}

MomentSeq<double> moments_from_json(const json& j) { return MomentSeq<double>(cvector_from_json(require(j, "c"))); }

VerblunskySeq<double> verblunsky_from_json(const json& j) {
  const bool term = j.value("terminal_unimodular", j.value("terminal", false));
  return VerblunskySeq<double>(cvector_from_json(require(j, "alphas")), term);
}

JacobiParams jacobi_from_json(const json& j) {
  return JacobiParams(real_vector(require(j, "a"), "a"), real_vector(require(j, "b"), "b"));
}

InputDoc parse_input(const json& j) {
  if (!j.is_object()) throw DomainError("json: input must be an object");
  if (j.contains("alphas")) return verblunsky_from_json(j);
  if (j.contains("grid_size")) return measure_from_json(j);
  if (j.contains("a") && j.contains("b")) return jacobi_from_json(j);
  throw DomainError("json: input matches none of VerblunskySeq, CircleMeasure, JacobiParams");
}

}  // namespace opuc
