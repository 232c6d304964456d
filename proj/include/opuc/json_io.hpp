#ifndef OPUC_JSON_IO_HPP
#define OPUC_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <variant>

#include "opuc/cmv.hpp"
#include "opuc/periodic.hpp"
#include "opuc/szego_map.hpp"

namespace opuc {

using nlohmann::json;

/// Complex numbers are written as [re, im]; plain numbers and {"re","im"} are also accepted on input.
json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const json& j);
json cvector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd cvector_from_json(const json& j);

json to_json(const CircleMeasure& mu);
json to_json(const MomentSeq<double>& c);
json to_json(const VerblunskySeq<double>& a);
json to_json(const ComplexPoly<double>& p);
json to_json(const JacobiParams& j);
json to_json(const BandStructure& bs);
/// Nonzero entries {"row","col","value"} of the N x N truncation.
json to_json(const CMVMatrix<double>& c);

CircleMeasure measure_from_json(const json& j);
MomentSeq<double> moments_from_json(const json& j);
VerblunskySeq<double> verblunsky_from_json(const json& j);
JacobiParams jacobi_from_json(const json& j);

/// Input documents are recognized by their keys: "alphas", "grid_size", or "a" and "b".
using InputDoc = std::variant<VerblunskySeq<double>, CircleMeasure, JacobiParams>;
InputDoc parse_input(const json& j);

}  // namespace opuc

#endif  // OPUC_JSON_IO_HPP
