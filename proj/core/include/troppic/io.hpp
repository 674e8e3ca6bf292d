#pragma once

// JSON file formats.
//
//   fan:        {"rank": n, "rays": [[..], ..], "max_cones": [[i, ..], ..]}
//   divisor:    {"fan": <path or inline fan>, "local_data":
//                  [{"cone": i, "coeff": "p/q", "exp": [..]}, ..]}
//   polynomial: [{"coeff": "p/q" | "-inf", "exp": [..]}, ..]
//               or {"cone": i, "terms": [..]} to pick a maximal-cone chart;
//               the bare list lives on the torus chart (zero cone).
//   cocycle:    {"pairs": [{"cones": [i, j], "value": [..]}, ..]}
//
// Integers are JSON numbers; values beyond 64 bits may be given as decimal
// strings and are written that way.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "troppic/divisor.hpp"
#include "troppic/fan.hpp"
#include "troppic/intlin.hpp"
#include "troppic/picard.hpp"
#include "troppic/tropoly.hpp"

namespace troppic::io {

using nlohmann::json;

/// Input that does not follow the schema (as opposed to well-formed input
/// describing an invalid object).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
json vector_to_json(const IntVector& v);
IntVector vector_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);

Fan fan_from_json(const json& j);
json fan_to_json(const Fan& fan);

/// The "fan" member, if present, is resolved relative to `base_dir`.
MonomialCartierDivisor divisor_from_json(const json& j, std::size_t lattice_rank);
std::optional<Fan> divisor_fan(const json& j, const std::filesystem::path& base_dir);
json divisor_to_json(const MonomialCartierDivisor& d);

TropRatPolynomial polynomial_from_json(const json& j, const Fan& fan);
/// Term list only; the chart is implied by context.
json polynomial_to_json(const TropRatPolynomial& p);

Cochain1 cochain_from_json(const json& j, const PicardComputation& pic);
json cochain_to_json(const Cochain1& c, const PicardComputation& pic);

json group_to_json(const FinGenAbGroup& g);
json complex_to_json(const CechComplex& cx);

}  // namespace troppic::io
