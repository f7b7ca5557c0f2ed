#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "macic/detmodel.hpp"
#include "macic/dmeval.hpp"
#include "macic/fme.hpp"
#include "macic/gaussian.hpp"
#include "macic/polytope.hpp"
#include "macic/set_function_table.hpp"

namespace macic::io {

using nlohmann::json;

/// Input JSON that is well formed but does not match the expected schema.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"fraction": "1/3", "decimal": 0.333...}
json rational_json(const Rational& x);
/// Accepts a fraction string, a number, or a {"fraction": ...} object.
Rational rational_from_json(const json& j);

/// Accepts either
///   {"Ka", "Kb", "snr_db": {"a": [...], "b": [...]}, "inr_db": {"a0_to_b", "b0_to_a"}}
/// or
///   {"Ka", "Kb", "gain": {"a", "b"}, "power": {"a", "b"}, "cross_gain": {"a0_to_b", "b0_to_a"}}.
gaussian::Channel channel_from_json(const json& j);
/// dB form.
json channel_to_json(const gaussian::Channel& ch);

json inequality_to_json(const LinearInequality& q);
json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json system_to_json(const fme::LinearSystem& s);
fme::LinearSystem system_from_json(const json& j);

json table_to_json(const SetFunctionTable& t);
json table_to_json(const RealSetFunctionTable& t);
SetFunctionTable table_from_json(const json& j);

json distribution_to_json(const dm::Distribution& d);
dm::Distribution distribution_from_json(const json& j);
json sd_channel_to_json(const dm::SdChannel& ch);
dm::SdChannel sd_channel_from_json(const json& j);

json allocation_to_json(const det::Allocation& a);
json gap_report_to_json(const gaussian::GapReport& r);

}  // namespace macic::io
