#pragma once

#include <string>

#include <json.hpp>

#include "eoslab/norms.hpp"
#include "eoslab/psi.hpp"
#include "eoslab/space.hpp"

namespace eoslab {

using json = nlohmann::json;

/// Round-trippable descriptions of the analytic objects. Parametric kinds
/// are stored as {"kind": ..., "params": {...}}; tabulated objects store
/// their sample points.
json space_to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const json& j);

json psi_spec_to_json(const std::string& kind, const json& params);
PsiFunction psi_from_json(const json& j);

json n_spec_to_json(const std::string& kind, const json& params);
NFunction n_from_json(const json& j);

json norm_report_to_json(const NormReport& r);

void write_json(const json& j, const std::string& path);
json read_json(const std::string& path);

}  // namespace eoslab
