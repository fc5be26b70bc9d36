#pragma once
// JSON representations of the externally visible types. All floating-point
// values are rounded to 12 significant digits before emission, so emitted
// documents re-parse to identical values.

#include <string>

#include <json.hpp>

#include "dfsim/dfs.hpp"
#include "dfsim/hamiltonian.hpp"
#include "dfsim/protocol.hpp"

namespace dfsim {

double round_sig12(double value);

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& s);
std::string to_string(Envelope env);
Envelope envelope_from_string(const std::string& s);

nlohmann::json to_json(const CouplingConfig& config);
CouplingConfig coupling_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DfsEncoding& encoding);
DfsEncoding dfs_encoding_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GateReport& report);
GateReport gate_report_from_json(const nlohmann::json& j);

}  // namespace dfsim
