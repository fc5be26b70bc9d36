#include "dfsim/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace dfsim {

namespace {

using nlohmann::json;

json number_or_null(double value) {
  if (std::isnan(value)) return nullptr;
  return round_sig12(value);
}

double number_or_nan(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (const cplx& v : m.entries()) {
    out.push_back({round_sig12(v.real()), round_sig12(v.imag())});
  }
  return out;
}

ComplexMatrix square_matrix_from_json(const json& j) {
  const std::size_t count = j.size();
  const auto dim = static_cast<std::size_t>(std::llround(
      std::sqrt(static_cast<double>(count))));
  if (dim * dim != count) {
    throw SimError("matrix JSON does not hold a square matrix");
  }
  std::vector<cplx> entries;
  entries.reserve(count);
  for (const json& pair : j) {
    entries.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return ComplexMatrix(dim, dim, std::move(entries));
}

}  // namespace

double round_sig12(double value) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::strtod(buffer, nullptr);
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Z:
      return "z";
    case GateKind::X:
      return "x";
    case GateKind::ZZ:
      return "zz";
  }
  throw SimError("to_string: unknown gate kind");
}

GateKind gate_kind_from_string(const std::string& s) {
  if (s == "z") return GateKind::Z;
  if (s == "x") return GateKind::X;
  if (s == "zz") return GateKind::ZZ;
  throw SimError("unknown gate kind '" + s + "' (expected z, x or zz)");
}

std::string to_string(Envelope env) {
  switch (env) {
    case Envelope::Constant:
      return "const";
    case Envelope::SinSquared:
      return "sin2";
  }
  throw SimError("to_string: unknown envelope");
}

Envelope envelope_from_string(const std::string& s) {
  if (s == "const") return Envelope::Constant;
  if (s == "sin2") return Envelope::SinSquared;
  throw SimError("unknown envelope '" + s + "' (expected const or sin2)");
}

json to_json(const CouplingConfig& config) {
  json jxy = json::array();
  for (const auto& [pair, value] : config.jxy) {
    jxy.push_back({pair.first, pair.second, round_sig12(value)});
  }
  json jzz = json::array();
  for (const auto& [pair, value] : config.jzz) {
    jzz.push_back({pair.first, pair.second, round_sig12(value)});
  }
  json jz = json::array();
  for (const auto& [site, value] : config.jz_local) {
    jz.push_back({site, round_sig12(value)});
  }
  return json{{"n_qubits", config.n_qubits},
              {"jxy", jxy},
              {"jzz", jzz},
              {"jz_local", jz}};
}

CouplingConfig coupling_config_from_json(const json& j) {
  CouplingConfig config;
  config.n_qubits = j.at("n_qubits").get<int>();
  for (const json& row : j.value("jxy", json::array())) {
    config.jxy[{row.at(0).get<int>(), row.at(1).get<int>()}] =
        row.at(2).get<double>();
  }
  for (const json& row : j.value("jzz", json::array())) {
    config.jzz[{row.at(0).get<int>(), row.at(1).get<int>()}] =
        row.at(2).get<double>();
  }
  for (const json& row : j.value("jz_local", json::array())) {
    config.jz_local[row.at(0).get<int>()] = row.at(1).get<double>();
  }
  config.validate();
  return config;
}

json to_json(const DfsEncoding& encoding) {
  json basis = json::array();
  for (const DfsBasisState& b : encoding.basis) {
    basis.push_back({{"label", b.label}, {"bits", b.bits}});
  }
  return json{{"n_qubits", encoding.n_qubits}, {"basis", basis}};
}

DfsEncoding dfs_encoding_from_json(const json& j) {
  DfsEncoding encoding;
  encoding.n_qubits = j.at("n_qubits").get<int>();
  for (const json& b : j.at("basis")) {
    encoding.basis.push_back(
        {b.at("label").get<std::string>(), b.at("bits").get<std::string>()});
  }
  encoding.validate();
  return encoding;
}

json to_json(const GateReport& report) {
  json cyclic = json::array();
  for (const CyclicPhase& phase : report.phases.states) {
    cyclic.push_back({{"state", phase.state_label},
                      {"total_phase", number_or_null(phase.total)},
                      {"dynamical_phase", number_or_null(phase.dynamical)},
                      {"geometric_phase", number_or_null(phase.geometric)},
                      {"ratio", number_or_null(phase.ratio)}});
  }
  const CyclicPhase& first = report.phases.states.front();
  json out{{"kind", to_string(report.spec.kind)},
           {"angle", round_sig12(report.spec.angle)},
           {"pulse_area", round_sig12(report.spec.pulse_area)},
           {"envelope", to_string(report.spec.envelope)},
           {"segments", report.spec.segments},
           {"total_phase", number_or_null(first.total)},
           {"dynamical_phase", number_or_null(first.dynamical)},
           {"geometric_phase", number_or_null(first.geometric)},
           {"ratio", number_or_null(first.ratio)},
           {"max_leakage", round_sig12(report.leakage.max_leakage)},
           {"logical_unitary", matrix_to_json(report.logical_unitary)},
           {"target_fidelity", round_sig12(report.target_fidelity)},
           {"cyclic_phases", cyclic}};
  if (report.entangling.has_value()) {
    out["entangling"] = *report.entangling;
  }
  return out;
}

GateReport gate_report_from_json(const json& j) {
  GateReport report;
  report.spec.kind = gate_kind_from_string(j.at("kind").get<std::string>());
  report.spec.angle = j.at("angle").get<double>();
  report.spec.pulse_area = j.at("pulse_area").get<double>();
  report.spec.envelope =
      envelope_from_string(j.at("envelope").get<std::string>());
  report.spec.segments = j.value("segments", kDefaultSegments);
  report.logical_unitary = square_matrix_from_json(j.at("logical_unitary"));
  report.target_fidelity = j.at("target_fidelity").get<double>();
  report.leakage.max_leakage = j.at("max_leakage").get<double>();
  if (j.contains("cyclic_phases")) {
    for (const json& p : j.at("cyclic_phases")) {
      CyclicPhase phase;
      phase.state_label = p.at("state").get<std::string>();
      phase.total = number_or_nan(p.at("total_phase"));
      phase.dynamical = number_or_nan(p.at("dynamical_phase"));
      phase.geometric = number_or_nan(p.at("geometric_phase"));
      phase.ratio = number_or_nan(p.at("ratio"));
      report.phases.states.push_back(std::move(phase));
    }
  } else {
    CyclicPhase phase;
    phase.total = number_or_nan(j.at("total_phase"));
    phase.dynamical = number_or_nan(j.at("dynamical_phase"));
    phase.geometric = number_or_nan(j.at("geometric_phase"));
    phase.ratio = number_or_nan(j.at("ratio"));
    report.phases.states.push_back(std::move(phase));
  }
  if (j.contains("entangling")) {
    report.entangling = j.at("entangling").get<bool>();
  }
  return report;
}

}  // namespace dfsim
