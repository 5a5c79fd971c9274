#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "diagsynth/angles.hpp"
#include "diagsynth/circuit.hpp"

namespace diagsynth {

inline constexpr const char* kVersion = "0.1.0";

// Circuit wire format:
//   {"n": int,
//    "topology": {"kind": "full"|"linear"|"circular"|"custom",
//                 "edges": [[a, b], ...]},   // custom only
//    "gates": [{"cx": [control, target]} |
//              {"phase": {"wire": w, "theta": float | {"sym": int}}}]}
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

Circuit read_circuit_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// Alpha file: JSON array of 2^n radians, index = basis state.
PhaseTargets read_alphas_file(const std::string& path);

// OpenQASM 3 listing of cx and p(theta); rejects symbolic angles.
std::string export_qasm(const Circuit& c);

std::uint64_t fnv1a64(const std::string& data);

// Reproducibility sidecar written next to every CLI output file.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> flags;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::string output_digest;
};

nlohmann::json manifest_to_json(const RunManifest& m);

}  // namespace diagsynth
