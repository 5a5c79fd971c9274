#include "diagsynth/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace diagsynth {

using nlohmann::json;

json circuit_to_json(const Circuit& c) {
  json topo;
  topo["kind"] = topology_kind_name(c.topology.kind);
  if (c.topology.kind == TopologyKind::Custom) {
    json edges = json::array();
    for (const auto& [a, b] : c.topology.edges) edges.push_back({a, b});
    topo["edges"] = edges;
  }
  json gates = json::array();
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CX) {
      gates.push_back({{"cx", {g.control, g.target}}});
    } else if (g.symbolic) {
      gates.push_back({{"phase", {{"wire", g.wire}, {"theta", {{"sym", g.sym}}}}}});
    } else {
      gates.push_back({{"phase", {{"wire", g.wire}, {"theta", g.theta}}}});
    }
  }
  return json{{"n", c.n}, {"topology", topo}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
  int n = j.at("n").get<int>();
  const json& topo = j.at("topology");
  TopologyKind kind = parse_topology_kind(topo.at("kind").get<std::string>());
  Topology t;
  switch (kind) {
    case TopologyKind::Full: t = Topology::full(n); break;
    case TopologyKind::Linear: t = Topology::linear(n); break;
    case TopologyKind::Circular: t = Topology::circular(n); break;
    case TopologyKind::Custom: {
      std::vector<std::pair<int, int>> edges;
      for (const json& e : topo.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
      t = Topology::custom(n, std::move(edges));
      break;
    }
  }
  Circuit c(t);
  for (const json& g : j.at("gates")) {
    if (g.contains("cx")) {
      c.add_cx(g.at("cx").at(0).get<int>(), g.at("cx").at(1).get<int>());
    } else if (g.contains("phase")) {
      const json& p = g.at("phase");
      int wire = p.at("wire").get<int>();
      const json& theta = p.at("theta");
      if (theta.is_object()) {
        c.add_phase_sym(wire, theta.at("sym").get<SigVec>());
      } else {
        c.add_phase(wire, theta.get<double>());
      }
    } else {
      throw std::invalid_argument("circuit json: unknown gate entry");
    }
  }
  return c;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

Circuit read_circuit_file(const std::string& path) {
  return circuit_from_json(json::parse(read_text_file(path)));
}

PhaseTargets read_alphas_file(const std::string& path) {
  json j = json::parse(read_text_file(path));
  if (!j.is_array()) {
    throw std::invalid_argument("alphas file must be a JSON array");
  }
  return PhaseTargets::from_raw(j.get<std::vector<double>>());
}

std::string export_qasm(const Circuit& c) {
  if (c.has_symbolic()) {
    throw std::invalid_argument("export-qasm: symbolic angles present");
  }
  std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  out += "qubit[" + std::to_string(c.n) + "] q;\n";
  char buf[64];
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CX) {
      out += "cx q[" + std::to_string(g.control) + "], q[" +
             std::to_string(g.target) + "];\n";
    } else {
      std::snprintf(buf, sizeof(buf), "%.17g", g.theta);
      out += "p(" + std::string(buf) + ") q[" + std::to_string(g.wire) + "];\n";
    }
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

json manifest_to_json(const RunManifest& m) {
  return json{{"command", m.command},
              {"flags", m.flags},
              {"seed", m.seed},
              {"version", m.version},
              {"output_digest", m.output_digest}};
}

}  // namespace diagsynth
