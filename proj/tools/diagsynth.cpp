#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diagsynth/adaptive.hpp"
#include "diagsynth/angles.hpp"
#include "diagsynth/io.hpp"
#include "diagsynth/search.hpp"
#include "diagsynth/synth.hpp"
#include "diagsynth/synth_linear.hpp"

namespace ds = diagsynth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBudget = 4;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string digest_of(const std::string& text) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(ds::fnv1a64(text)));
  return buf;
}

// Write the payload plus its manifest sidecar; empty path means stdout.
void emit_output(const std::string& path, const std::string& text,
                 ds::RunManifest manifest) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  ds::write_text_file(path, text);
  manifest.output_digest = digest_of(text);
  ds::write_text_file(path + ".manifest.json",
                      ds::manifest_to_json(manifest).dump(2) + "\n");
}

int default_jobs() {
  if (const char* env = std::getenv("DIAGSYNTH_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

ds::Topology make_topology(const std::string& kind, int n) {
  switch (ds::parse_topology_kind(kind)) {
    case ds::TopologyKind::Full: return ds::Topology::full(n);
    case ds::TopologyKind::Linear: return ds::Topology::linear(n);
    case ds::TopologyKind::Circular: return ds::Topology::circular(n);
    default:
      throw std::invalid_argument("custom topologies are file-defined only");
  }
}

struct CellText {
  std::string text;
};

CellText table_cell(ds::Variant v, ds::TopologyKind kind, int n) {
  ds::SynthOptions opts;
  opts.swap_opt = true;
  opts.fallback_linear = true;
  ds::SynthOutput out = ds::synthesize(v, kind, n, opts);
  long count = out.circuit.cx_count();
  bool optimal = false;
  if (kind == ds::TopologyKind::Full) optimal = true;
  if (kind == ds::TopologyKind::Circular && v == ds::Variant::SPA &&
      out.trinomial && out.trinomial->primitive()) {
    optimal = true;
  }
  return {optimal ? std::to_string(count) : "<=" + std::to_string(count)};
}

int cmd_table(int max_n, bool exact) {
  std::printf("  n |%22s|%22s|%22s|\n", "full ", "linear ", "circular ");
  std::printf("    | %6s %6s %6s | %6s %6s %6s | %6s %6s %6s |\n", "spa",
              "wpa", "npa", "spa", "wpa", "npa", "spa", "wpa", "npa");
  for (int n = 2; n <= max_n; ++n) {
    std::printf("%3d |", n);
    for (ds::TopologyKind kind : {ds::TopologyKind::Full,
                                  ds::TopologyKind::Linear,
                                  ds::TopologyKind::Circular}) {
      for (ds::Variant v : {ds::Variant::SPA, ds::Variant::WPA,
                            ds::Variant::NPA}) {
        std::string cell;
        if (exact && n <= 3) {
          ds::ExactMinResult r = ds::exact_min(v, make_topology(
              ds::topology_kind_name(kind), n), 16);
          cell = r.budget_exceeded ? "?" : std::to_string(r.length);
        } else {
          cell = table_cell(v, kind, n).text;
        }
        std::printf(" %6s", cell.c_str());
      }
      std::printf(" |");
    }
    std::printf("\n");
  }
  std::printf("\nEntries marked <= are construction upper bounds, not optima.\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis, verification and optimization of CX+phase circuits "
               "for diagonal operators"};
  app.require_subcommand(1);

  std::string variant = "spa";
  std::string topology = "full";
  int n = 0;
  bool swap_opt = false;
  bool place = false;
  bool self_verify = false;
  std::string fallback;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string circuit_path;
  std::string alphas_path;
  double eps = 1e-9;
  int budget = 25;
  int jobs = default_jobs();
  bool no_check = false;
  int max_n = 8;
  bool exact = false;

  CLI::App* synth = app.add_subcommand("synth", "Synthesize a circuit");
  synth->add_option("--variant", variant, "npa | wpa | spa")->required();
  synth->add_option("--topology", topology, "full | linear | circular")
      ->required();
  synth->add_option("--n", n, "wire count")->required();
  synth->add_flag("--swap-opt", swap_opt, "2-CX swaps in the linear SPA");
  synth->add_flag("--place-phases", place, "emit symbolic phase gates");
  synth->add_flag("--verify", self_verify, "check the variant before writing");
  synth->add_option("--fallback", fallback,
                    "'linear' embeds the linear construction on the circle");
  synth->add_option("--seed", seed, "RNG seed (primitive-element search)");
  synth->add_option("-o,--out", out_path, "output circuit file");

  CLI::App* verify = app.add_subcommand("verify", "Check a circuit variant");
  verify->add_option("circuit", circuit_path, "circuit JSON file")->required();
  verify->add_option("--variant", variant, "npa | wpa | spa")->required();

  CLI::App* angles = app.add_subcommand(
      "angles", "Fit phase angles to a diagonal operator");
  angles->add_option("--alphas", alphas_path, "JSON array of 2^n radians")
      ->required();
  angles->add_option("--circuit", circuit_path, "SPA-complete skeleton")
      ->required();
  angles->add_flag("--no-check", no_check, "skip the phase-profile check");
  angles->add_option("-o,--out", out_path, "output circuit file");

  CLI::App* adapt = app.add_subcommand(
      "adapt", "Operator-specific synthesis that skips zero angles");
  adapt->add_option("--alphas", alphas_path, "JSON array of 2^n radians")
      ->required();
  adapt->add_option("--topology", topology, "full | linear | circular")
      ->required();
  adapt->add_option("--eps", eps, "zero-angle threshold");
  adapt->add_option("--seed", seed, "RNG seed");
  adapt->add_option("-o,--out", out_path, "output circuit file");

  CLI::App* search = app.add_subcommand("search", "Exact minimal circuits");
  search->add_option("--variant", variant, "npa | wpa | spa")->required();
  search->add_option("--topology", topology, "full | linear | circular")
      ->required();
  search->add_option("--n", n, "wire count")->required();
  search->add_option("--budget", budget, "depth budget");
  search->add_option("--jobs", jobs, "parallel root branches");
  search->add_option("-o,--out", out_path, "witness circuit file");

  CLI::App* qasm = app.add_subcommand("export-qasm", "Emit OpenQASM text");
  qasm->add_option("circuit", circuit_path, "circuit JSON file")->required();
  qasm->add_option("-o,--out", out_path, "output file");

  CLI::App* table = app.add_subcommand(
      "table", "Print the per-topology gate-count table");
  table->add_option("--max-n", max_n, "largest wire count");
  table->add_flag("--exact", exact, "exact-search values for n <= 3");

  try {
    app.parse(argc, argv);

    if (synth->parsed()) {
      ds::SynthOptions opts;
      opts.swap_opt = swap_opt;
      opts.seed = seed;
      if (!fallback.empty()) {
        if (fallback != "linear") {
          throw std::invalid_argument("--fallback only supports 'linear'");
        }
        opts.fallback_linear = true;
      }
      ds::Variant v = ds::parse_variant(variant);
      ds::SynthOutput s =
          ds::synthesize(v, ds::parse_topology_kind(topology), n, opts);
      if (place) s.circuit = ds::place_phases(s.circuit);
      if (self_verify && !ds::check_variant(s.circuit, v).pass) {
        std::cerr << "verification failed for synthesized circuit\n";
        return kExitValidation;
      }
      ds::RunManifest m;
      m.command = "synth";
      m.seed = seed;
      m.flags = {{"variant", variant},   {"topology", topology},
                 {"n", std::to_string(n)}, {"swap_opt", swap_opt ? "1" : "0"},
                 {"place_phases", place ? "1" : "0"}, {"fallback", fallback}};
      if (s.trinomial) {
        m.flags["trinomial_l"] = std::to_string(s.trinomial->l);
        m.flags["trinomial_k"] = std::to_string(s.trinomial->k);
        m.flags["trinomial_r"] = std::to_string(s.trinomial->r);
        m.flags["trinomial_q"] = std::to_string(s.trinomial->q);
      }
      std::string text = ds::circuit_to_json(s.circuit).dump(2) + "\n";
      emit_output(out_path, text, m);
      std::cerr << "cx gates: " << s.circuit.cx_count() << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      ds::Circuit c = ds::read_circuit_file(circuit_path);
      ds::Variant v = ds::parse_variant(variant);
      ds::VariantReport rep = ds::check_variant(c, v);
      std::cout << "variant=" << ds::variant_name(v)
                << " pass=" << (rep.pass ? "true" : "false")
                << " visited=" << rep.visited.size()
                << " missing=" << rep.missing.size();
      if (rep.wire_permutation) {
        std::cout << " sigma=[";
        for (std::size_t i = 0; i < rep.wire_permutation->size(); ++i) {
          std::cout << (i ? "," : "") << (*rep.wire_permutation)[i];
        }
        std::cout << "]";
      }
      std::cout << "\n";
      return rep.pass ? kExitOk : kExitValidation;
    }

    if (angles->parsed()) {
      ds::PhaseTargets targets = ds::read_alphas_file(alphas_path);
      ds::Circuit skeleton = ds::read_circuit_file(circuit_path);
      if (targets.n != skeleton.n) {
        throw std::invalid_argument("alpha count does not match wire count");
      }
      if (skeleton.phase_count() == 0) {
        skeleton = ds::place_phases(skeleton);
      } else if (!skeleton.has_symbolic()) {
        throw std::invalid_argument("circuit already carries numeric angles");
      }
      ds::AngleVector theta = ds::compute_theta(targets);
      ds::Circuit bound = ds::bind_angles(skeleton, theta);
      if (!no_check && targets.n > 12) {
        no_check = true;
        std::cerr << "skipping the 2^n phase-profile check at n = "
                  << targets.n << "\n";
      }
      if (!no_check) {
        double worst = 0.0;
        for (ds::SigVec b = 0; b < (ds::SigVec(1) << targets.n); ++b) {
          double have = ds::phase_profile(bound, b);
          double want = targets.alpha[b];
          double tau = 6.283185307179586476925286766559;
          double d = std::fmod(std::abs(have - want), tau);
          worst = std::max(worst, std::min(d, tau - d));
        }
        std::cerr << "max phase error: " << worst << "\n";
        if (worst > 1e-9) return kExitValidation;
      }
      ds::RunManifest m;
      m.command = "angles";
      m.flags = {{"alphas", alphas_path}, {"circuit", circuit_path}};
      emit_output(out_path, ds::circuit_to_json(bound).dump(2) + "\n", m);
      return kExitOk;
    }

    if (adapt->parsed()) {
      ds::PhaseTargets targets = ds::read_alphas_file(alphas_path);
      ds::Topology topo = make_topology(topology, targets.n);
      ds::AngleVector theta = ds::compute_theta(targets);
      ds::SkipSet skip = ds::discover_skip_set(theta, eps);
      ds::SkippingResult r = ds::synth_skipping(skip, topo);
      ds::Circuit bound = ds::bind_angles(
          ds::place_phases(r.circuit, /*require_spa_complete=*/false), theta);
      ds::RunManifest m;
      m.command = "adapt";
      m.seed = seed;
      m.flags = {{"alphas", alphas_path},
                 {"topology", topology},
                 {"eps", std::to_string(eps)}};
      emit_output(out_path, ds::circuit_to_json(bound).dump(2) + "\n", m);
      std::cerr << "skip set size: " << skip.sigs.size()
                << "\ncx gates: " << r.circuit.cx_count()
                << " (general construction: " << r.general_cx
                << ", saved: " << r.general_cx - r.circuit.cx_count() << ")\n";
      return kExitOk;
    }

    if (search->parsed()) {
      ds::Topology topo = make_topology(topology, n);
      ds::ExactMinResult r =
          ds::exact_min(ds::parse_variant(variant), topo, budget, jobs);
      if (r.budget_exceeded) {
        throw BudgetExceeded("depth budget " + std::to_string(budget) +
                             " exceeded after " + std::to_string(r.nodes) +
                             " nodes");
      }
      std::cout << "minimal length: " << r.length << "\n";
      if (!out_path.empty() && r.witness) {
        ds::RunManifest m;
        m.command = "search";
        m.flags = {{"variant", variant},
                   {"topology", topology},
                   {"n", std::to_string(n)},
                   {"budget", std::to_string(budget)}};
        emit_output(out_path, ds::circuit_to_json(*r.witness).dump(2) + "\n", m);
      }
      return kExitOk;
    }

    if (qasm->parsed()) {
      ds::Circuit c = ds::read_circuit_file(circuit_path);
      std::string text = ds::export_qasm(c);
      ds::RunManifest m;
      m.command = "export-qasm";
      m.flags = {{"circuit", circuit_path}};
      emit_output(out_path, text, m);
      return kExitOk;
    }

    if (table->parsed()) return cmd_table(max_n, exact);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ds::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
