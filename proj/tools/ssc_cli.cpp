// Command-line front end: check, min-inputs, oracle, export-dot.
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssc/compose.hpp"
#include "ssc/errors.hpp"
#include "ssc/exact.hpp"
#include "ssc/graph.hpp"
#include "ssc/io.hpp"
#include "ssc/oracle.hpp"
#include "ssc/pactus.hpp"

namespace {

constexpr int kExitSsc = 0;
constexpr int kExitNotSsc = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ssc::Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string node_set(const std::vector<ssc::NodeId>& nodes) {
  std::string out = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(nodes[i]);
  }
  return out + "}";
}

ssc::PactusDecomposition decompose_document(const ssc::NetworkDocument& doc,
                                            const ssc::StructuredNetwork& net) {
  return ssc::decompose(net, doc.decomposition);
}

int run_check(const std::string& path, std::size_t limit, bool json) {
  ssc::NetworkDocument doc = ssc::parse_document(read_file(path));
  ssc::StructuredNetwork net = ssc::to_network(doc);
  ssc::SscReport report;
  try {
    report = ssc::is_ssc_exact(net, limit);
  } catch (const ssc::NotAccessible&) {
    if (json) {
      std::cout << ssc::report_json({false, {}, 0});
    } else {
      std::cout << "SSC: no (some state node is unreachable from the "
                   "inputs)\n";
    }
    return kExitNotSsc;
  }
  if (json) {
    std::cout << ssc::report_json(report);
  } else if (report.is_ssc) {
    std::cout << "SSC: yes (" << report.subsets_examined
              << " subsets examined)\n";
  } else {
    std::cout << "SSC: no, witness " << node_set(report.witness) << " ("
              << report.subsets_examined << " subsets examined)\n";
  }
  return report.is_ssc ? kExitSsc : kExitNotSsc;
}

int run_min_inputs(const std::string& path, const std::string& tie,
                   bool audit, bool json) {
  ssc::NetworkDocument doc = ssc::parse_document(read_file(path));
  if (!doc.inputs.empty())
    throw ssc::Error("document already carries inputs; min-inputs expects a "
                     "bare state graph");
  ssc::StructuredNetwork net = ssc::to_network(doc);
  ssc::PactusDecomposition dec = decompose_document(doc, net);
  ssc::TieBreak tie_break = tie == "largest" ? ssc::TieBreak::LargestId
                                             : ssc::TieBreak::SmallestId;
  ssc::InputPlacement placement = ssc::min_inputs(net, dec, tie_break);

  bool verified = false;
  bool verdict_known = false;
  bool minimal = false;
  bool minimal_known = false;
  if (audit) {
    if (net.state_count() <= ssc::kDefaultExactLimit) {
      verified = ssc::verify_placement(net, placement).is_ssc;
      verdict_known = true;
    }
    if (net.state_count() <= 12) {
      minimal = ssc::minimality_audit(net, placement);
      minimal_known = true;
    }
  }

  if (json) {
    nlohmann::ordered_json j =
        nlohmann::ordered_json::parse(ssc::placement_json(placement));
    if (audit) {
      j["verified_ssc"] =
          verdict_known ? nlohmann::ordered_json(verified)
                        : nlohmann::ordered_json(nullptr);
      j["minimal"] = minimal_known ? nlohmann::ordered_json(minimal)
                                   : nlohmann::ordered_json(nullptr);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "externals: " << placement.external.size() << "\n";
    for (const auto& input : placement.external)
      std::cout << "  " << input.id << " -> " << input.target << "\n";
    for (std::size_t s = 0; s < placement.per_stage.size(); ++s) {
      const auto& stage = placement.per_stage[s];
      std::cout << "stage " << s + 1 << ": component "
                << stage.component_index << " ("
                << ssc::stage_type_name(stage.type) << "), added "
                << node_set(stage.externals_added) << ", ssc nodes "
                << node_set(stage.ssc_nodes_after) << "\n";
    }
    for (const auto& [index, nodes] : placement.component_inputs)
      std::cout << "component " << index << " inputs: " << node_set(nodes)
                << "\n";
    if (!placement.post_additions.empty())
      std::cout << "post additions: " << node_set(placement.post_additions)
                << "\n";
    if (audit) {
      if (verdict_known)
        std::cout << "verified SSC: " << (verified ? "yes" : "no") << "\n";
      else
        std::cout << "verified SSC: skipped (network exceeds the exact-check "
                     "limit)\n";
      if (minimal_known)
        std::cout << "minimal: "
                  << (minimal ? "yes (no smaller placement is SSC)"
                              : "no (a smaller placement exists)")
                  << "\n";
      else
        std::cout << "minimal: not audited (network exceeds 12 nodes)\n";
    }
  }
  if (audit && verdict_known && !verified) return kExitNotSsc;
  return kExitSsc;
}

int run_oracle(const std::string& path, std::size_t trials,
               std::uint64_t seed) {
  ssc::NetworkDocument doc = ssc::parse_document(read_file(path));
  ssc::StructuredNetwork net = ssc::to_network(doc);
  double fraction = ssc::sample_verdict(net, trials, seed);
  std::cout << "controllable fraction: " << std::fixed << std::setprecision(3)
            << fraction << " (" << trials << " trials)\n";

  if (net.state_count() > ssc::kDefaultExactLimit) {
    std::cout << "structural verdict skipped (network exceeds the exact-check "
                 "limit)\n";
    return kExitSsc;
  }
  bool structurally_ssc = false;
  try {
    structurally_ssc = ssc::is_ssc_exact(net).is_ssc;
  } catch (const ssc::NotAccessible&) {
    structurally_ssc = false;
  }
  if (structurally_ssc) {
    if (fraction == 1.0) {
      std::cout << "consistent: SSC and every sampled realization is "
                   "controllable\n";
      return kExitSsc;
    }
    std::cout << "INCONSISTENT: SSC but a sampled realization is "
                 "uncontrollable\n";
    return kExitNotSsc;
  }
  std::cout << "non-SSC: sampling cannot certify (controllability is a "
               "generic property)\n";
  return kExitSsc;
}

int run_export_dot(const std::string& path, const std::string& annotate) {
  ssc::NetworkDocument doc = ssc::parse_document(read_file(path));
  ssc::StructuredNetwork net = ssc::to_network(doc);
  if (annotate == "components") {
    ssc::PactusDecomposition dec = decompose_document(doc, net);
    std::cout << ssc::export_dot(net, &dec, nullptr);
  } else if (annotate == "ssc-nodes") {
    std::vector<ssc::NodeId> nodes = ssc::ssc_nodes(net);
    std::cout << ssc::export_dot(net, nullptr, &nodes);
  } else {
    std::cout << ssc::export_dot(net);
  }
  return kExitSsc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong structural controllability toolkit"};
  app.require_subcommand(1);

  std::string path;
  std::size_t exact_limit = ssc::kDefaultExactLimit;
  bool check_json = false;
  auto* check = app.add_subcommand(
      "check", "Exact strong structural controllability verdict");
  check->add_option("path", path, "network document")->required();
  check->add_option("--exact-limit", exact_limit,
                    "largest node count accepted by the exact check");
  check->add_flag("--json", check_json, "emit a JSON report");

  std::string tie = "smallest";
  bool audit = false;
  bool mi_json = false;
  auto* mi = app.add_subcommand("min-inputs",
                                "Minimum external input placement");
  mi->add_option("path", path, "network document")->required();
  mi->add_option("--tie-break", tie, "candidate preference")
      ->check(CLI::IsMember({"smallest", "largest"}));
  mi->add_flag("--audit", audit,
               "re-check the placement and confirm minimality");
  mi->add_flag("--json", mi_json, "emit the placement as JSON");

  std::size_t trials = 200;
  std::uint64_t seed = 0;
  auto* oracle = app.add_subcommand(
      "oracle", "Sample weighted realizations and test controllability");
  oracle->add_option("path", path, "network document")->required();
  oracle->add_option("--trials", trials, "number of sampled realizations")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  oracle->add_option("--seed", seed, "RNG seed");

  std::string annotate;
  auto* dot = app.add_subcommand("export-dot", "Render the network as DOT");
  dot->add_option("path", path, "network document")->required();
  dot->add_option("--annotate", annotate, "extra styling")
      ->check(CLI::IsMember({"ssc-nodes", "components"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (check->parsed()) return run_check(path, exact_limit, check_json);
    if (mi->parsed()) return run_min_inputs(path, tie, audit, mi_json);
    if (oracle->parsed()) return run_oracle(path, trials, seed);
    if (dot->parsed()) return run_export_dot(path, annotate);
  } catch (const ssc::ParseError& e) {
    if (e.line > 0)
      std::cerr << "error: " << e.what() << " at line " << e.line
                << ", column " << e.column << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
