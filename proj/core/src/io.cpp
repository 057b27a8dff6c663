#include "ssc/io.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ssc/errors.hpp"

namespace ssc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  std::size_t stop = byte == 0 ? 0 : byte - 1;
  if (stop > text.size()) stop = text.size();
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& message) {
  throw ParseError(message, 0, 0);
}

NodeId to_node(const json& value, const char* where) {
  if (!value.is_number_integer())
    fail(std::string(where) + " must be an integer");
  auto raw = value.get<std::int64_t>();
  if (raw < 0 || raw > 0xFFFFFFFFLL)
    fail(std::string(where) + " is out of the node id range");
  return static_cast<NodeId>(raw);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

NetworkDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    // e.what() repeats the exception id and position; keep the detail only.
    std::string message = e.what();
    auto cut = message.find(": syntax error");
    if (cut != std::string::npos) message = message.substr(cut + 2);
    throw ParseError(message, line, col);
  }
  if (!j.is_object()) fail("document must be a JSON object");
  static const std::set<std::string> known = {
      "version", "state_nodes", "state_edges", "inputs", "decomposition"};
  for (const auto& item : j.items())
    if (!known.count(item.key())) fail("unknown field '" + item.key() + "'");

  NetworkDocument doc;
  if (!j.contains("version") || !j["version"].is_number_integer())
    fail("missing integer field 'version'");
  doc.version = j["version"].get<int>();
  if (doc.version != kDocumentVersion)
    fail("unsupported document version " + std::to_string(doc.version));

  if (!j.contains("state_nodes") || !j["state_nodes"].is_array())
    fail("missing array field 'state_nodes'");
  for (const auto& v : j["state_nodes"])
    doc.state_nodes.push_back(to_node(v, "state node"));

  if (j.contains("state_edges")) {
    if (!j["state_edges"].is_array()) fail("'state_edges' must be an array");
    for (const auto& e : j["state_edges"]) {
      if (!e.is_array() || e.size() != 2)
        fail("each state edge must be a two-element array");
      doc.state_edges.emplace_back(to_node(e[0], "edge endpoint"),
                                   to_node(e[1], "edge endpoint"));
    }
  }

  if (j.contains("inputs")) {
    if (!j["inputs"].is_array()) fail("'inputs' must be an array");
    for (const auto& in : j["inputs"]) {
      if (!in.is_object() || !in.contains("id") || !in["id"].is_string() ||
          !in.contains("target"))
        fail("each input must be {id: string, target: integer}");
      doc.inputs.push_back({in["id"].get<std::string>(),
                            to_node(in["target"], "input target")});
    }
  }

  if (j.contains("decomposition")) {
    if (!j["decomposition"].is_array())
      fail("'decomposition' must be an array");
    for (const auto& comp : j["decomposition"]) {
      if (!comp.is_object() || !comp.contains("nodes") ||
          !comp["nodes"].is_array() || !comp.contains("kind") ||
          !comp["kind"].is_string())
        fail("each decomposition entry must be {nodes: [int], kind: string}");
      SeedComponent seed;
      for (const auto& v : comp["nodes"])
        seed.nodes.push_back(to_node(v, "decomposition node"));
      std::string kind = comp["kind"].get<std::string>();
      if (kind == "path") {
        seed.kind = ComponentKind::Path;
      } else if (kind == "cycle") {
        seed.kind = ComponentKind::Cycle;
      } else {
        fail("decomposition kind must be 'path' or 'cycle'");
      }
      doc.decomposition.push_back(std::move(seed));
    }
  }
  return doc;
}

std::string serialize_document(const NetworkDocument& doc) {
  ordered_json j;
  j["version"] = doc.version;
  j["state_nodes"] = doc.state_nodes;
  auto edges = ordered_json::array();
  for (auto [a, b] : doc.state_edges) edges.push_back({a, b});
  j["state_edges"] = std::move(edges);
  auto inputs = ordered_json::array();
  for (const auto& in : doc.inputs)
    inputs.push_back({{"id", in.id}, {"target", in.target}});
  j["inputs"] = std::move(inputs);
  if (!doc.decomposition.empty()) {
    auto comps = ordered_json::array();
    for (const auto& seed : doc.decomposition)
      comps.push_back(
          {{"nodes", seed.nodes},
           {"kind", seed.kind == ComponentKind::Path ? "path" : "cycle"}});
    j["decomposition"] = std::move(comps);
  }
  return j.dump(2) + "\n";
}

StructuredNetwork to_network(const NetworkDocument& doc) {
  return build_network(doc.state_nodes, doc.state_edges, doc.inputs);
}

const char* stage_type_name(StageType type) {
  switch (type) {
    case StageType::PathType:
      return "path-type";
    case StageType::TreeType:
      return "tree-type";
    case StageType::CycleType:
      return "cycle-type";
  }
  return "unknown";
}

std::string report_json(const SscReport& report) {
  ordered_json j;
  j["is_ssc"] = report.is_ssc;
  j["witness"] = report.witness;
  j["subsets_examined"] = report.subsets_examined;
  return j.dump(2) + "\n";
}

std::string placement_json(const InputPlacement& placement) {
  ordered_json j;
  auto externals = ordered_json::array();
  for (const auto& in : placement.external)
    externals.push_back({{"id", in.id}, {"target", in.target}});
  j["external"] = std::move(externals);
  auto comp_inputs = ordered_json::object();
  for (const auto& [index, nodes] : placement.component_inputs)
    comp_inputs[std::to_string(index)] = nodes;
  j["component_inputs"] = std::move(comp_inputs);
  auto stages = ordered_json::array();
  for (const auto& stage : placement.per_stage)
    stages.push_back({{"component", stage.component_index},
                      {"type", stage_type_name(stage.type)},
                      {"externals_added", stage.externals_added},
                      {"ssc_nodes_after", stage.ssc_nodes_after}});
  j["per_stage"] = std::move(stages);
  j["post_additions"] = placement.post_additions;
  return j.dump(2) + "\n";
}

std::string export_dot(const StructuredNetwork& net,
                       const PactusDecomposition* components,
                       const std::vector<NodeId>* highlight) {
  std::set<NodeId> shaded;
  if (highlight) shaded.insert(highlight->begin(), highlight->end());
  auto node_line = [&](NodeId v, const char* indent) {
    std::ostringstream line;
    line << indent << v;
    if (shaded.count(v))
      line << " [style=filled fillcolor=skyblue]";
    else
      line << " [style=filled fillcolor=white]";
    line << ";\n";
    return line.str();
  };

  std::ostringstream out;
  out << "graph network {\n";
  out << "  node [shape=circle];\n";
  if (components) {
    for (const auto& comp : components->components) {
      std::vector<NodeId> nodes = comp.nodes;
      std::sort(nodes.begin(), nodes.end());
      out << "  subgraph cluster_" << comp.index << " {\n";
      out << "    label=\""
          << (comp.kind == ComponentKind::Path ? "path" : "cycle") << " "
          << comp.index << "\";\n";
      for (NodeId v : nodes) out << node_line(v, "    ");
      out << "  }\n";
    }
  } else {
    for (NodeId v : net.state_labels()) out << node_line(v, "  ");
  }
  for (const auto& in : net.inputs()) out << "  " << quote(in.id) << ";\n";
  for (auto [a, b] : net.state_edges()) {
    out << "  " << a << " -- " << b;
    if (components && components->component_of(a) != components->component_of(b))
      out << " [style=dashed color=red]";
    out << ";\n";
  }
  for (const auto& in : net.inputs())
    out << "  " << quote(in.id) << " -- " << in.target << " [dir=forward];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ssc
