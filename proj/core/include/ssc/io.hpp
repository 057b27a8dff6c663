// JSON document parsing/serialization and DOT rendering.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssc/compose.hpp"
#include "ssc/exact.hpp"
#include "ssc/graph.hpp"
#include "ssc/pactus.hpp"

namespace ssc {

inline constexpr int kDocumentVersion = 1;

// On-disk network description. `decomposition` is empty when the document
// does not carry one; field order here matches the serialized key order.
struct NetworkDocument {
  int version = kDocumentVersion;
  std::vector<NodeId> state_nodes;
  std::vector<std::pair<NodeId, NodeId>> state_edges;
  std::vector<InputAttachment> inputs;
  std::vector<SeedComponent> decomposition;
};

// Throws ParseError (with 1-based line/column for syntax errors; 0/0 for
// document-level schema violations). Unknown top-level keys are rejected.
NetworkDocument parse_document(const std::string& text);

// Canonical form: stable key order, 2-space indent, decomposition omitted
// when empty, trailing newline. parse(serialize(doc)) reproduces doc.
std::string serialize_document(const NetworkDocument& doc);

StructuredNetwork to_network(const NetworkDocument& doc);

const char* stage_type_name(StageType type);  // "path-type" etc.

std::string report_json(const SscReport& report);
std::string placement_json(const InputPlacement& placement);

// Deterministic DOT text: state nodes as filled circles, inputs as open
// circles with a forward-directed attachment edge. With `components`,
// nodes are grouped into clusters and bridge edges drawn dashed red; with
// `highlight`, the listed state nodes are shaded.
std::string export_dot(const StructuredNetwork& net,
                       const PactusDecomposition* components = nullptr,
                       const std::vector<NodeId>* highlight = nullptr);

}  // namespace ssc
