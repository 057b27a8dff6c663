// Fixture loading helpers; SSC_FIXTURE_DIR comes from the build.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ssc/graph.hpp"
#include "ssc/io.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(SSC_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline ssc::NetworkDocument load_document(const std::string& name) {
  return ssc::parse_document(read_fixture(name));
}

inline ssc::StructuredNetwork load_network(const std::string& name) {
  return ssc::to_network(load_document(name));
}

}  // namespace testsupport
