// Error types thrown by the ssc library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph-core
struct EmptyStateSet final : Error {
  EmptyStateSet() : Error("network has no state nodes") {}
};
struct DanglingEdge final : Error {
  using Error::Error;
};
struct DuplicateInputAttachment final : Error {
  using Error::Error;
};
struct NodeInAlpha final : Error {
  using Error::Error;
};

// exact checker
struct TooLarge final : Error {
  using Error::Error;
};
struct NotAccessible final : Error {
  NotAccessible() : Error("some state node is unreachable from every input") {}
};

// numeric oracle
struct SignViolation final : Error {
  using Error::Error;
};
struct MissingWeight final : Error {
  using Error::Error;
};
struct ExtraWeight final : Error {
  using Error::Error;
};

// pactus
struct NotAPactus final : Error {
  using Error::Error;
};
struct DisconnectedState final : Error {
  DisconnectedState() : Error("state graph is not connected") {}
};
struct NotAPath final : Error {
  using Error::Error;
};
struct NotATree final : Error {
  using Error::Error;
};
struct TooFewInputs final : Error {
  using Error::Error;
};
struct NotACycle final : Error {
  using Error::Error;
};
struct WrongInputCount final : Error {
  using Error::Error;
};
struct MultiBridge final : Error {
  using Error::Error;
};
struct ComponentNotSsc final : Error {
  using Error::Error;
};

// composer
struct NotNeighbors final : Error {
  using Error::Error;
};
struct StageUnsatisfiable final : Error {
  using Error::Error;
};

// document I/O
struct ParseError final : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace ssc
