#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "complab/bitset.hpp"

namespace complab {

enum class ErrorCode {
  SelfLoop,
  DuplicateArc,
  VertexOutOfRange,
  InvalidPartition,
  MissingArc,
  DoubleArc,
  SamePartArc,
  UnknownLabel,
  Parse,
  EmptyDigraph,
  ZetaZero,
  NotAcyclic,
  NotCyclic,
  CapExceeded,
  RetriesExhausted,
  InfeasibleParts,
  TooLarge,
  UnknownFixture,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `pair()` names the
/// offending vertex pair for the arc-level validation failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::pair<Vertex, Vertex>> pair = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        pair_(pair) {}

  ErrorCode code() const { return code_; }
  const std::optional<std::pair<Vertex, Vertex>>& pair() const { return pair_; }

 private:
  ErrorCode code_;
  std::optional<std::pair<Vertex, Vertex>> pair_;
};

}  // namespace complab
