#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphtask {

// Malformed edge-list or answer text; `offset` is the byte position of the
// first offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset_)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  std::size_t offset;
};

// Structurally valid text that violates the declared graph schema, e.g. a
// weight on an unweighted graph.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition violation on an otherwise valid value (node id out of
// range, disconnected graph passed to a distance task, bad config).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the sampler exhausts its retry budget.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace graphtask
