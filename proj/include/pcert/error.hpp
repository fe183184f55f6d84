#pragma once

#include <stdexcept>
#include <string>

namespace pcert {

// Rejection of user-supplied data. `stage` names the pipeline stage that
// rejected the input (triangulation, coordinates, interchange, curve, cli).
class InputError : public std::runtime_error {
 public:
  InputError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

  [[nodiscard]] const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// A broken internal invariant: indicates a bug, never a bad input.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& message)
      : std::runtime_error("internal: " + message) {}
};

}  // namespace pcert
