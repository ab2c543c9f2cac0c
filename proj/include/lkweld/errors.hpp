#pragma once

#include <stdexcept>
#include <string>

namespace lkweld {

// Contract or configuration violation: bad grid size, malformed expression,
// driving function outside the Caratheodory class, out-of-range argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical stage could not deliver a trustworthy result. The stage tag
// names the pipeline step ("evolve", "oracle-interior", ...).
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(std::string stage, const std::string& what)
      : std::runtime_error("[" + stage + "] " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lkweld
