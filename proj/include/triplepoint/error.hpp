#pragma once

#include <stdexcept>
#include <string>

namespace triplepoint {

/// Domain failure raised by the algebra and geometry layers.
///
/// `kind()` is a short stable identifier ("descriptor-mismatch",
/// "inexact-division", "certification", ...) that the CLI copies into its
/// structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace triplepoint
