#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resichain {

// Domain error carrying a stable code (e.g. "NotAdmissible") and an optional
// integer witness. Usage errors in the CLI are reported separately.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message, std::vector<long long> witness = {})
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<long long>& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::vector<long long> witness_;
};

}  // namespace resichain
