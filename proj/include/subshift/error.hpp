#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

// Every failure raised by the library carries a short machine-readable code
// ("empty-subshift", "rule-incomplete", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace subshift
