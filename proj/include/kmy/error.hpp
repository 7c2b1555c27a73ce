#pragma once

#include <stdexcept>
#include <string>

namespace kmy {

// Every failure raised by the library carries a module-qualified code such as
// "core.MalformedPairing", so callers can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace kmy
