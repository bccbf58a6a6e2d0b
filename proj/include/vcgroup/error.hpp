#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcgroup {

enum class Errc {
  invalid_order,
  capacity,
  validation,
  dimension,
  precondition,
  domain,
  resource,
  undefined_family,
  io,
  parse,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vcgroup
