#pragma once

#include <stdexcept>
#include <string>

namespace holospec {

/// Failure categories raised by the library. The CLI maps them onto exit codes.
enum class Errc {
  invalid_grid,
  parity,
  shape,
  bounds,
  wrong_setup,
  invalid_reference,
  variant,
  sign_indefinite,
  inconsistent_data,
  ill_posed,
  parse,
  convention_conflict,
  usage,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace holospec
