#include "holospec/errors.hpp"

namespace holospec {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_grid: return "invalid-grid";
    case Errc::parity: return "parity";
    case Errc::shape: return "shape";
    case Errc::bounds: return "bounds";
    case Errc::wrong_setup: return "wrong-setup";
    case Errc::invalid_reference: return "invalid-reference";
    case Errc::variant: return "variant";
    case Errc::sign_indefinite: return "sign-indefinite";
    case Errc::inconsistent_data: return "inconsistent-data";
    case Errc::ill_posed: return "ill-posed";
    case Errc::parse: return "parse";
    case Errc::convention_conflict: return "convention-conflict";
    case Errc::usage: return "usage";
  }
  return "unknown";
}

}  // namespace holospec
