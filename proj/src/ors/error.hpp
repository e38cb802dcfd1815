#pragma once

#include <stdexcept>
#include <string>

namespace ors {

enum class Errc {
  invalid_argument,  // precondition violated by caller-supplied data
  parse_error,       // malformed document or unknown format version
  budget_exceeded,   // exponential search refused, not a wrong answer
  degenerate,        // geometric degeneracy (equator projection, parallel planes)
  unsupported,       // unknown solver/reduction for the given instance kind
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace ors
