#pragma once

#include <stdexcept>
#include <string>

namespace grodiag {

enum class Errc {
  backend_mismatch,    // operands live in different value groups
  composition,         // morphism endpoints do not line up
  unsupported_backend, // operation only exists for one backend
  domain,              // argument outside the operation's domain
  order,               // parameters violate p <= q
  input,               // malformed file or construction data
  size_bound,          // brute-force oracle asked for too large an instance
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace grodiag
