#pragma once

#include <stdexcept>
#include <string>

namespace hypermonad {

enum class errc {
  out_of_range,        // map value lands outside the declared target
  length_mismatch,     // tuple length disagrees with the declared grade
  shape_mismatch,      // composed/joined objects have incompatible shapes
  domain_mismatch,     // vertex set disagrees with the declared domain
  monoid_mismatch,     // operands live in different monoids
  ring_mismatch,       // operands live in different rings
  out_of_carrier,      // element index >= carrier size
  index_out_of_range,  // enumeration index >= family size
  bounds_too_large,    // requested enumeration does not fit in 64 bits
  not_prime,           // ring characteristic base is not prime
  reducible_modulus,   // modulus is not irreducible mod p
  missing_modulus,     // no built-in modulus for the requested degree
  ring_not_binary,     // operation requires the two-element field
  too_large,           // input exceeds the supported search size
  io_error,            // malformed file or JSON input
};

/** Library-wide exception; carries a machine-readable code plus context. */
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hypermonad
