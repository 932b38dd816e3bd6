#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mulgeo {

enum class ErrCode {
  parse,        // malformed expression text
  domain,       // input outside a mathematical precondition
  numeric,      // quadrature/iteration failed to converge
  io,           // file system failure
  unsupported,  // valid request outside implemented range (e.g. mderiv order > 4)
  invalid,      // bad argument (null handle, bad enum value, ...)
};

// Single exception type for the whole library. `offset` is a byte position
// into the offending source text for parse/eval errors, npos otherwise.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrCode code, std::string msg, std::size_t offset = npos)
      : std::runtime_error(std::move(msg)), code_(code), offset_(offset) {}

  ErrCode code() const { return code_; }
  std::size_t offset() const { return offset_; }

 private:
  ErrCode code_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrCode code, std::string msg,
                              std::size_t offset = Error::npos) {
  throw Error(code, std::move(msg), offset);
}

}  // namespace mulgeo
