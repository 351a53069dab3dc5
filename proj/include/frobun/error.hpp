#pragma once

#include <stdexcept>
#include <string>

namespace frobun {

// Error categories; the C API maps these onto its integer codes.
enum class ErrorCode {
    InvalidArgument, // bad user input: parse errors, invalid ranks, wrong lengths
    DomainError,     // mathematically rejected: singular curve, enumeration cap, pole
    ContextError,    // mixed incompatible contexts (different 2g, group, q)
    Internal,        // broken internal invariant
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace frobun
