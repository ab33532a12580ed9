#pragma once

#include <stdexcept>
#include <string>

namespace atomfiber {

// Codes 2..5 line up with the CLI exit codes.
enum class ErrCode {
  parse = 2,
  limit = 3,
  infeasible = 4,
  incomplete_atoms = 5,
  dim = 6,
  invalid = 7,
  unbounded = 8,
  io = 9,
  internal = 10,
  infeasible_seed = 11,
};

class Error : public std::runtime_error {
public:
  Error(ErrCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrCode code() const { return code_; }

private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace atomfiber
