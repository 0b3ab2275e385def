#pragma once

#include <stdexcept>
#include <string>

namespace avoid {

enum class Errc {
  InputShape,
  OracleLimit,
  Structure,
  IncompleteAssignment,
  Method,
  Kind,
  Stretch,
  Precondition,
  Invariant,
  Trace,
  Parse,
  Infeasible,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace avoid
