#pragma once
/// @file errors.hpp
/// @brief Error taxonomy shared by the library and the CLI.

#include <stdexcept>
#include <string>

namespace mzv {

enum class Errc {
  parse,       ///< malformed index / relation text
  divergent,   ///< series outside its convergence domain
  domain,      ///< argument outside an operation's stated domain
  budget,      ///< evaluation budget exhausted before reaching the target
  io,          ///< file / serialization problems
  internal,    ///< invariant violation (a bug, not a user error)
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace mzv
