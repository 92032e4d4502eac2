#pragma once

#include <stdexcept>
#include <string>

namespace roc {

enum class ErrorKind {
  Argument,     // caller passed something outside an operation's domain
  Parameter,    // model parameters violate a sampler or fit precondition
  Degenerate,   // input too degenerate to normalize (e.g. no edges)
  Undefined,    // quantity undefined at this input (e.g. clustering at deg < 2)
  IllPosed,     // numerically indefinite moment data
  Infeasible,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace roc
