#pragma once

#include <stdexcept>
#include <string>

namespace algradix {

enum class ErrorKind {
  Syntax,        // unparsable input text
  Precondition,  // input violates an operation's requirements
  Unsupported,   // base class not handled by the requested operation
  Resource,      // step/state/candidate cap or precision exhaustion
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Resource: return "resource";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace algradix
