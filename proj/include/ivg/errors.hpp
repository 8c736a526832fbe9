#pragma once

#include <stdexcept>
#include <string>

namespace ivg {

/// Raised when a caller violates an operation's precondition or supplies
/// malformed data.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when two independent routes disagree or a constructed certificate
/// fails its own re-check. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace ivg
