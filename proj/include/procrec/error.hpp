#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace procrec {

/// Bad input: malformed files, violated preconditions, unknown names.
/// The CLI maps it to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant did not hold (exit code 2).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Diagnostic {
  std::size_t line = 0;  // 1-based; 0 when not tied to a line
  std::string reason;
};

/// Line-numbered rejection of one or more input records.
class ParseError : public InputError {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace procrec
