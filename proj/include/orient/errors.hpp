#pragma once

#include <stdexcept>
#include <string>

namespace orient {

// Bad input data: symbols out of range, malformed files, invalid parameters.
// Argument validation uses std::invalid_argument directly; this is kept for
// parse failures so callers can tell them apart.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A construction was asked to run on an input that does not satisfy the
// hypotheses it needs (wrong weight, missing run, non-unit multiplier, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A produced sequence failed post-hoc verification, or an observed structure
// disagrees with the value predicted by theory.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orient
