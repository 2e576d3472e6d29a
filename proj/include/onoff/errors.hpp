#pragma once

#include <stdexcept>
#include <string>

namespace onoff {

/// Input data violates a documented record invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

/// Least-squares system too ill-conditioned to invert reliably.
class IllConditionedError : public std::runtime_error {
public:
  IllConditionedError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

private:
  double condition_;
};

/// The iteration model assigns zero probability to an observed event.
class DegenerateModelError : public std::runtime_error {
public:
  DegenerateModelError(const std::string& what, double eta)
      : std::runtime_error(what), eta_(eta) {}
  double eta() const { return eta_; }

private:
  double eta_;
};

}  // namespace onoff
