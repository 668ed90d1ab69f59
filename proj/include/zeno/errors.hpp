#pragma once

#include <stdexcept>
#include <string>

#include "zeno/vec3.hpp"

namespace zeno {

/// Root of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration: invalid step size, unknown unit suffix, malformed grid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of a physical formula (non-finite state,
/// mz outside [-1, 1], degenerate denominator, singular linear system).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integration did not reach the convergence threshold before t_end.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Vec3 last_state, double elapsed)
      : Error(what), last_state_(last_state), elapsed_(elapsed) {}

  const Vec3& last_state() const noexcept { return last_state_; }
  double elapsed() const noexcept { return elapsed_; }

 private:
  Vec3 last_state_;
  double elapsed_;
};

}  // namespace zeno
