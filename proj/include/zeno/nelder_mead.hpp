#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace zeno {

struct NelderMeadOptions {
  double initial_step = 0.1;       ///< simplex edge along each axis
  double x_tol = 1e-8;             ///< stop when the simplex is this small (inf-norm)
  std::size_t max_iterations = 500;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Best objective value after each iteration.
  std::vector<double> best_history;
};

/// Derivative-free simplex minimization (standard coefficients: reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2). NaN objective values are
/// treated as +inf.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options);

}  // namespace zeno
