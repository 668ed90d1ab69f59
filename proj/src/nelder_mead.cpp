#include "zeno/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "zeno/errors.hpp"

namespace zeno {
namespace {

struct Vertex {
  std::vector<double> x;
  double fx;
};

double diameter(const std::vector<Vertex>& simplex) {
  double d = 0.0;
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    for (std::size_t j = 0; j < simplex[i].x.size(); ++j) {
      d = std::max(d, std::abs(simplex[i].x[j] - simplex[0].x[j]));
    }
  }
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0) throw ConfigError("nelder_mead needs at least one parameter");
  if (!(options.initial_step > 0.0) || !(options.x_tol > 0.0)) {
    throw ConfigError("nelder_mead step and tolerance must be positive");
  }

  auto eval = [&f](const std::vector<double>& x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    x[i] += options.initial_step;
    simplex.push_back({x, eval(x)});
  }
  const auto by_value = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };

  NelderMeadResult result;
  std::vector<double> centroid(n), trial(n);
  auto along = [&](double t) {
    // centroid + t * (centroid - worst)
    for (std::size_t j = 0; j < n; ++j) {
      trial[j] = centroid[j] + t * (centroid[j] - simplex[n].x[j]);
    }
    return eval(trial);
  };

  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  while (result.iterations < options.max_iterations) {
    if (diameter(simplex) < options.x_tol) {
      result.converged = true;
      break;
    }
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j] / static_cast<double>(n);
    }

    const double fr = along(1.0);
    const std::vector<double> reflected = trial;
    if (fr < simplex[0].fx) {
      const double fe = along(2.0);
      if (fe < fr) {
        simplex[n] = {trial, fe};
      } else {
        simplex[n] = {reflected, fr};
      }
    } else if (fr < simplex[n - 1].fx) {
      simplex[n] = {reflected, fr};
    } else {
      const bool outside = fr < simplex[n].fx;
      const double fc = along(outside ? 0.5 : -0.5);
      if (fc < std::min(fr, simplex[n].fx)) {
        simplex[n] = {trial, fc};
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            simplex[i].x[j] = simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
          }
          simplex[i].fx = eval(simplex[i].x);
        }
      }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    result.best_history.push_back(simplex[0].fx);
  }
  if (!result.converged && diameter(simplex) < options.x_tol) result.converged = true;

  result.x = simplex[0].x;
  result.fx = simplex[0].fx;
  return result;
}

}  // namespace zeno
