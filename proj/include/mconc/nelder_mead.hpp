#pragma once

#include <Eigen/Dense>
#include <functional>

namespace mconc {

struct NelderMeadOptions {
  double step = 0.5;    // initial simplex edge length
  double tol = 1e-8;    // value-spread convergence threshold
  int max_iter = 0;     // 0 selects 250 * dimension
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value;
  int iterations;
  bool converged;
};

// Derivative-free simplex minimizer (reflection 1, expansion 2,
// contraction 0.5, shrink 0.5).  Robust to the non-smooth points that
// singular-value crossings produce.
NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const NelderMeadOptions& opt = {});

}  // namespace mconc
