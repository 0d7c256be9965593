#include "mconc/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace mconc {

NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const NelderMeadOptions& opt) {
  const int n = static_cast<int>(x0.size());
  const int max_iter = opt.max_iter > 0 ? opt.max_iter : 250 * n;

  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 0; i < n; ++i) xs[i + 1](i) += opt.step;
  for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  auto sort_order = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fs[a] < fs[b]; });
  };

  int iter = 0;
  bool converged = false;
  for (; iter < max_iter; ++iter) {
    sort_order();
    const int best = order[0], worst = order[n], second = order[n - 1];
    if (fs[worst] - fs[best] <= opt.tol) {
      converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= n;

    const Eigen::VectorXd reflected = centroid + (centroid - xs[worst]);
    const double fr = f(reflected);
    if (fr < fs[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - xs[worst]);
      const double fe = f(expanded);
      if (fe < fr) {
        xs[worst] = expanded;
        fs[worst] = fe;
      } else {
        xs[worst] = reflected;
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second]) {
      xs[worst] = reflected;
      fs[worst] = fr;
      continue;
    }
    const Eigen::VectorXd contracted =
        centroid + 0.5 * ((fr < fs[worst] ? reflected : xs[worst]) - centroid);
    const double fc = f(contracted);
    if (fc < std::min(fr, fs[worst])) {
      xs[worst] = contracted;
      fs[worst] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      const int j = order[i];
      xs[j] = xs[order[0]] + 0.5 * (xs[j] - xs[order[0]]);
      fs[j] = f(xs[j]);
    }
  }

  sort_order();
  return {xs[order[0]], fs[order[0]], iter, converged};
}

}  // namespace mconc
