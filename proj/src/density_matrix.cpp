#include "mconc/density_matrix.hpp"

#include <cmath>
#include <string>

namespace mconc {

DensityMatrix DensityMatrix::from_matrix(SystemShape shape, Eigen::MatrixXcd m,
                                         const IngestOptions& opts) {
  const Index d = shape.total_dim();
  if (m.rows() != d || m.cols() != d)
    throw ShapeError("DensityMatrix: matrix is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(d) + "x" + std::to_string(d));

  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > opts.hermiticity_tol)
    throw NumericError("DensityMatrix: hermiticity violation " +
                       std::to_string(herm_err));
  m = 0.5 * (m + m.adjoint()).eval();

  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > opts.trace_tol)
    throw NumericError("DensityMatrix: trace " + std::to_string(tr) +
                       " deviates from 1 beyond tolerance");
  m /= tr;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < opts.eig_floor)
    throw NumericError("DensityMatrix: negative eigenvalue " +
                       std::to_string(min_eig) + " below floor");
  if (min_eig < 0.0) {
    // Round-off dust: clip and renormalize.
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    ev /= ev.sum();
    m = es.eigenvectors() * ev.asDiagonal() *
        es.eigenvectors().adjoint();
  }
  return DensityMatrix(std::move(shape), std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const double n2 = psi.norm_sq();
  Eigen::MatrixXcd m =
      (psi.amplitudes() * psi.amplitudes().adjoint()) / n2;
  return DensityMatrix(psi.shape(), std::move(m));
}

DensityMatrix DensityMatrix::unchecked(SystemShape shape, Eigen::MatrixXcd m) {
  const Index d = shape.total_dim();
  if (m.rows() != d || m.cols() != d)
    throw ShapeError("DensityMatrix: matrix size does not match shape");
  return DensityMatrix(std::move(shape), std::move(m));
}

}  // namespace mconc
