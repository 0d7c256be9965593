#pragma once

#include <Eigen/Dense>

#include "mconc/state_vector.hpp"
#include "mconc/system_shape.hpp"

namespace mconc {

struct IngestOptions {
  double hermiticity_tol = 1e-8;
  double trace_tol = 1e-8;
  // Eigenvalues in [eig_floor, 0) are clipped to zero and the state is
  // renormalized; anything below eig_floor is rejected.
  double eig_floor = -1e-10;
};

// Hermitian, positive semidefinite, unit-trace matrix over the product space.
class DensityMatrix {
public:
  // Validating ingestion: symmetrizes, checks trace, clips eigenvalue dust.
  static DensityMatrix from_matrix(SystemShape shape, Eigen::MatrixXcd m,
                                   const IngestOptions& opts = {});

  // |psi><psi| / <psi|psi>.
  static DensityMatrix from_pure(const StateVector& psi);

  // For matrices that are valid by construction (partial traces, convex
  // mixtures of valid states).  Checks the size only.
  static DensityMatrix unchecked(SystemShape shape, Eigen::MatrixXcd m);

  const SystemShape& shape() const { return shape_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Index dim() const { return shape_.total_dim(); }

private:
  DensityMatrix(SystemShape shape, Eigen::MatrixXcd m)
      : shape_(std::move(shape)), matrix_(std::move(m)) {}

  SystemShape shape_;
  Eigen::MatrixXcd matrix_;
};

}  // namespace mconc
