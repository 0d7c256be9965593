#pragma once

#include <span>

#include <Eigen/Dense>

#include "mconc/density_matrix.hpp"
#include "mconc/state_vector.hpp"
#include "mconc/system_shape.hpp"

namespace mconc {

// Kronecker product; the result shape is the concatenation of the inputs.
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Reduced state on the kept parties.  Trace is preserved.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const SubsystemSubset& keep);

// Tr rho^2.
double purity(const DensityMatrix& rho);

// Re-indexes a vector on (x_i H_i) x (x_i H_i) as one on x_i (H_i x H_i).
// The two spaces are isomorphic; the map is a fixed basis permutation.
Eigen::VectorXcd two_copy_reorder(const Eigen::VectorXcd& psi_psi,
                                  const SystemShape& shape);
StateVector two_copy_reorder(const StateVector& psi_psi,
                             const SystemShape& shape);

// Inverse permutation, back to (x_i H_i) x (x_i H_i).
Eigen::VectorXcd two_copy_unreorder(const Eigen::VectorXcd& v,
                                    const SystemShape& shape);

// Moves party i of the input to position destination[i] of the output.
StateVector permute_subsystems(const StateVector& psi,
                               std::span<const int> destination);

// Applies U_0 x U_1 x ... x U_{N-1} with one unitary per party.
StateVector apply_local_unitaries(const StateVector& psi,
                                  std::span<const Eigen::MatrixXcd> unitaries);

}  // namespace mconc
