#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mconc/concurrence_spec.hpp"
#include "mconc/system_shape.hpp"

namespace mconc {

// Orthonormal bases of the antisymmetric / symmetric subspaces of H ⊗ H for a
// single party of dimension n.  Antisym: (|jk⟩-|kj⟩)/√2 for j<k.  Sym: |jj⟩
// for all j, then (|jk⟩+|kj⟩)/√2 for j<k.
std::vector<Eigen::VectorXcd> antisym_basis(int n);
std::vector<Eigen::VectorXcd> sym_basis(int n);

// Spectral form of the weighted projector sum: the operator equals
// Σ_α |χ_α⟩⟨χ_α| with each χ_α scaled by the square root of its eigenvalue.
// Vectors live on the interleaved two-copy space ⊗ᵢ(Hᵢ ⊗ Hᵢ).
struct ChiBasis {
  SystemShape shape;  // single-copy shape
  std::vector<Eigen::VectorXcd> vectors;
  std::vector<SignString> source_strings;
};

ChiBasis chi_vectors(const ConcurrenceSpec& spec);

// Applies the weighted projector sum to a vector on the interleaved two-copy
// space without materializing the matrix.  Odd-minus strings are skipped.
Eigen::VectorXcd apply_A(const ConcurrenceSpec& spec,
                         const Eigen::VectorXcd& v);

// Dense matrix of the operator; test oracle only, guarded to two-copy
// dimension <= 4096.
Eigen::MatrixXcd dense_A(const ConcurrenceSpec& spec);

// Simultaneous exchange of the two copies of every party (interleaved layout).
Eigen::VectorXcd global_copy_swap(const Eigen::VectorXcd& v,
                                  const SystemShape& shape);

}  // namespace mconc
