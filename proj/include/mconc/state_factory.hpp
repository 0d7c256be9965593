#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "mconc/density_matrix.hpp"
#include "mconc/rng.hpp"
#include "mconc/state_vector.hpp"

namespace mconc {

// Probability weights for Σᵢ √λᵢ |i…i⟩ constructions.
class SchmidtWeights {
 public:
  explicit SchmidtWeights(std::vector<double> lambdas);
  static SchmidtWeights uniform(int count);
  static SchmidtWeights random(int count, Rng& rng);  // flat Dirichlet
  const std::vector<double>& lambdas() const { return lambdas_; }
  int count() const { return static_cast<int>(lambdas_.size()); }

 private:
  std::vector<double> lambdas_;
};

// Σᵢ √λᵢ |i…i⟩ on num_parties qudits of dimension dim; fewer weights than dim
// pad with zeros.
StateVector ghz(const SchmidtWeights& weights, int num_parties, int dim);

// Uniform superposition of single-excitation qubit basis states.
StateVector w_state(int num_parties);

// (|00⟩ + |11⟩)/√2.
StateVector bell_pair();

// phi ⊗ zeta with the combined parties moved to the requested positions
// (destination[i] = final position of combined party i).
StateVector biseparable(const StateVector& phi, const StateVector& zeta,
                        std::span<const int> destination);

StateVector random_pure(const SystemShape& shape, Rng& rng);
StateVector random_pure(const SystemShape& shape, std::uint64_t seed);

// GG†/Tr(GG†) with G a D×rank complex Gaussian matrix.
DensityMatrix random_density(const SystemShape& shape, int rank, Rng& rng);
DensityMatrix random_density(const SystemShape& shape, int rank,
                             std::uint64_t seed);

// visibility·|ψ⟩⟨ψ| + (1-visibility)·I/D.
DensityMatrix white_noise_mix(const StateVector& psi, double visibility);

// Σᵢ pᵢ ⊗ⱼ ρⱼ⁽ⁱ⁾ with Dirichlet pᵢ and full-rank single-party factors.
DensityMatrix separable_mixture(const SystemShape& shape, int num_terms,
                                Rng& rng);
DensityMatrix separable_mixture(const SystemShape& shape, int num_terms,
                                std::uint64_t seed);

// Haar-distributed unitary (Ginibre QR with phase-fixed R diagonal).
Eigen::MatrixXcd random_unitary(int dim, Rng& rng);
std::vector<Eigen::MatrixXcd> random_local_unitaries(const SystemShape& shape,
                                                     Rng& rng);
std::vector<Eigen::MatrixXcd> random_local_unitaries(const SystemShape& shape,
                                                     std::uint64_t seed);

}  // namespace mconc
