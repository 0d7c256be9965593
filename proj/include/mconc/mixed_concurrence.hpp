#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mconc/concurrence_spec.hpp"
#include "mconc/density_matrix.hpp"
#include "mconc/projector_algebra.hpp"
#include "mconc/state_vector.hpp"

namespace mconc {

// Subnormalized eigenstates √μᵢ|eᵢ⟩ of a density matrix, descending μ.
struct SpectralEnsemble {
  SystemShape shape;
  std::vector<StateVector> members;

  static SpectralEnsemble from_density(const DensityMatrix& rho,
                                       double cutoff = 1e-12);
  int rank() const { return static_cast<int>(members.size()); }
  std::vector<double> eigenvalues() const;
};

// One r×r complex symmetric matrix per spectral-basis vector of the operator.
struct CoefficientMatrices {
  std::vector<Eigen::MatrixXcd> mats;

  int rank() const {
    return mats.empty() ? 0 : static_cast<int>(mats.front().rows());
  }
  size_t size() const { return mats.size(); }
};

CoefficientMatrices coefficient_matrices(const SpectralEnsemble& ens,
                                         const ChiBasis& chis);
CoefficientMatrices coefficient_matrices(const std::vector<StateVector>& members,
                                         const ChiBasis& chis);

// Unit-norm complex combination coefficients for the T matrices.
class ZVector {
 public:
  explicit ZVector(Eigen::VectorXcd z);
  static ZVector normalized(const Eigen::VectorXcd& v);
  const Eigen::VectorXcd& coeffs() const { return z_; }

 private:
  Eigen::VectorXcd z_;
};

Eigen::MatrixXcd tau(const ZVector& z, const CoefficientMatrices& T);

struct SeminormResult {
  double value;  // max(0, λ₁ - Σ_{j>1} λⱼ)
  Eigen::VectorXd singular_values;  // descending
};

SeminormResult seminorm_bound(const Eigen::MatrixXcd& tau);

struct BoundOptions {
  int restarts = 32;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int threads = 1;
  int max_iter = 0;  // per-restart simplex iteration cap, 0 = auto
};

struct BoundReport {
  double lower_bound = 0.0;
  Eigen::VectorXcd z_opt;
  Eigen::VectorXd singular_values;
  int restarts_used = 0;
  bool converged = false;
};

// Maximizes seminorm_bound(tau(z, T)) over unit-norm z by multistart simplex
// search.  Deterministic given the seed for any thread count; single-matrix
// inputs bypass the optimization.
BoundReport optimize_lower_bound(const CoefficientMatrices& T,
                                 const BoundOptions& opt = {});

// For specs whose operator has exactly one spectral-basis vector the bound is
// the exact convex roof.
double exact_rank_one(const DensityMatrix& rho, const ConcurrenceSpec& spec);

struct QuasiPureResult {
  Eigen::MatrixXcd tau_qp;
  double value = 0.0;
  bool degenerate_dominant = false;
  int dominant_index = 0;
};

// Quasi-pure approximation built from the dominant eigenvector; errors when
// that eigenvector has vanishing pure concurrence (denominator ≤ 1e-14).
QuasiPureResult quasi_pure(const SpectralEnsemble& ens, const ChiBasis& chis);

struct RoofOptions {
  int m = 0;  // decomposition size, 0 = min(r², 2r)
  int restarts = 8;
  int iterations = 1500;  // perturbation steps per restart
  std::uint64_t seed = 0;
  int threads = 1;
};

struct RoofEstimate {
  double upper_bound = 0.0;
  Eigen::MatrixXcd isometry;               // m×r, V†V = I
  std::vector<StateVector> decomposition;  // subnormalized members
};

// Direct convex-roof search over decompositions |ψᵢ⟩ = Σⱼ V_ij|φⱼ⟩:
// random isometry starts refined by small random unitary perturbations with
// acceptance on improvement.  Upper bound only; no optimality claim.
RoofEstimate roof_direct_search(const DensityMatrix& rho,
                                const ConcurrenceSpec& spec,
                                const RoofOptions& opt = {});

}  // namespace mconc
