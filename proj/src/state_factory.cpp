#include "mconc/state_factory.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mconc/errors.hpp"
#include "mconc/tensor_core.hpp"

namespace mconc {

SchmidtWeights::SchmidtWeights(std::vector<double> lambdas)
    : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw ValidationError("weight list is empty");
  double sum = 0.0;
  for (double l : lambdas_) {
    if (l < 0)
      throw ValidationError("negative weight " + std::to_string(l));
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError("weights sum to " + std::to_string(sum) +
                          ", expected 1");
}

SchmidtWeights SchmidtWeights::uniform(int count) {
  if (count < 1) throw ValidationError("weight count must be positive");
  return SchmidtWeights(std::vector<double>(count, 1.0 / count));
}

SchmidtWeights SchmidtWeights::random(int count, Rng& rng) {
  if (count < 1) throw ValidationError("weight count must be positive");
  std::vector<double> l(count);
  double sum = 0.0;
  for (double& v : l) {
    v = -std::log(rng.uniform());
    sum += v;
  }
  for (double& v : l) v /= sum;
  // Guard against accumulated round-off in the simplex constraint.
  l.back() += 1.0 - std::accumulate(l.begin(), l.end(), 0.0);
  return SchmidtWeights(std::move(l));
}

StateVector ghz(const SchmidtWeights& weights, int num_parties, int dim) {
  if (num_parties < 2)
    throw ValidationError("GHZ construction needs at least 2 parties");
  if (weights.count() > dim)
    throw ValidationError("weight count " + std::to_string(weights.count()) +
                          " exceeds local dimension " + std::to_string(dim));
  SystemShape shape{std::vector<int>(num_parties, dim)};
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(shape.total_dim());
  std::vector<int> digits(num_parties);
  for (int i = 0; i < weights.count(); ++i) {
    std::fill(digits.begin(), digits.end(), i);
    amps(shape.index_of(digits)) = std::sqrt(weights.lambdas()[i]);
  }
  return StateVector(std::move(shape), std::move(amps));
}

StateVector w_state(int num_parties) {
  if (num_parties < 2)
    throw ValidationError("W construction needs at least 2 parties");
  SystemShape shape{std::vector<int>(num_parties, 2)};
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(shape.total_dim());
  const double a = 1.0 / std::sqrt(static_cast<double>(num_parties));
  for (int i = 0; i < num_parties; ++i) amps(shape.stride(i)) = a;
  return StateVector(std::move(shape), std::move(amps));
}

StateVector bell_pair() {
  return ghz(SchmidtWeights::uniform(2), 2, 2);
}

StateVector biseparable(const StateVector& phi, const StateVector& zeta,
                        std::span<const int> destination) {
  return permute_subsystems(tensor_product(phi, zeta), destination);
}

StateVector random_pure(const SystemShape& shape, Rng& rng) {
  Eigen::VectorXcd amps(shape.total_dim());
  for (Index i = 0; i < amps.size(); ++i) amps(i) = rng.complex_normal();
  amps /= amps.norm();
  return StateVector(shape, std::move(amps));
}

StateVector random_pure(const SystemShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(shape, rng);
}

DensityMatrix random_density(const SystemShape& shape, int rank, Rng& rng) {
  const Index d = shape.total_dim();
  if (rank < 1 || rank > d)
    throw ValidationError("rank " + std::to_string(rank) +
                          " outside [1, " + std::to_string(d) + "]");
  Eigen::MatrixXcd g(d, rank);
  for (Index c = 0; c < rank; ++c)
    for (Index r = 0; r < d; ++r) g(r, c) = rng.complex_normal();
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::from_matrix(shape, m);
}

DensityMatrix random_density(const SystemShape& shape, int rank,
                             std::uint64_t seed) {
  Rng rng(seed);
  return random_density(shape, rank, rng);
}

DensityMatrix white_noise_mix(const StateVector& psi, double visibility) {
  if (psi.norm_tag() != NormTag::normalized)
    throw ValidationError("noise mixing requires a normalized state");
  if (visibility < 0.0 || visibility > 1.0)
    throw ValidationError("visibility " + std::to_string(visibility) +
                          " outside [0, 1]");
  const Index d = psi.shape().total_dim();
  Eigen::MatrixXcd m =
      visibility * (psi.amplitudes() * psi.amplitudes().adjoint());
  m += ((1.0 - visibility) / static_cast<double>(d)) *
       Eigen::MatrixXcd::Identity(d, d);
  return DensityMatrix::from_matrix(psi.shape(), m);
}

DensityMatrix separable_mixture(const SystemShape& shape, int num_terms,
                                Rng& rng) {
  if (num_terms < 1) throw ValidationError("mixture needs at least one term");
  const SchmidtWeights p = SchmidtWeights::random(num_terms, rng);
  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Zero(shape.total_dim(), shape.total_dim());
  for (int t = 0; t < num_terms; ++t) {
    Eigen::MatrixXcd term(1, 1);
    term(0, 0) = 1.0;
    for (int i = 0; i < shape.num_parties(); ++i) {
      const SystemShape local{{shape.dim(i)}};
      const Eigen::MatrixXcd factor =
          random_density(local, shape.dim(i), rng).matrix();
      Eigen::MatrixXcd next(term.rows() * factor.rows(),
                            term.cols() * factor.cols());
      for (Index r = 0; r < term.rows(); ++r)
        for (Index c = 0; c < term.cols(); ++c)
          next.block(r * factor.rows(), c * factor.cols(), factor.rows(),
                     factor.cols()) = term(r, c) * factor;
      term.swap(next);
    }
    m += p.lambdas()[t] * term;
  }
  return DensityMatrix::from_matrix(shape, m);
}

DensityMatrix separable_mixture(const SystemShape& shape, int num_terms,
                                std::uint64_t seed) {
  Rng rng(seed);
  return separable_mixture(shape, num_terms, rng);
}

Eigen::MatrixXcd random_unitary(int dim, Rng& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) g(r, c) = rng.complex_normal();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  for (int c = 0; c < dim; ++c) {
    const std::complex<double> d = qr.matrixQR()(c, c);
    if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
  }
  return q;
}

std::vector<Eigen::MatrixXcd> random_local_unitaries(const SystemShape& shape,
                                                     Rng& rng) {
  std::vector<Eigen::MatrixXcd> us;
  us.reserve(shape.num_parties());
  for (int i = 0; i < shape.num_parties(); ++i)
    us.push_back(random_unitary(shape.dim(i), rng));
  return us;
}

std::vector<Eigen::MatrixXcd> random_local_unitaries(const SystemShape& shape,
                                                     std::uint64_t seed) {
  Rng rng(seed);
  return random_local_unitaries(shape, rng);
}

}  // namespace mconc
