#include "mconc/mixed_concurrence.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "mconc/nelder_mead.hpp"
#include "mconc/pure_concurrence.hpp"
#include "mconc/rng.hpp"
#include "mconc/tensor_core.hpp"

namespace mconc {

namespace {

// Runs body(0..count-1) on up to `threads` workers; callers index results by
// restart and reduce sequentially, so scheduling never changes the outcome.
template <typename Body>
void run_indexed(int count, int threads, const Body& body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

Eigen::VectorXcd gaussian_vector(Rng& rng, Index n) {
  Eigen::VectorXcd v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

Eigen::MatrixXcd gaussian_matrix(Rng& rng, Index rows, Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = rng.complex_normal();
  return m;
}

}  // namespace

SpectralEnsemble SpectralEnsemble::from_density(const DensityMatrix& rho,
                                                double cutoff) {
  const double trace = rho.matrix().trace().real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  if (solver.info() != Eigen::Success)
    throw NumericError("eigendecomposition failed");
  const Eigen::VectorXd& mu = solver.eigenvalues();
  if (mu(0) < -1e-10)
    throw NumericError("density matrix eigenvalue " + std::to_string(mu(0)) +
                       " below PSD tolerance");

  double kept_mass = 0.0;
  std::vector<int> kept;
  for (Index i = mu.size() - 1; i >= 0; --i) {  // descending
    if (mu(i) < cutoff * trace) break;
    kept.push_back(static_cast<int>(i));
    kept_mass += mu(i);
  }
  if (kept.empty()) throw NumericError("density matrix has no spectral mass");

  // Redistribute the truncated mass so the members still sum to the input.
  const double rescale = trace / kept_mass;
  SpectralEnsemble out{rho.shape(), {}};
  out.members.reserve(kept.size());
  for (int i : kept)
    out.members.emplace_back(rho.shape(),
                             std::sqrt(mu(i) * rescale) *
                                 solver.eigenvectors().col(i),
                             NormTag::subnormalized);
  return out;
}

std::vector<double> SpectralEnsemble::eigenvalues() const {
  std::vector<double> mu;
  mu.reserve(members.size());
  for (const auto& m : members) mu.push_back(m.norm_sq());
  return mu;
}

CoefficientMatrices coefficient_matrices(const std::vector<StateVector>& members,
                                         const ChiBasis& chis) {
  if (members.empty()) throw ShapeError("coefficient matrices need members");
  const SystemShape& shape = chis.shape;
  const Index d = shape.total_dim();
  const int r = static_cast<int>(members.size());

  Eigen::MatrixXcd phi(d, r);
  for (int j = 0; j < r; ++j) {
    if (!(members[j].shape() == shape))
      throw ShapeError("ensemble member shape differs from operator shape");
    phi.col(j) = members[j].amplitudes();
  }

  CoefficientMatrices out;
  out.mats.reserve(chis.vectors.size());
  for (const auto& chi : chis.vectors) {
    // T_{jk} = ⟨φⱼ ⊗ φₖ|χ⟩ in the plain two-copy order.
    const Eigen::VectorXcd plain = two_copy_unreorder(chi, shape);
    const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>
        m(plain.data(), d, d);
    out.mats.push_back(phi.adjoint() * m * phi.conjugate());
  }
  return out;
}

CoefficientMatrices coefficient_matrices(const SpectralEnsemble& ens,
                                         const ChiBasis& chis) {
  return coefficient_matrices(ens.members, chis);
}

ZVector::ZVector(Eigen::VectorXcd z) : z_(std::move(z)) {
  if (std::abs(z_.norm() - 1.0) > 1e-12)
    throw ValidationError("combination coefficients must have unit norm");
}

ZVector ZVector::normalized(const Eigen::VectorXcd& v) {
  const double n = v.norm();
  if (n <= 0) throw ValidationError("cannot normalize a zero vector");
  return ZVector(v / n);
}

Eigen::MatrixXcd tau(const ZVector& z, const CoefficientMatrices& T) {
  if (static_cast<size_t>(z.coeffs().size()) != T.size())
    throw ShapeError("combination length differs from matrix count");
  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Zero(T.mats.front().rows(), T.mats.front().cols());
  for (size_t a = 0; a < T.size(); ++a) out += z.coeffs()(a) * T.mats[a];
  return out;
}

SeminormResult seminorm_bound(const Eigen::MatrixXcd& tau) {
  if (tau.rows() != tau.cols())
    throw ShapeError("seminorm bound needs a square matrix");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
  const Eigen::VectorXd& sv = svd.singularValues();  // descending
  const double value = 2.0 * sv(0) - sv.sum();
  return {value > 0 ? value : 0.0, sv};
}

namespace {

Eigen::VectorXcd unpack_z(const Eigen::VectorXd& x, int n) {
  Eigen::VectorXcd z(n);
  z(0) = x(0);  // phase gauge: first coefficient real
  for (int k = 1; k < n; ++k) z(k) = {x(2 * k - 1), x(2 * k)};
  return z;
}

}  // namespace

BoundReport optimize_lower_bound(const CoefficientMatrices& T,
                                 const BoundOptions& opt) {
  const int n = static_cast<int>(T.size());
  if (n == 0) throw ValidationError("no coefficient matrices to optimize over");

  BoundReport report;
  if (n == 1) {
    const SeminormResult sem = seminorm_bound(T.mats.front());
    report.lower_bound = sem.value;
    report.z_opt = Eigen::VectorXcd::Ones(1);
    report.singular_values = sem.singular_values;
    report.restarts_used = 0;
    report.converged = true;
    return report;
  }

  const int dim = 2 * n - 1;
  auto objective = [&](const Eigen::VectorXd& x) -> double {
    Eigen::VectorXcd z = unpack_z(x, n);
    const double norm = z.norm();
    if (norm < 1e-12) return 0.0;
    return -seminorm_bound(tau(ZVector(z / norm), T)).value;
  };

  struct RestartResult {
    double value = -1.0;
    Eigen::VectorXd x;
    bool converged = false;
  };
  std::vector<RestartResult> results(std::max(opt.restarts, 1));
  run_indexed(static_cast<int>(results.size()), opt.threads, [&](int k) {
    Rng rng = Rng::derive(opt.seed, static_cast<std::uint64_t>(k));
    Eigen::VectorXd x0(dim);
    for (int i = 0; i < dim; ++i) x0(i) = rng.normal();
    NelderMeadOptions nm;
    nm.tol = opt.tol;
    nm.max_iter = opt.max_iter;
    const NelderMeadResult r = nelder_mead(objective, x0, nm);
    results[k] = {-r.value, r.x, r.converged};
  });

  int best = 0;
  for (size_t k = 1; k < results.size(); ++k)
    if (results[k].value > results[best].value) best = static_cast<int>(k);

  Eigen::VectorXcd z = unpack_z(results[best].x, n);
  z /= z.norm();
  if (std::abs(z(0)) > 0) z *= std::conj(z(0)) / std::abs(z(0));
  const SeminormResult sem = seminorm_bound(tau(ZVector(z), T));

  report.lower_bound = sem.value;
  report.z_opt = z;
  report.singular_values = sem.singular_values;
  report.restarts_used = static_cast<int>(results.size());
  report.converged = results[best].converged;
  return report;
}

double exact_rank_one(const DensityMatrix& rho, const ConcurrenceSpec& spec) {
  const ChiBasis chis = chi_vectors(spec);
  if (chis.vectors.size() != 1)
    throw ValidationError(
        "operator has " + std::to_string(chis.vectors.size()) +
        " spectral-basis vectors; the bound is exact only for one "
        "(use optimize_lower_bound)");
  const SpectralEnsemble ens = SpectralEnsemble::from_density(rho);
  const CoefficientMatrices T = coefficient_matrices(ens, chis);
  return seminorm_bound(T.mats.front()).value;
}

QuasiPureResult quasi_pure(const SpectralEnsemble& ens, const ChiBasis& chis) {
  const int r = ens.rank();
  if (r == 0) throw ShapeError("empty ensemble");
  std::vector<StateVector> members = ens.members;

  CoefficientMatrices T = coefficient_matrices(members, chis);
  auto denominator = [&](int d) {
    double sum = 0.0;
    for (const auto& t : T.mats) sum += std::norm(t(d, d));
    return sum;
  };

  // Among eigenvectors degenerate with the largest eigenvalue, take the one
  // with the largest denominator.
  const double mu1 = members[0].norm_sq();
  int dominant = 0;
  bool degenerate = false;
  for (int i = 1; i < r; ++i) {
    if ((mu1 - members[i].norm_sq()) / mu1 >= 1e-10) break;
    degenerate = true;
    if (denominator(i) > denominator(dominant)) dominant = i;
  }

  // Deterministic reporting phase: largest-magnitude amplitude real positive.
  {
    const Eigen::VectorXcd& a = members[dominant].amplitudes();
    Index top = 0;
    for (Index i = 1; i < a.size(); ++i)
      if (std::abs(a(i)) > std::abs(a(top))) top = i;
    if (std::abs(a(top)) > 0) {
      const std::complex<double> phase = std::conj(a(top)) / std::abs(a(top));
      members[dominant] = StateVector(members[dominant].shape(), phase * a,
                                      NormTag::subnormalized);
      T = coefficient_matrices(members, chis);
    }
  }

  const double denom = denominator(dominant);
  if (denom <= 1e-14)
    throw NumericError(
        "quasi-pure denominator vanishes: the dominant eigenvector has zero "
        "pure concurrence");

  Eigen::MatrixXcd tau_qp = Eigen::MatrixXcd::Zero(r, r);
  for (const auto& t : T.mats) tau_qp += t(dominant, dominant) * t.conjugate();
  tau_qp /= std::sqrt(denom);

  QuasiPureResult out;
  out.tau_qp = std::move(tau_qp);
  out.value = seminorm_bound(out.tau_qp).value;
  out.degenerate_dominant = degenerate;
  out.dominant_index = dominant;
  return out;
}

namespace {

// Σᵢ √(Σ_α |[V̄ T^α V̄ᵀ]_{ii}|²), the ensemble-averaged concurrence of the
// decomposition members ψᵢ = Σⱼ V_{ij} φⱼ; the conjugate enters because the
// coefficient matrices live in the bra of the two-copy overlap.
double roof_objective(const Eigen::MatrixXcd& V, const CoefficientMatrices& T) {
  const Index m = V.rows();
  const Eigen::MatrixXcd Vc = V.conjugate();
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(m);
  for (const auto& t : T.mats) {
    const Eigen::MatrixXcd W = Vc * t;
    const Eigen::VectorXcd diag =
        (W.array() * Vc.array()).rowwise().sum().matrix();
    sums += diag.cwiseAbs2();
  }
  return sums.cwiseSqrt().sum();
}

Eigen::MatrixXcd thin_q(const Eigen::MatrixXcd& g) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() *
                       Eigen::MatrixXcd::Identity(g.rows(), g.cols());
  // Fix column phases so the factorization is unique.
  const Eigen::MatrixXcd rmat =
      qr.matrixQR().topRows(g.cols()).triangularView<Eigen::Upper>();
  for (Index c = 0; c < q.cols(); ++c) {
    const std::complex<double> d = rmat(c, c);
    if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
  }
  return q;
}

}  // namespace

RoofEstimate roof_direct_search(const DensityMatrix& rho,
                                const ConcurrenceSpec& spec,
                                const RoofOptions& opt) {
  const SpectralEnsemble ens = SpectralEnsemble::from_density(rho);
  const int r = ens.rank();
  const int m = opt.m == 0 ? std::min(r * r, 2 * r) : opt.m;
  if (m < r || m > r * r)
    throw ValidationError("decomposition size " + std::to_string(m) +
                          " outside [" + std::to_string(r) + ", " +
                          std::to_string(r * r) + "]");
  const ChiBasis chis = chi_vectors(spec);
  const CoefficientMatrices T = coefficient_matrices(ens, chis);

  struct RestartResult {
    double value = 0.0;
    Eigen::MatrixXcd V;
  };
  const int restarts = std::max(opt.restarts, 1);
  std::vector<RestartResult> results(restarts);
  run_indexed(restarts, opt.threads, [&](int k) {
    Rng rng = Rng::derive(opt.seed, static_cast<std::uint64_t>(k));
    Eigen::MatrixXcd V = k == 0 ? Eigen::MatrixXcd::Identity(m, r)
                                : thin_q(gaussian_matrix(rng, m, r));
    double fv = roof_objective(V, T);
    double eps = 0.25;
    for (int it = 0; it < opt.iterations; ++it) {
      const Eigen::MatrixXcd g = gaussian_matrix(rng, m, m);
      const Eigen::MatrixXcd anti = 0.5 * (g - g.adjoint());
      const Eigen::MatrixXcd V2 = (eps * anti).exp() * V;
      const double f2 = roof_objective(V2, T);
      if (f2 < fv) {
        V = V2;
        fv = f2;
        eps = std::min(eps * 1.4, 0.5);
      } else {
        eps = std::max(eps * 0.92, 1e-8);
      }
    }
    results[k] = {fv, std::move(V)};
  });

  int best = 0;
  for (int k = 1; k < restarts; ++k)
    if (results[k].value < results[best].value) best = k;
  const Eigen::MatrixXcd& V = results[best].V;

  RoofEstimate out;
  out.isometry = V;
  out.upper_bound = 0.0;
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXcd psi =
        Eigen::VectorXcd::Zero(ens.shape.total_dim());
    for (int j = 0; j < r; ++j) psi += V(i, j) * ens.members[j].amplitudes();
    if (psi.squaredNorm() <= 1e-30) continue;  // empty decomposition slot
    StateVector member(ens.shape, std::move(psi), NormTag::subnormalized);
    out.upper_bound += evaluate(spec, member);
    out.decomposition.push_back(std::move(member));
  }
  return out;
}

}  // namespace mconc
