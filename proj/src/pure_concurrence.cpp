#include "mconc/pure_concurrence.hpp"

#include <bit>
#include <cmath>

#include "mconc/density_matrix.hpp"
#include "mconc/projector_algebra.hpp"
#include "mconc/tensor_core.hpp"

namespace mconc {

double evaluate(const ConcurrenceSpec& spec, const StateVector& psi) {
  if (!(spec.shape() == psi.shape()))
    throw ShapeError("evaluate: spec and state shapes differ");
  const Eigen::VectorXcd& a = psi.amplitudes();
  const Index d = a.size();
  Eigen::VectorXcd two_copy(d * d);
  for (Index i = 0; i < d; ++i) two_copy.segment(i * d, d) = a(i) * a;
  two_copy = two_copy_reorder(two_copy, psi.shape());
  const double inner = two_copy.dot(apply_A(spec, two_copy)).real();
  if (inner < -1e-10)
    throw NumericError("two-copy expectation " + std::to_string(inner) +
                       " below tolerance; positive operator violated");
  return inner > 0 ? std::sqrt(inner) : 0.0;
}

double closed_form_CN(const StateVector& psi) {
  if (psi.norm_tag() != NormTag::normalized)
    throw ValidationError(
        "closed form mixes ⟨Ψ|Ψ⟩² and purities non-homogeneously; "
        "normalize the state first");
  const SystemShape& shape = psi.shape();
  const int n = shape.num_parties();
  const DensityMatrix rho = DensityMatrix::from_pure(psi);

  // Proper nonempty subsets come in complement pairs of equal purity.
  const unsigned full = (1u << n) - 1u;
  double purity_sum = 0.0;
  for (unsigned mask = 1; mask < full; ++mask) {
    const unsigned comp = full & ~mask;
    const int pm = std::popcount(mask), pc = std::popcount(comp);
    if (pm > pc || (pm == pc && mask > comp)) continue;
    purity_sum +=
        2.0 * purity(partial_trace(rho, SubsystemSubset::from_mask(mask, n)));
  }

  double radicand = (std::pow(2.0, n) - 2.0) - purity_sum;
  if (radicand < -1e-12)
    throw NumericError("closed-form radicand " + std::to_string(radicand) +
                       " below tolerance");
  if (radicand < 0) radicand = 0.0;
  return std::pow(2.0, 1.0 - 0.5 * n) * std::sqrt(radicand);
}

double eta(const StateVector& phi, const ConcurrenceSpec& spec_bipartite) {
  if (phi.shape().num_parties() != 2)
    throw ShapeError("eta is defined for two-party states");
  if (phi.norm_tag() != NormTag::normalized)
    throw ValidationError("eta is defined for normalized states");
  const double c = evaluate(spec_bipartite, phi);
  if (c > 2.0 + 1e-10)
    throw NumericError("two-party concurrence " + std::to_string(c) +
                       " exceeds 2");
  const double radicand = 1.0 - 0.25 * c * c;
  return radicand > 0 ? std::sqrt(radicand) : 0.0;
}

}  // namespace mconc
