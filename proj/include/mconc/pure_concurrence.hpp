#pragma once

#include "mconc/concurrence_spec.hpp"
#include "mconc/state_vector.hpp"

namespace mconc {

// √⟨Ψ⊗Ψ|A|Ψ⊗Ψ⟩ for the spec's weighted projector sum.  Subnormalized input
// is allowed; the value scales with the squared norm (degree-2 homogeneous).
double evaluate(const ConcurrenceSpec& spec, const StateVector& psi);

// Closed form of the all-even-minus concurrence:
// 2^{1-N/2} √((2^N-2)⟨Ψ|Ψ⟩² - Σ_S Tr ρ_S²) over proper nonempty subsets S.
// Requires a normalized state.
double closed_form_CN(const StateVector& psi);

// √(1 - c(φ)²/4) for a normalized two-party state.
double eta(const StateVector& phi, const ConcurrenceSpec& spec_bipartite);

}  // namespace mconc
