#include "mconc/state_vector.hpp"

#include <cmath>
#include <string>

namespace mconc {

namespace {
constexpr double kNormTol = 1e-8;
}

StateVector::StateVector(SystemShape shape, Eigen::VectorXcd amplitudes,
                         NormTag tag)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)), tag_(tag) {
  if (amplitudes_.size() != shape_.total_dim())
    throw ShapeError("StateVector: amplitude count " +
                     std::to_string(amplitudes_.size()) +
                     " does not match total dimension " +
                     std::to_string(shape_.total_dim()));
  const double n2 = amplitudes_.squaredNorm();
  if (tag_ == NormTag::normalized) {
    if (std::abs(n2 - 1.0) > kNormTol)
      throw NumericError("StateVector: squared norm " + std::to_string(n2) +
                         " deviates from 1 beyond tolerance");
  } else {
    if (!(n2 > 0.0) || n2 > 1.0 + kNormTol)
      throw NumericError("StateVector: subnormalized squared norm " +
                         std::to_string(n2) + " outside (0, 1]");
  }
}

StateVector StateVector::scaled(double factor) const {
  if (!(factor > 0.0))
    throw ValidationError("StateVector::scaled: factor must be positive");
  return StateVector(shape_, factor * amplitudes_, NormTag::subnormalized);
}

}  // namespace mconc
