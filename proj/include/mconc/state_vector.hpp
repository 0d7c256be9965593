#pragma once

#include <Eigen/Dense>

#include "mconc/system_shape.hpp"

namespace mconc {

enum class NormTag { normalized, subnormalized };

// Complex amplitude vector over the product space.  Normalized states carry
// <psi|psi> = 1 within 1e-8; subnormalized ones (ensemble members) carry
// 0 < <psi|psi> <= 1 + 1e-8.
class StateVector {
public:
  StateVector(SystemShape shape, Eigen::VectorXcd amplitudes,
              NormTag tag = NormTag::normalized);

  const SystemShape& shape() const { return shape_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  NormTag norm_tag() const { return tag_; }
  double norm_sq() const { return amplitudes_.squaredNorm(); }

  StateVector scaled(double factor) const;

private:
  SystemShape shape_;
  Eigen::VectorXcd amplitudes_;
  NormTag tag_;
};

}  // namespace mconc
