#include "mconc/tensor_core.hpp"

#include <string>
#include <vector>

namespace mconc {

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const Index da = a.shape().total_dim();
  const Index db = b.shape().total_dim();
  Eigen::VectorXcd out(da * db);
  for (Index i = 0; i < da; ++i)
    out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  const NormTag tag = (a.norm_tag() == NormTag::normalized &&
                       b.norm_tag() == NormTag::normalized)
                          ? NormTag::normalized
                          : NormTag::subnormalized;
  return StateVector(a.shape().concat(b.shape()), std::move(out), tag);
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const SubsystemSubset& keep) {
  const SystemShape& shape = rho.shape();
  if (keep.num_parties() != shape.num_parties())
    throw ShapeError("partial_trace: subset does not match state arity");

  const SubsystemSubset traced = keep.complement();
  const SystemShape kept_shape = shape.restricted_to(keep);
  const SystemShape traced_shape = shape.restricted_to(traced);
  const Index dk = kept_shape.total_dim();
  const Index dt = traced_shape.total_dim();

  // Composite-index offsets contributed by each kept / traced sub-index.
  std::vector<Index> kept_offset(dk, 0), traced_offset(dt, 0);
  {
    std::vector<int> dig(kept_shape.num_parties());
    for (Index k = 0; k < dk; ++k) {
      kept_shape.digits_of(k, dig);
      Index off = 0;
      for (size_t i = 0; i < dig.size(); ++i)
        off += dig[i] * shape.stride(keep.members()[i]);
      kept_offset[k] = off;
    }
  }
  {
    std::vector<int> dig(traced_shape.num_parties());
    for (Index t = 0; t < dt; ++t) {
      traced_shape.digits_of(t, dig);
      Index off = 0;
      for (size_t i = 0; i < dig.size(); ++i)
        off += dig[i] * shape.stride(traced.members()[i]);
      traced_offset[t] = off;
    }
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  const Eigen::MatrixXcd& m = rho.matrix();
  for (Index r = 0; r < dk; ++r)
    for (Index c = 0; c < dk; ++c) {
      std::complex<double> acc = 0.0;
      for (Index t = 0; t < dt; ++t)
        acc += m(kept_offset[r] + traced_offset[t],
                 kept_offset[c] + traced_offset[t]);
      out(r, c) = acc;
    }
  return DensityMatrix::unchecked(kept_shape, std::move(out));
}

double purity(const DensityMatrix& rho) {
  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

Eigen::VectorXcd two_copy_reorder(const Eigen::VectorXcd& psi_psi,
                                  const SystemShape& shape) {
  const Index d = shape.total_dim();
  if (psi_psi.size() != d * d)
    throw ShapeError("two_copy_reorder: expected length " +
                     std::to_string(d * d) + ", got " +
                     std::to_string(psi_psi.size()));
  const int n = shape.num_parties();
  const SystemShape doubled = shape.doubled();
  Eigen::VectorXcd out(d * d);
  std::vector<int> da(n), db(n), dj(n);
  for (Index a = 0; a < d; ++a) {
    shape.digits_of(a, da);
    for (Index b = 0; b < d; ++b) {
      shape.digits_of(b, db);
      for (int i = 0; i < n; ++i) dj[i] = da[i] * shape.dim(i) + db[i];
      out(doubled.index_of(dj)) = psi_psi(a * d + b);
    }
  }
  return out;
}

StateVector two_copy_reorder(const StateVector& psi_psi,
                             const SystemShape& shape) {
  return StateVector(shape.doubled(),
                     two_copy_reorder(psi_psi.amplitudes(), shape),
                     psi_psi.norm_tag());
}

Eigen::VectorXcd two_copy_unreorder(const Eigen::VectorXcd& v,
                                    const SystemShape& shape) {
  const Index d = shape.total_dim();
  if (v.size() != d * d)
    throw ShapeError("two_copy_unreorder: expected length " +
                     std::to_string(d * d) + ", got " +
                     std::to_string(v.size()));
  const int n = shape.num_parties();
  const SystemShape doubled = shape.doubled();
  Eigen::VectorXcd out(d * d);
  std::vector<int> da(n), db(n), dj(n);
  for (Index a = 0; a < d; ++a) {
    shape.digits_of(a, da);
    for (Index b = 0; b < d; ++b) {
      shape.digits_of(b, db);
      for (int i = 0; i < n; ++i) dj[i] = da[i] * shape.dim(i) + db[i];
      out(a * d + b) = v(doubled.index_of(dj));
    }
  }
  return out;
}

StateVector permute_subsystems(const StateVector& psi,
                               std::span<const int> destination) {
  const SystemShape& shape = psi.shape();
  const int n = shape.num_parties();
  if (static_cast<int>(destination.size()) != n)
    throw ShapeError("permute_subsystems: permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (int dst : destination) {
    if (dst < 0 || dst >= n || seen[dst])
      throw ShapeError("permute_subsystems: not a permutation");
    seen[dst] = true;
  }

  std::vector<int> out_dims(n);
  for (int i = 0; i < n; ++i) out_dims[destination[i]] = shape.dim(i);
  SystemShape out_shape{out_dims};

  Eigen::VectorXcd out(shape.total_dim());
  std::vector<int> dig(n), out_dig(n);
  for (Index idx = 0; idx < shape.total_dim(); ++idx) {
    shape.digits_of(idx, dig);
    for (int i = 0; i < n; ++i) out_dig[destination[i]] = dig[i];
    out(out_shape.index_of(out_dig)) = psi.amplitudes()(idx);
  }
  return StateVector(std::move(out_shape), std::move(out), psi.norm_tag());
}

StateVector apply_local_unitaries(const StateVector& psi,
                                  std::span<const Eigen::MatrixXcd> unitaries) {
  const SystemShape& shape = psi.shape();
  const int n = shape.num_parties();
  if (static_cast<int>(unitaries.size()) != n)
    throw ShapeError("apply_local_unitaries: need one unitary per party");

  Eigen::VectorXcd v = psi.amplitudes();
  for (int i = 0; i < n; ++i) {
    const Index di = shape.dim(i);
    if (unitaries[i].rows() != di || unitaries[i].cols() != di)
      throw ShapeError("apply_local_unitaries: unitary size mismatch at party " +
                       std::to_string(i));
    const Index after = shape.stride(i);
    const Index before = shape.total_dim() / (di * after);
    Eigen::VectorXcd next(v.size());
    for (Index hi = 0; hi < before; ++hi)
      for (Index lo = 0; lo < after; ++lo) {
        const Index base = hi * di * after + lo;
        Eigen::VectorXcd col(di);
        for (Index x = 0; x < di; ++x) col(x) = v(base + x * after);
        col = unitaries[i] * col;
        for (Index x = 0; x < di; ++x) next(base + x * after) = col(x);
      }
    v.swap(next);
  }
  return StateVector(shape, std::move(v), psi.norm_tag());
}

}  // namespace mconc
