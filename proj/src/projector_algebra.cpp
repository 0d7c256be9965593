#include "mconc/projector_algebra.hpp"

#include <cmath>
#include <string>

namespace mconc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_min_dim(int n) {
  if (n < 2)
    throw InputError("symmetric/antisymmetric split needs dimension >= 2, got " +
                     std::to_string(n));
}

// Exchanges the two copy digits of the selected parties (bitmask) in the
// interleaved layout.
Eigen::VectorXcd swap_parties(const Eigen::VectorXcd& v,
                              const SystemShape& doubled,
                              const SystemShape& shape, unsigned mask) {
  const int n = shape.num_parties();
  Eigen::VectorXcd out(v.size());
  std::vector<int> dig(n);
  for (Index idx = 0; idx < v.size(); ++idx) {
    doubled.digits_of(idx, dig);
    Index target = idx;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      const int ni = shape.dim(i);
      const int a = dig[i] / ni, b = dig[i] % ni;
      target += (static_cast<Index>(b * ni + a) - dig[i]) * doubled.stride(i);
    }
    out(target) = v(idx);
  }
  return out;
}

}  // namespace

std::vector<Eigen::VectorXcd> antisym_basis(int n) {
  require_min_dim(n);
  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(n * (n - 1) / 2);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n * n);
      v(j * n + k) = kInvSqrt2;
      v(k * n + j) = -kInvSqrt2;
      basis.push_back(std::move(v));
    }
  return basis;
}

std::vector<Eigen::VectorXcd> sym_basis(int n) {
  require_min_dim(n);
  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(n * (n + 1) / 2);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n * n);
    v(j * n + j) = 1.0;
    basis.push_back(std::move(v));
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n * n);
      v(j * n + k) = kInvSqrt2;
      v(k * n + j) = kInvSqrt2;
      basis.push_back(std::move(v));
    }
  return basis;
}

ChiBasis chi_vectors(const ConcurrenceSpec& spec) {
  const SystemShape& shape = spec.shape();
  const int n = shape.num_parties();
  const Index d2 = shape.doubled().total_dim();

  Index total = 0;
  for (const auto& [s, p] : spec.even_minus_weights()) {
    Index count = 1;
    for (int i = 0; i < n; ++i) {
      const Index ni = shape.dim(i);
      count *= (s[i] == '-') ? ni * (ni - 1) / 2 : ni * (ni + 1) / 2;
    }
    total += count;
  }
  if (total * d2 > (Index{1} << 25))
    throw ValidationError(
        "spectral basis too large to materialize at desk scale");

  ChiBasis out{shape, {}, {}};
  out.vectors.reserve(total);
  out.source_strings.reserve(total);
  for (const auto& [s, p] : spec.even_minus_weights()) {
    const double scale = std::sqrt(p);
    std::vector<std::vector<Eigen::VectorXcd>> party_bases;
    party_bases.reserve(n);
    for (int i = 0; i < n; ++i)
      party_bases.push_back(s[i] == '-' ? antisym_basis(shape.dim(i))
                                        : sym_basis(shape.dim(i)));

    std::vector<size_t> pick(n, 0);
    while (true) {
      Eigen::VectorXcd chi = scale * party_bases[0][pick[0]];
      for (int i = 1; i < n; ++i) {
        const Eigen::VectorXcd& factor = party_bases[i][pick[i]];
        Eigen::VectorXcd next(chi.size() * factor.size());
        for (Index a = 0; a < chi.size(); ++a)
          next.segment(a * factor.size(), factor.size()) = chi(a) * factor;
        chi.swap(next);
      }
      out.vectors.push_back(std::move(chi));
      out.source_strings.push_back(s);

      int i = n - 1;
      while (i >= 0 && ++pick[i] == party_bases[i].size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

Eigen::VectorXcd apply_A(const ConcurrenceSpec& spec,
                         const Eigen::VectorXcd& v) {
  const SystemShape& shape = spec.shape();
  const SystemShape doubled = shape.doubled();
  if (v.size() != doubled.total_dim())
    throw ShapeError("apply_A: expected two-copy length " +
                     std::to_string(doubled.total_dim()) + ", got " +
                     std::to_string(v.size()));
  const int n = shape.num_parties();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const auto& [s, p] : spec.even_minus_weights()) {
    // Sequential per-party projection t <- (t ± swap_i t)/2.
    Eigen::VectorXcd t = v;
    for (int i = 0; i < n; ++i) {
      const double sign = (s[i] == '+') ? 1.0 : -1.0;
      t = 0.5 * (t + sign * swap_parties(t, doubled, shape, 1u << i));
    }
    out += p * t;
  }
  return out;
}

Eigen::MatrixXcd dense_A(const ConcurrenceSpec& spec) {
  const Index d2 = spec.shape().doubled().total_dim();
  if (d2 > 4096)
    throw ValidationError("dense operator limited to two-copy dimension 4096");
  Eigen::MatrixXcd m(d2, d2);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d2);
  for (Index c = 0; c < d2; ++c) {
    e(c) = 1.0;
    m.col(c) = apply_A(spec, e);
    e(c) = 0.0;
  }
  return m;
}

Eigen::VectorXcd global_copy_swap(const Eigen::VectorXcd& v,
                                  const SystemShape& shape) {
  const SystemShape doubled = shape.doubled();
  if (v.size() != doubled.total_dim())
    throw ShapeError("global_copy_swap: two-copy length mismatch");
  const unsigned all = (1u << shape.num_parties()) - 1u;
  return swap_parties(v, doubled, shape, all);
}

}  // namespace mconc
