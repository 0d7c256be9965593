#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mconc/errors.hpp"

namespace mconc {

using Index = std::int64_t;

class SubsystemSubset;

// Tensor factorization H = H_1 x ... x H_N with local dimensions n_i >= 2.
// Composite basis indices are row-major with party 0 as the most significant
// digit: index = ((x_0 * n_1 + x_1) * n_2 + x_2) ...
class SystemShape {
public:
  explicit SystemShape(std::vector<int> dims);

  int num_parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_[party]; }
  const std::vector<int>& dims() const { return dims_; }
  Index total_dim() const { return total_; }

  // Stride of a party's digit in the composite index.
  Index stride(int party) const { return strides_[party]; }

  // Shape of x_i (H_i x H_i): one party per original party, dimension n_i^2.
  SystemShape doubled() const;
  // Shape of (x H_i) x (x H_i): 2N parties, dims repeated.
  SystemShape two_copies() const;
  SystemShape concat(const SystemShape& other) const;
  SystemShape restricted_to(const SubsystemSubset& keep) const;

  void digits_of(Index index, std::span<int> out) const;
  Index index_of(std::span<const int> digits) const;

  bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }

private:
  std::vector<int> dims_;
  std::vector<Index> strides_;
  Index total_ = 1;
};

// Nonempty proper subset of the parties {0 .. N-1}, kept sorted.
class SubsystemSubset {
public:
  SubsystemSubset(std::vector<int> members, int num_parties);
  static SubsystemSubset from_mask(unsigned mask, int num_parties);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int num_parties() const { return num_parties_; }
  bool contains(int party) const;
  unsigned mask() const;
  SubsystemSubset complement() const;

private:
  std::vector<int> members_;
  int num_parties_;
};

}  // namespace mconc
