#include "mconc/system_shape.hpp"

#include <algorithm>
#include <string>

namespace mconc {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ShapeError("SystemShape: need at least one party");
  for (int d : dims_) {
    if (d < 2)
      throw ShapeError("SystemShape: local dimension " + std::to_string(d) +
                       " < 2");
  }
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * dims_[i + 1];
  total_ = strides_[0] * dims_[0];
}

SystemShape SystemShape::doubled() const {
  std::vector<int> d(dims_.size());
  for (size_t i = 0; i < dims_.size(); ++i) d[i] = dims_[i] * dims_[i];
  return SystemShape(std::move(d));
}

SystemShape SystemShape::two_copies() const { return concat(*this); }

SystemShape SystemShape::concat(const SystemShape& other) const {
  std::vector<int> d = dims_;
  d.insert(d.end(), other.dims_.begin(), other.dims_.end());
  return SystemShape(std::move(d));
}

SystemShape SystemShape::restricted_to(const SubsystemSubset& keep) const {
  if (keep.num_parties() != num_parties())
    throw ShapeError("subset refers to a different number of parties");
  std::vector<int> d;
  d.reserve(keep.members().size());
  for (int i : keep.members()) d.push_back(dims_[i]);
  return SystemShape(std::move(d));
}

void SystemShape::digits_of(Index index, std::span<int> out) const {
  for (int i = num_parties() - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % dims_[i]);
    index /= dims_[i];
  }
}

Index SystemShape::index_of(std::span<const int> digits) const {
  Index idx = 0;
  for (int i = 0; i < num_parties(); ++i) idx = idx * dims_[i] + digits[i];
  return idx;
}

SubsystemSubset::SubsystemSubset(std::vector<int> members, int num_parties)
    : members_(std::move(members)), num_parties_(num_parties) {
  std::sort(members_.begin(), members_.end());
  if (members_.empty()) throw ShapeError("subsystem subset must be nonempty");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw ShapeError("subsystem subset has duplicate indices");
  if (members_.front() < 0 || members_.back() >= num_parties_)
    throw ShapeError("subsystem index out of range");
  if (static_cast<int>(members_.size()) >= num_parties_)
    throw ShapeError("subsystem subset must be a proper subset");
}

SubsystemSubset SubsystemSubset::from_mask(unsigned mask, int num_parties) {
  std::vector<int> m;
  for (int i = 0; i < num_parties; ++i)
    if (mask >> i & 1u) m.push_back(i);
  return SubsystemSubset(std::move(m), num_parties);
}

bool SubsystemSubset::contains(int party) const {
  return std::binary_search(members_.begin(), members_.end(), party);
}

unsigned SubsystemSubset::mask() const {
  unsigned m = 0;
  for (int i : members_) m |= 1u << i;
  return m;
}

SubsystemSubset SubsystemSubset::complement() const {
  std::vector<int> m;
  for (int i = 0; i < num_parties_; ++i)
    if (!contains(i)) m.push_back(i);
  return SubsystemSubset(std::move(m), num_parties_);
}

}  // namespace mconc
