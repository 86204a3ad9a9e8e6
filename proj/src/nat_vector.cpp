#include "cclosure/nat_vector.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cclosure/int_math.hpp"

namespace cclosure {

NatVector::NatVector(std::initializer_list<value_type> init) : c_(init) {
  for (auto x : c_)
    if (x < 0) throw std::invalid_argument("NatVector component must be nonnegative");
}

NatVector::NatVector(std::vector<value_type> components) : c_(std::move(components)) {
  for (auto x : c_)
    if (x < 0) throw std::invalid_argument("NatVector component must be nonnegative");
}

NatVector NatVector::unit(std::size_t k, std::size_t j, value_type n) {
  NatVector v(k);
  v.c_[j] = n;
  return v;
}

bool NatVector::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](value_type x) { return x == 0; });
}

NatVector::value_type NatVector::total() const noexcept {
  return std::accumulate(c_.begin(), c_.end(), value_type{0});
}

NatVector::value_type NatVector::max_norm() const noexcept {
  return c_.empty() ? 0 : *std::max_element(c_.begin(), c_.end());
}

std::ptrdiff_t NatVector::primary_index() const noexcept {
  std::ptrdiff_t idx = -1;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (idx >= 0) return -1;
    idx = static_cast<std::ptrdiff_t>(j);
  }
  return idx;
}

bool NatVector::dominates(const NatVector& other) const noexcept {
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (c_[j] < other.c_[j]) return false;
  return true;
}

NatVector& NatVector::operator+=(const NatVector& o) {
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked_add(c_[j], o.c_[j]);
  return *this;
}

NatVector operator*(NatVector::value_type s, NatVector v) {
  for (auto& x : v.c_) x = checked_mul(s, x);
  return v;
}

std::string to_string(const NatVector& v) {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(v[j]);
  }
  return s + ")";
}

std::vector<NatVector> box(std::size_t k, NatVector::value_type bound) {
  std::vector<NatVector> out;
  NatVector cur(k);
  while (true) {
    out.push_back(cur);
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (cur[j] < bound) {
        ++cur[j];
        for (std::size_t t = j + 1; t < k; ++t) cur[t] = 0;
        break;
      }
      if (j == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<NatVector> simplex(std::size_t k, NatVector::value_type degree) {
  std::vector<NatVector> out;
  for (auto& v : box(k, degree))
    if (v.total() <= degree) out.push_back(std::move(v));
  return out;
}

}  // namespace cclosure
