#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cclosure/nat_vector.hpp"

namespace cclosure {

// γ + B^⊕. The basis is kept sorted, without duplicates and without the
// zero vector.
class LinearSet {
 public:
  LinearSet() = default;
  LinearSet(NatVector offset, std::vector<NatVector> basis);

  const NatVector& offset() const { return offset_; }
  const std::vector<NatVector>& basis() const { return basis_; }
  std::size_t dimension() const { return offset_.size(); }

  bool contains(const NatVector& sigma) const;
  // Number of coefficient vectors n with γ + B n = σ.
  std::size_t representations(const NatVector& sigma) const;

  friend auto operator<=>(const LinearSet&, const LinearSet&) = default;
  friend bool operator==(const LinearSet&, const LinearSet&) = default;

 private:
  NatVector offset_;
  std::vector<NatVector> basis_;
};

// Linear independence over Q, which for nonzero vectors of N^k is the same
// as every element of B^⊕ having a single representation.
bool is_free(const std::vector<NatVector>& basis);

// "(0,1)+((2,0)|(0,2))+" ; a term with empty basis prints as its offset.
std::string to_string(const LinearSet& t);

}  // namespace cclosure
