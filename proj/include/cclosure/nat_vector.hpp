#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cclosure {

// Point of N^k: letter counts, offsets and basis elements of linear sets,
// exponents of monomials. Components are nonnegative.
class NatVector {
 public:
  using value_type = std::int64_t;

  NatVector() = default;
  explicit NatVector(std::size_t k) : c_(k, 0) {}
  NatVector(std::initializer_list<value_type> init);
  explicit NatVector(std::vector<value_type> components);

  static NatVector zero(std::size_t k) { return NatVector(k); }
  static NatVector unit(std::size_t k, std::size_t j, value_type n = 1);

  std::size_t size() const noexcept { return c_.size(); }
  value_type operator[](std::size_t j) const { return c_[j]; }
  value_type& operator[](std::size_t j) { return c_[j]; }
  const std::vector<value_type>& components() const noexcept { return c_; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }

  bool is_zero() const noexcept;
  value_type total() const noexcept;     // sum of components (total degree)
  value_type max_norm() const noexcept;  // ||v|| = max component
  // Index of the unique nonzero component if the vector is j-primary.
  std::ptrdiff_t primary_index() const noexcept;
  // Componentwise >= .
  bool dominates(const NatVector& other) const noexcept;

  NatVector& operator+=(const NatVector& o);
  friend NatVector operator+(NatVector a, const NatVector& b) { return a += b; }
  friend NatVector operator*(value_type s, NatVector v);

  friend auto operator<=>(const NatVector&, const NatVector&) = default;
  friend bool operator==(const NatVector&, const NatVector&) = default;

 private:
  std::vector<value_type> c_;
};

// "(1,0,2)"
std::string to_string(const NatVector& v);

// Every vector of N^k with max-norm <= bound, in lexicographic order.
std::vector<NatVector> box(std::size_t k, NatVector::value_type bound);
// Every vector of N^k with total degree <= degree.
std::vector<NatVector> simplex(std::size_t k, NatVector::value_type degree);

}  // namespace cclosure
