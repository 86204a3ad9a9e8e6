#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "cclosure/nat_vector.hpp"

namespace cclosure {

// Rational expression over N^k: points, union, sum (Minkowski) and the
// monoid closure ⊕ (written `Plus`).
class RationalExpr {
 public:
  enum class Kind { EmptySet, Point, Union, Sum, Plus };

  static RationalExpr empty(std::size_t k);
  static RationalExpr point(NatVector v);
  static RationalExpr unite(const RationalExpr& l, const RationalExpr& r);
  static RationalExpr sum(const RationalExpr& l, const RationalExpr& r);
  static RationalExpr plus(const RationalExpr& e);

  Kind kind() const { return node_->kind; }
  std::size_t dimension() const { return dim_; }
  const NatVector& point_value() const { return node_->point; }
  RationalExpr left() const { return {node_->left, dim_}; }
  RationalExpr right() const { return {node_->right, dim_}; }
  // Maximum nesting depth of ⊕.
  int star_height() const;

 private:
  struct Node {
    Kind kind;
    NatVector point;
    std::shared_ptr<const Node> left, right;
  };
  RationalExpr(std::shared_ptr<const Node> n, std::size_t k) : node_(std::move(n)), dim_(k) {}

  std::shared_ptr<const Node> node_;
  std::size_t dim_ = 0;
};

// Same notation as the semilinear text form: `|` union, `+` sum, postfix
// `+` for ⊕, `#` for the empty set.
std::string to_string(const RationalExpr& e);

}  // namespace cclosure
