#include "cclosure/rational_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace cclosure {

RationalExpr RationalExpr::empty(std::size_t k) {
  return {std::make_shared<const Node>(Node{Kind::EmptySet, NatVector(k), nullptr, nullptr}), k};
}

RationalExpr RationalExpr::point(NatVector v) {
  std::size_t k = v.size();
  return {std::make_shared<const Node>(Node{Kind::Point, std::move(v), nullptr, nullptr}), k};
}

RationalExpr RationalExpr::unite(const RationalExpr& l, const RationalExpr& r) {
  if (l.dim_ != r.dim_) throw std::invalid_argument("dimension mismatch in union");
  return {std::make_shared<const Node>(Node{Kind::Union, {}, l.node_, r.node_}), l.dim_};
}

RationalExpr RationalExpr::sum(const RationalExpr& l, const RationalExpr& r) {
  if (l.dim_ != r.dim_) throw std::invalid_argument("dimension mismatch in sum");
  return {std::make_shared<const Node>(Node{Kind::Sum, {}, l.node_, r.node_}), l.dim_};
}

RationalExpr RationalExpr::plus(const RationalExpr& e) {
  return {std::make_shared<const Node>(Node{Kind::Plus, {}, e.node_, nullptr}), e.dim_};
}

int RationalExpr::star_height() const {
  switch (kind()) {
    case Kind::EmptySet:
    case Kind::Point:
      return 0;
    case Kind::Union:
    case Kind::Sum:
      return std::max(left().star_height(), right().star_height());
    case Kind::Plus:
      return 1 + left().star_height();
  }
  return 0;
}

namespace {

int precedence(RationalExpr::Kind k) {
  switch (k) {
    case RationalExpr::Kind::Union:
      return 0;
    case RationalExpr::Kind::Sum:
      return 1;
    default:
      return 2;
  }
}

std::string render(const RationalExpr& e, int min_prec) {
  std::string s;
  switch (e.kind()) {
    case RationalExpr::Kind::EmptySet:
      s = "#";
      break;
    case RationalExpr::Kind::Point:
      s = to_string(e.point_value());
      break;
    case RationalExpr::Kind::Union:
      s = render(e.left(), 0) + "|" + render(e.right(), 1);
      break;
    case RationalExpr::Kind::Sum:
      s = render(e.left(), 1) + "+" + render(e.right(), 2);
      break;
    case RationalExpr::Kind::Plus:
      s = "(" + render(e.left(), 0) + ")+";
      break;
  }
  return precedence(e.kind()) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const RationalExpr& e) { return render(e, 0); }

}  // namespace cclosure
