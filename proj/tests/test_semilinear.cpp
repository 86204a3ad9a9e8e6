#include "doctest.h"

#include <random>

#include "cclosure/errors.hpp"
#include "cclosure/semilinear.hpp"
#include "oracles.hpp"

using namespace cclosure;

namespace {

LinearSet term(NatVector offset, std::vector<NatVector> basis = {}) { return {std::move(offset), std::move(basis)}; }

bool oracle_member(const NatVector& v, const SemilinearSet& s) {
  for (const auto& t : s.terms)
    if (oracle::in_linear(v, t.offset(), t.basis())) return true;
  return false;
}

// Membership agreement with a brute-force search on the box ||σ|| <= bound.
bool same_on_box(const SemilinearSet& a, const SemilinearSet& b, NatVector::value_type bound) {
  for (const auto& v : box(a.dimension, bound))
    if (oracle_member(v, a) != oracle_member(v, b)) return false;
  return true;
}

// Every σ in the box has at most one representation over all terms.
bool disjoint_on_box(const SemilinearSet& s, NatVector::value_type bound) {
  for (const auto& v : box(s.dimension, bound)) {
    std::size_t n = 0;
    for (const auto& t : s.terms) n += oracle::count_representations(v, t.offset(), t.basis());
    if (n > 1) return false;
  }
  return true;
}

NatVector random_vector(std::mt19937& rng, std::size_t k, int max, bool nonzero) {
  while (true) {
    NatVector v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<NatVector::value_type>(rng() % (max + 1));
    if (!nonzero || !v.is_zero()) return v;
  }
}

}  // namespace

TEST_CASE("text form round trip") {
  for (const char* text : {"(0,1)+((0,2)|(2,0))+", "#", "(1,1) | (0,0)+((1,0))+", "()"}) {
    auto s = parse_semilinear(text);
    CHECK(to_string(s) == text);
  }
  CHECK(parse_semilinear("#", 3).dimension == 3);
  CHECK_THROWS_AS(parse_semilinear("(1,2"), SyntaxError);
  CHECK_THROWS_AS(parse_semilinear("(1)+((1)"), SyntaxError);
}

TEST_CASE("to_semilinear") {
  auto p = [](NatVector v) { return RationalExpr::point(std::move(v)); };
  SUBCASE("star of a linear expression") {
    auto e = RationalExpr::plus(RationalExpr::sum(RationalExpr::plus(p({0, 1})), p({1, 0})));
    auto s = to_semilinear(e);
    CHECK(same_on_box(s, parse_semilinear("(0,0)+((1,0))+ | (1,0)+((0,1)|(1,0))+"), 8));
    for (const auto& t : s.terms) CHECK(is_free(t.basis()));
  }
  SUBCASE("star of the empty set") {
    auto s = to_semilinear(RationalExpr::plus(RationalExpr::empty(2)));
    CHECK(to_string(s) == "(0,0)");
  }
  SUBCASE("already linear") {
    auto s = to_semilinear(RationalExpr::sum(p({1, 1}), RationalExpr::plus(p({1, 1}))));
    CHECK(to_string(s) == "(1,1)+((1,1))+");
  }
  SUBCASE("empty set") { CHECK(to_semilinear(RationalExpr::empty(2)).terms.empty()); }
}

TEST_CASE("member") {
  auto u = parse_semilinear("(1,1)+((1,1))+");
  CHECK(member({3, 3}, u));
  CHECK_FALSE(member({0, 0}, u));
  auto v = parse_semilinear("(0,1)+((2,0)|(0,2))+");
  CHECK(member({4, 3}, v));
  CHECK_FALSE(member({4, 4}, v));
  CHECK_FALSE(member({1, 1}, v));
  CHECK_FALSE(member({0, 0}, SemilinearSet(2)));
}

TEST_CASE("member agrees with exhaustive search") {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::size_t k = 1 + rng() % 3;
    std::vector<NatVector> basis;
    for (std::size_t b = 0; b < 1 + rng() % 3; ++b) basis.push_back(random_vector(rng, k, 3, true));
    LinearSet t = term(random_vector(rng, k, 2, false), basis);
    for (const auto& v : box(k, 5)) CHECK(t.contains(v) == oracle::in_linear(v, t.offset(), t.basis()));
  }
}

TEST_CASE("is_free") {
  CHECK_FALSE(is_free({{1, 0}, {3, 1}, {1, 1}}));
  CHECK(is_free({{1, 0}, {1, 1}}));
  CHECK(is_free({}));
  CHECK_FALSE(is_free({{2}, {3}}));
}

TEST_CASE("is_free matches collision search on small bases") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    std::size_t k = 1 + rng() % 3;
    std::vector<NatVector> basis;
    for (std::size_t b = 0; b < 1 + rng() % 3; ++b) basis.push_back(random_vector(rng, k, 3, true));
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    INFO(to_string(term(NatVector(k), basis)));
    // A dependency among at most k vectors with entries <= 3 has
    // coefficients bounded by the 2x2 minors.
    if (basis.size() > k)
      CHECK_FALSE(is_free(basis));
    else
      CHECK(is_free(basis) == !oracle::has_collision(basis, 9));
  }
}

TEST_CASE("make_free") {
  SUBCASE("redundant generator") {
    LinearSet t = term({0, 0}, {{1, 0}, {3, 1}, {1, 1}});
    auto s = make_free(t);
    for (const auto& r : s.terms) CHECK(is_free(r.basis()));
    CHECK(same_on_box(s, SemilinearSet(2, {t}), 8));
  }
  SUBCASE("free input is unchanged") {
    LinearSet t = term({1, 2}, {{1, 0}, {1, 1}});
    auto s = make_free(t);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.front() == t);
  }
  SUBCASE("numerical semigroup <2,3>") {
    LinearSet t = term({0}, {{2}, {3}});
    auto s = make_free(t);
    for (const auto& r : s.terms) CHECK(is_free(r.basis()));
    for (NatVector::value_type n = 0; n <= 30; ++n) CHECK(member({n}, s) == (n != 1));
  }
  SUBCASE("random bases") {
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
      std::size_t k = 1 + rng() % 3;
      std::vector<NatVector> basis;
      for (std::size_t b = 0; b < 2 + rng() % 3; ++b) basis.push_back(random_vector(rng, k, 3, true));
      LinearSet t = term(random_vector(rng, k, 2, false), basis);
      auto s = make_free(t);
      INFO(to_string(t));
      for (const auto& r : s.terms) CHECK(is_free(r.basis()));
      CHECK(same_on_box(s, SemilinearSet(k, {t}), 7));
    }
  }
}

TEST_CASE("intersect_linear") {
  auto a = term({0, 0}, {{1, 0}});
  auto b = term({1, 0}, {{0, 1}, {1, 0}});
  CHECK(to_string(intersect_linear(a, b)) == "(1,0)+((1,0))+");
  CHECK(intersect_linear(term({1, 0}), term({0, 1})).terms.empty());
  auto c = intersect_linear(term({0, 0}, {{2, 0}}), term({0, 0}, {{3, 0}}));
  CHECK(same_on_box(c, parse_semilinear("(0,0)+((6,0))+"), 24));
  CHECK(to_string(c) == "(0,0)+((6,0))+");

  std::mt19937 rng(29);
  for (int i = 0; i < 150; ++i) {
    std::size_t k = 1 + rng() % 3;
    auto make = [&] {
      std::vector<NatVector> basis;
      for (std::size_t n = 0; n < rng() % 3; ++n) basis.push_back(random_vector(rng, k, 3, true));
      return term(random_vector(rng, k, 3, false), basis);
    };
    LinearSet t1 = make(), t2 = make();
    auto x = intersect_linear(t1, t2);
    INFO(to_string(t1) << " ∩ " << to_string(t2));
    bool nonempty = false;
    for (const auto& v : box(k, 8)) {
      bool both = oracle::in_linear(v, t1.offset(), t1.basis()) && oracle::in_linear(v, t2.offset(), t2.basis());
      CHECK(oracle_member(v, x) == both);
      nonempty = nonempty || both;
    }
    if (nonempty) CHECK(intersects(t1, t2));
    if (!intersects(t1, t2)) CHECK(x.terms.empty());
  }
}

TEST_CASE("solver bound") {
  SolverLimits tight;
  tight.max_frontier = 2;
  CHECK_THROWS_AS(intersect_linear(term({0, 0}, {{5, 1}, {1, 7}}), term({0, 0}, {{3, 4}, {2, 9}}), tight),
                  ResourceLimit);
}

TEST_CASE("disambiguate") {
  SUBCASE("worked example") {
    auto s = parse_semilinear("(0,0)+((1,0))+ | (1,0)+((0,1)|(1,0))+");
    auto d = disambiguate(s);
    CHECK(to_string(d) == "(0,0)+((1,0))+ | (1,1)+((0,1)|(1,0))+");
    CHECK(d.unambiguous == Check::Yes);
  }
  SUBCASE("single term unchanged") {
    auto s = parse_semilinear("(0,1)+((0,2)|(2,0))+");
    CHECK(to_string(disambiguate(s)) == to_string(s));
  }
  SUBCASE("overlapping rays in N^1") {
    auto d = disambiguate(parse_semilinear("(0)+((1))+ | (1)+((1))+"));
    CHECK(unambiguity_certificate(d, 20));
    for (NatVector::value_type n = 0; n <= 20; ++n) CHECK(member({n}, d));
  }
  SUBCASE("identical terms") {
    auto d = disambiguate(parse_semilinear("(1,1)+((1,1))+ | (1,1)+((1,1))+"));
    CHECK(to_string(d) == "(1,1)+((1,1))+");
  }
  SUBCASE("needs free bases") {
    CHECK_THROWS_AS(disambiguate(parse_semilinear("(0)+((2)|(3))+")), InvariantError);
  }
  SUBCASE("random unions") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
      std::size_t k = 1 + rng() % 3;
      SemilinearSet s(k);
      for (std::size_t n = 0; n < 2 + rng() % 3; ++n) {
        std::vector<NatVector> basis;
        for (std::size_t b = 0; b < rng() % (k + 1); ++b) basis.push_back(random_vector(rng, k, 2, true));
        while (!is_free(basis)) basis.pop_back();
        s.terms.push_back(term(random_vector(rng, k, 2, false), basis));
      }
      INFO(to_string(s));
      auto d = disambiguate(s);
      for (const auto& t : d.terms) CHECK(is_free(t.basis()));
      CHECK(same_on_box(d, s, 8));
      CHECK(disjoint_on_box(d, 8));
    }
  }
}

TEST_CASE("make_consistent") {
  SUBCASE("two periods on one axis") {
    auto s = parse_semilinear("(0,0)+((1,0))+ | (0,0)+((2,0))+");
    auto c = make_consistent(s);
    CHECK(same_on_box(c, s, 10));
    CHECK(is_consistent(c));
    for (const auto& t : c.terms)
      for (const auto& b : t.basis()) CHECK(b == NatVector{2, 0});
    CHECK(to_string(c) == "(0,0)+((2,0))+ | (1,0)+((2,0))+ | (0,0)+((2,0))+");
  }
  SUBCASE("already consistent") {
    auto s = parse_semilinear("(0,1)+((0,2)|(2,0))+");
    CHECK(to_string(make_consistent(s)) == to_string(s));
  }
  SUBCASE("periods 2 and 3") {
    auto s = parse_semilinear("(0,0)+((0,1)|(1,0))+ | (1,1)+((0,3)|(2,0))+");
    auto c = make_consistent(s);
    CHECK(same_on_box(c, s, 12));
    for (const auto& t : c.terms)
      for (const auto& b : t.basis()) CHECK((b == NatVector{2, 0} || b == NatVector{0, 3}));
    CHECK(c.terms.size() == 7);
  }
}

TEST_CASE("regions describe linear sets exactly") {
  std::mt19937 rng(37);
  for (int i = 0; i < 100; ++i) {
    std::size_t k = 1 + rng() % 3;
    std::vector<NatVector> basis;
    for (std::size_t b = 0; b < 1 + rng() % k; ++b) basis.push_back(random_vector(rng, k, 3, true));
    if (!is_free(basis)) continue;
    LinearSet t = term(random_vector(rng, k, 3, false), basis);
    Region r = Region::of(t);
    INFO(to_string(t));
    for (const auto& v : box(k, 9)) CHECK(r.contains(v) == t.contains(v));

    // Decomposing the region gives back a disjoint description.
    SemilinearSet parts(k, decompose(r));
    CHECK(same_on_box(parts, SemilinearSet(k, {t}), 9));
    CHECK(disjoint_on_box(parts, 9));
  }
}

TEST_CASE("subtract and decompose") {
  Region all(2);
  Region diag = Region::of(term({0, 0}, {{1, 1}}));
  SemilinearSet rest(2);
  for (const auto& piece : subtract(all, diag))
    for (auto& t : decompose(piece)) rest.terms.push_back(std::move(t));
  for (const auto& v : box(2, 10)) CHECK(oracle_member(v, rest) == (v[0] != v[1]));
  CHECK(disjoint_on_box(rest, 10));

  Region congruent(1);
  congruent.add(Constraint::mod({1}, 1, 3, {0}));  // n ≡ 2 (mod 3)
  auto parts = decompose(congruent);
  REQUIRE(parts.size() == 1);
  CHECK(to_string(parts.front()) == "(2)+((3))+");
}

TEST_CASE("has_point") {
  Region strip(2);  // x0 >= 4 and x0 + x1 <= 3
  strip.add(Constraint::ge({1, 0}, -4));
  strip.add(Constraint::ge({-1, -1}, 3));
  CHECK_FALSE(has_point(strip));

  Region odd_diagonal(2);  // x0 = x1 with x0 + x1 odd: feasible over Q only
  odd_diagonal.add(Constraint::eq({1, -1}, 0));
  odd_diagonal.add(Constraint::mod({1, 1}, 0, 2, {1}));
  CHECK_FALSE(has_point(odd_diagonal));

  Region corner(2);  // x0 >= 5, x1 >= 7, x0 + x1 <= 12
  corner.add(Constraint::ge({1, 0}, -5));
  corner.add(Constraint::ge({0, 1}, -7));
  corner.add(Constraint::ge({-1, -1}, 12));
  CHECK(has_point(corner));

  std::mt19937 rng(41);
  for (int i = 0; i < 150; ++i) {
    std::size_t k = 1 + rng() % 3;
    auto free_term = [&] {
      std::vector<NatVector> basis;
      for (std::size_t b = 0; b < 1 + rng() % k; ++b) basis.push_back(random_vector(rng, k, 3, true));
      while (!is_free(basis)) basis.pop_back();
      return term(random_vector(rng, k, 4, false), basis);
    };
    LinearSet a = free_term(), b = free_term();
    Region both = Region::of(a), other = Region::of(b);
    for (const auto& c : other.constraints()) both.add(c);
    INFO(to_string(a) << " and " << to_string(b));
    CHECK(has_point(both) == !intersect_linear(a, b).terms.empty());
  }
}

TEST_CASE("disambiguate trusts a certified flag") {
  auto d = disambiguate(parse_semilinear("(0,0)+((1,0))+ | (1,0)+((0,1)|(1,0))+"));
  CHECK(to_string(disambiguate(d)) == to_string(d));

  auto wrong = parse_semilinear("(0)+((1))+ | (1)+((1))+");
  wrong.unambiguous = Check::Yes;
  CHECK_THROWS_AS(disambiguate(wrong), InvariantError);
}
