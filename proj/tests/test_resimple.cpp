#include "doctest.h"

#include <set>

#include "cclosure/errors.hpp"
#include "cclosure/resimple.hpp"

using namespace cclosure;

namespace {

Polynomial poly(std::size_t k, std::initializer_list<std::pair<NatVector, int>> terms) {
  Polynomial p(k);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

FactoredDenominator den(std::initializer_list<NatVector> factors) {
  FactoredDenominator d;
  for (const auto& b : factors) d.add(b);
  return d;
}

std::set<std::string> names(const std::vector<ClassPattern>& classes) {
  std::set<std::string> out;
  for (const auto& h : classes) out.insert(to_string(h));
  return out;
}

ResimpleSystem example_s() {
  return build_system(poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}), den({{1, 0}, {0, 1}}));
}

}  // namespace

TEST_CASE("system for (x + y - xy)/((1 - x)(1 - y))") {
  auto sys = example_s();
  REQUIRE(sys.terms().size() == 3);
  CHECK(sys.terms()[0].mu == 1);
  CHECK(sys.terms()[0].offset == NatVector{1, 0});
  CHECK(sys.terms()[1].mu == 1);
  CHECK(sys.terms()[1].offset == NatVector{0, 1});
  CHECK(sys.terms()[2].mu == -1);
  CHECK(sys.terms()[2].offset == NatVector{1, 1});
  CHECK(sys.periods() == std::vector<Int>{1, 1});
  CHECK(names(sys.good_classes()) == std::set<std::string>{"{1,2,3}", "{1}", "{2}"});
  CHECK(names(sys.realized_classes()) == std::set<std::string>{"{1,2,3}", "{1}", "{2}", "{}"});

  CHECK_FALSE(class_nonempty(sys, make_pattern(3, {2})));
  CHECK(class_nonempty(sys, make_pattern(3, {})));
  CHECK(sys.pattern_of({0, 0}).none());

  CHECK_FALSE(member_system({0, 0}, sys));
  CHECK(member_system({2, 1}, sys));
  for (const auto& v : box(2, 6)) CHECK(member_system(v, sys) == !v.is_zero());
}

TEST_CASE("system for y/((1 - x^2)(1 - y^2))") {
  auto sys = build_system(poly(2, {{{0, 1}, 1}}), den({{2, 0}, {0, 2}}));
  REQUIRE(sys.terms().size() == 1);
  CHECK(sys.terms()[0].offset == NatVector{0, 1});
  CHECK(sys.periods() == std::vector<Int>{2, 2});
  CHECK(names(sys.good_classes()) == std::set<std::string>{"{1}"});
  CHECK(member_system({4, 3}, sys));
  CHECK_FALSE(member_system({1, 1}, sys));
  CHECK(class_nonempty(sys, make_pattern(1, {0})));

  auto axes = sys.axes();
  CHECK(axes[0].size() == 2);
  CHECK(axes[1].size() == 2);
}

TEST_CASE("finite system") {
  auto sys = build_system(poly(2, {{{2, 3}, 1}}), den({}));
  CHECK(names(sys.good_classes()) == std::set<std::string>{"{1}"});
  CHECK(member_system({2, 3}, sys));
  CHECK_FALSE(member_system({0, 0}, sys));
  CHECK_FALSE(member_system({2, 4}, sys));
  CHECK(sys.axes()[0].size() == 4);  // 0,1,2 and a sink
  CHECK(sys.axes()[1].size() == 5);
}

TEST_CASE("empty system") {
  auto sys = build_system(Polynomial(2), den({}));
  CHECK(sys.terms().empty());
  CHECK(sys.good_classes().empty());
  CHECK_FALSE(member_system({0, 0}, sys));
}

TEST_CASE("broken inputs are rejected") {
  CHECK_THROWS_AS(build_system(poly(1, {{{1}, 2}}), den({})), InvariantError);
  CHECK_THROWS_AS(build_system(poly(2, {{{1, 1}, 1}}), den({{1, 1}})), InvariantError);
  CHECK_THROWS_AS(build_system(poly(1, {{{0}, 2}}), den({{1}})), InvariantError);
  CHECK_THROWS_AS(build_system(poly(1, {{{0}, 1}}), den({{1}, {2}})), InvariantError);
}

TEST_CASE("indicator agreement and class partition") {
  struct Case {
    Polynomial p;
    FactoredDenominator q;
  };
  std::vector<Case> cases{
      {poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}), den({{1, 0}, {0, 1}})},
      {poly(2, {{{0, 1}, 1}}), den({{2, 0}, {0, 2}})},
      // {0,1,2} + 3N minus the point 1, in one coordinate
      {poly(1, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{1}, -1}, {{4}, 1}}), den({{3}})},
      {poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 2}, 1}}), den({{2, 0}})},
  };
  for (const auto& c : cases) {
    auto sys = build_system(c.p, c.q);
    auto table = expand_truncated(RationalFraction{c.p, c.q}, 10);
    for (const auto& v : simplex(c.p.dimension(), 10)) {
      auto it = table.find(v);
      BigInt coeff = it == table.end() ? BigInt(0) : it->second;
      CHECK(coeff == (member_system(v, sys) ? 1 : 0));
      // σ lies in a good class exactly when it is a member.
      auto h = sys.pattern_of(v);
      bool good = std::find(sys.good_classes().begin(), sys.good_classes().end(), h) != sys.good_classes().end();
      CHECK(good == member_system(v, sys));
      CHECK(class_nonempty(sys, h));
    }
  }
}

TEST_CASE("text rendering") {
  CHECK(to_string(example_s()) ==
        "periods: x=1 y=1\nS1: +1 (1,0)\nS2: +1 (0,1)\nS3: -1 (1,1)\ngood classes: {1} {1,2,3} {2}\n");
}
