#include "doctest.h"

#include <algorithm>

#include "cclosure/closure.hpp"
#include "cclosure/pipeline.hpp"
#include "cclosure/errors.hpp"
#include "json.hpp"
#include "oracles.hpp"

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

ResimpleSystem system_v() { return build_system(poly(2, {{{0, 1}, 1}}), den({{2, 0}, {0, 2}})); }
ResimpleSystem system_s() {
  return build_system(poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}), den({{1, 0}, {0, 1}}));
}

Dfa with_initial(const Dfa& d, Dfa::State s) { return Dfa(d.alphabet(), d.size(), d.table(), s, d.finals()); }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("counters") {
  auto even = counter('a', 0, 2, [](Int s) { return s == 0; });
  CHECK(even.size() == 2);
  CHECK(accepts(even, ""));
  CHECK(accepts(even, "aaaa"));
  CHECK_FALSE(accepts(even, "aaa"));

  auto three = counter('b', 0, 3, [](Int s) { return s == 0; });
  CHECK(three.size() == 3);
  CHECK(accepts(three, "bbb"));
  CHECK_FALSE(accepts(three, "bb"));

  auto exactly_two = counter('a', 3, 1, [](Int s) { return s == 2; });
  CHECK(exactly_two.size() == 4);
  CHECK(accepts(exactly_two, "aa"));
  CHECK_FALSE(accepts(exactly_two, "aaa"));
  CHECK_FALSE(accepts(exactly_two, "aaaaaa"));
  CHECK(is_complete_deterministic(exactly_two));
}

TEST_CASE("shuffle product") {
  auto x = counter('a', 0, 2, [](Int s) { return s == 0; });
  auto y = counter('b', 0, 3, [](Int s) { return s == 0; });
  auto p = shuffle_product({x, y});
  CHECK(p.size() == 6);
  CHECK(p.alphabet() == "ab");
  CHECK(is_complete_deterministic(p));
  for (const auto& w : all_words("ab", 7)) {
    auto c = oracle::counts(w, "ab");
    CHECK(accepts(p, w) == (c[0] % 2 == 0 && c[1] % 3 == 0));
  }
  auto single = shuffle_product({x});
  CHECK(single.size() == x.size());
  CHECK_FALSE(find_difference(single, x, 8));
  CHECK_THROWS_AS(shuffle_product({x, x}), AlphabetError);
}

TEST_CASE("shuffle of words") {
  CHECK(shuffle_words("ab", "ba") == std::set<std::string>{"abba", "baba", "baab", "abab"});
  CHECK(shuffle_words("", "ab") == std::set<std::string>{"ab"});
  CHECK(shuffle_words("aa", "a") == std::set<std::string>{"aaa"});
}

TEST_CASE("boolean operations") {
  // Even number of a's; odd a's with at least one b.
  Dfa even_a = shuffle_product(
      {counter('a', 0, 2, [](Int s) { return s == 0; }), counter('b', 0, 1, [](Int) { return true; })});
  Dfa odd_a_some_b = shuffle_product(
      {counter('a', 1, 2, [](Int s) { return s == 1; }), counter('b', 1, 1, [](Int s) { return s == 1; })});
  Dfa u = unite(even_a, odd_a_some_b);
  Dfa via_complements = complement(intersect(complement(even_a), complement(odd_a_some_b)));
  CHECK_FALSE(find_difference(u, via_complements, 10));
  for (const auto& w : all_words("ab", 8)) {
    auto c = oracle::counts(w, "ab");
    bool expected = c[0] % 2 == 0 || c[1] >= 1;
    CHECK(accepts(u, w) == expected);
    CHECK(accepts(intersect(even_a, odd_a_some_b), w) == false);
  }
  CHECK_FALSE(find_difference(complement(complement(u)), u, 10));
  CHECK_FALSE(find_difference(unite(u, u), u, 10));
  CHECK_THROWS_AS(intersect(even_a, counter('a', 0, 1, [](Int) { return true; })), AlphabetError);
}

TEST_CASE("closure automata from systems") {
  SUBCASE("parity example") {
    auto d = build_closure_dfa(system_v(), "ab");
    CHECK(d.size() == 4);
    CHECK(minimize(d).size() == 4);
    CHECK(accepts(d, "b"));
    CHECK_FALSE(accepts(d, "ab"));
    CHECK_FALSE(accepts(d, ""));
    CHECK(accepts(d, "aabbb"));
    CHECK_THROWS_AS(accepts(d, "c"), AlphabetError);
  }
  SUBCASE("all nonempty words") {
    auto d = build_closure_dfa(system_s(), "ab");
    CHECK(d.size() == 4);
    auto m = minimize(d);
    CHECK(m.size() == 2);
    for (const auto& w : all_words("ab", 6)) CHECK(accepts(m, w) == !w.empty());
  }
  SUBCASE("empty system") {
    auto d = build_closure_dfa(build_system(Polynomial(2), den({})), "ab");
    CHECK(d.size() == 1);
    CHECK_FALSE(d.is_final(0));
  }
  SUBCASE("closure correctness on words") {
    for (const auto& sys : {system_v(), system_s(), build_system(poly(2, {{{2, 1}, 1}, {{0, 0}, 1}}), den({}))}) {
      auto d = build_closure_dfa(sys, "ab");
      CHECK(is_complete_deterministic(d));
      for (const auto& w : all_words("ab", 8)) CHECK(accepts(d, w) == member_system(oracle::counts(w, "ab"), sys));
    }
  }
}

TEST_CASE("term automata have the product state count") {
  auto sys = build_system(poly(2, {{{0, 0}, 1}}), den({{2, 0}, {0, 3}}));
  CHECK(build_term_dfa(sys, 0, "ab").size() == 6);

  auto point = build_system(poly(2, {{{2, 3}, 1}}), den({}));
  CHECK(build_term_dfa(point, 0, "ab").size() == (2 + 2) * (3 + 2));

  auto mixed = build_system(poly(2, {{{1, 2}, 1}}), den({{3, 0}}));
  CHECK(build_term_dfa(mixed, 0, "ab").size() == (1 + 3) * (2 + 2));
}

TEST_CASE("intersections of term automata stay small") {
  auto sys = *run_pipeline("(aa)*(bbb)*|ab(aa)*|bb(aaaa)*b").system;
  const auto m = sys.terms().size();
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g) {
      auto a = build_term_dfa(sys, h, "ab"), b = build_term_dfa(sys, g, "ab");
      std::size_t bound = 1;
      for (std::size_t j = 0; j < 2; ++j) {
        Int p = sys.periods()[j];
        bound *= static_cast<std::size_t>(std::max(sys.terms()[h].offset[j], sys.terms()[g].offset[j]) + p);
      }
      CHECK(intersect(a, b).size() <= bound);
    }
}

TEST_CASE("grid and boolean constructions agree") {
  for (const auto& sys : {system_v(), system_s(),
                          *run_pipeline("(aa)*(bbb)*|ab(aa)*|bb(aaaa)*b").system}) {
    auto grid = build_closure_dfa(sys, "ab");
    auto boolean = build_closure_dfa_boolean(sys, "ab");
    CHECK(is_complete_deterministic(boolean));
    CHECK_FALSE(find_difference(grid, boolean, 10));
  }
}

TEST_CASE("minimize") {
  Dfa all_final("ab", 3, {1, 2, 2, 0, 0, 1}, 0, {true, true, true});
  CHECK(minimize(all_final).size() == 1);

  auto parity = build_closure_dfa(system_v(), "ab");
  auto m = minimize(parity);
  CHECK(m.size() == 4);
  CHECK_FALSE(find_difference(m, parity, m.size()));
  for (Dfa::State s = 0; s < m.size(); ++s)
    for (Dfa::State t = s + 1; t < m.size(); ++t) CHECK(find_difference(with_initial(m, s), with_initial(m, t), m.size()));

  // Unreachable states disappear.
  Dfa with_junk("a", 3, {0, 2, 2}, 0, {true, false, true});
  CHECK(minimize(with_junk).size() == 1);
}

TEST_CASE("exports") {
  auto d = minimize(build_closure_dfa(system_s(), "ab"));
  const std::string dot = export_dot(d);
  CHECK(dot ==
        "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n  q0 [shape=circle];\n"
        "  q1 [shape=doublecircle];\n  start -> q0;\n  q0 -> q1 [label=\"a,b\"];\n"
        "  q1 -> q1 [label=\"a,b\"];\n}\n");

  auto parity = build_closure_dfa(system_v(), "ab");
  auto pdot = export_dot(parity);
  CHECK(count(pdot, "shape=circle") + count(pdot, "shape=doublecircle") == parity.size());
  std::size_t letters = 0;
  for (auto p = pdot.find("label=\""); p != std::string::npos; p = pdot.find("label=\"", p + 1))
    letters += 1 + static_cast<std::size_t>(std::count(pdot.begin() + static_cast<std::ptrdiff_t>(p),
                                                       pdot.begin() + static_cast<std::ptrdiff_t>(pdot.find('"', p + 7)),
                                                       ','));
  CHECK(letters == parity.size() * 2);

  auto j = nlohmann::json::parse(export_json(parity));
  CHECK(j["alphabet"] == nlohmann::json::array({"a", "b"}));
  CHECK(j["states"] == 4);
  CHECK(j["initial"] == 0);
  CHECK(j["transitions"].size() == 8);
  CHECK(export_json(parity) == export_json(renumber(parity)));
}

TEST_CASE("malformed automata are rejected") {
  CHECK_THROWS_AS(Dfa("a", 2, {0}, 0, {true, false}), InvariantError);
  CHECK_THROWS_AS(Dfa("a", 1, {3}, 0, {true}), InvariantError);
}
