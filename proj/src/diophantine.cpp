#include "cclosure/diophantine.hpp"

#include <set>
#include <string>

#include "cclosure/errors.hpp"

namespace cclosure {

namespace {

struct Candidate {
  IntVector y;
  IntVector ay;  // A y
  bool operator<(const Candidate& o) const { return y < o.y; }
};

bool dominates(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool is_zero(const IntVector& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::vector<IntVector> minimal_solutions(const std::vector<IntVector>& columns,
                                         const std::vector<std::size_t>& unit_bounded,
                                         const SolverLimits& limits, std::ptrdiff_t stop_when) {
  const std::size_t n = columns.size();
  std::vector<IntVector> solutions;
  if (n == 0) return solutions;
  const std::size_t rows = columns.front().size();
  std::vector<bool> bounded(n, false);
  for (auto i : unit_bounded) bounded.at(i) = true;

  auto add_column = [&](IntVector ay, std::size_t i) {
    for (std::size_t r = 0; r < rows; ++r) ay[r] = checked_add(ay[r], columns[i][r]);
    return ay;
  };
  auto pruned = [&](const IntVector& y) {
    for (const auto& s : solutions)
      if (dominates(y, s)) return true;
    return false;
  };

  std::set<Candidate> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector y(n, 0);
    y[i] = 1;
    frontier.insert({std::move(y), columns[i]});
  }

  for (std::size_t round = 0; !frontier.empty(); ++round) {
    if (round > limits.max_rounds) throw ResourceLimit("solver bound exceeded: too many rounds");
    std::set<Candidate> next;
    // Solutions of this round first, so that same-degree candidates are
    // checked against all of them.
    std::vector<const Candidate*> open;
    for (const auto& c : frontier) {
      if (is_zero(c.ay)) {
        if (pruned(c.y)) continue;
        solutions.push_back(c.y);
        if (solutions.size() > limits.max_solutions)
          throw ResourceLimit("solver bound exceeded: too many minimal solutions");
        if (stop_when >= 0 && c.y[static_cast<std::size_t>(stop_when)] != 0) return solutions;
      } else {
        open.push_back(&c);
      }
    }
    for (const Candidate* c : open) {
      if (pruned(c->y)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (bounded[i] && c->y[i] >= 1) continue;
        // Only move towards the origin of the image space.
        if (dot(c->ay, columns[i]) >= 0) continue;
        IntVector y = c->y;
        ++y[i];
        if (pruned(y)) continue;
        next.insert({std::move(y), add_column(c->ay, i)});
      }
      if (next.size() > limits.max_frontier)
        throw ResourceLimit("solver bound exceeded: frontier above " + std::to_string(limits.max_frontier));
    }
    frontier = std::move(next);
  }
  return solutions;
}

}  // namespace cclosure
