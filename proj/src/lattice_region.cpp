#include "cclosure/lattice_region.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cclosure/errors.hpp"

namespace cclosure {

using boost::multiprecision::cpp_int;

namespace {

IntVector negated(IntVector w) {
  for (auto& x : w) x = checked_neg(x);
  return w;
}

bool all_zero(const IntVector& w) {
  return std::all_of(w.begin(), w.end(), [](Int x) { return x == 0; });
}

bool all_nonnegative(const IntVector& w) {
  return std::all_of(w.begin(), w.end(), [](Int x) { return x >= 0; });
}

IntVector unit_row(std::size_t k, std::size_t j) {
  IntVector w(k, 0);
  w[j] = 1;
  return w;
}

std::vector<Constraint> negate(const Constraint& t) {
  switch (t.kind) {
    case Constraint::Kind::Ge:
      return {Constraint::ge(negated(t.w), checked_add(checked_neg(t.c), -1))};
    case Constraint::Kind::Eq:
      return {Constraint::ge(t.w, checked_add(t.c, -1)),
              Constraint::ge(negated(t.w), checked_add(checked_neg(t.c), -1))};
    case Constraint::Kind::Mod: {
      std::vector<Int> rest;
      for (Int r = 0; r < t.modulus; ++r)
        if (!std::binary_search(t.residues.begin(), t.residues.end(), r)) rest.push_back(r);
      if (rest.empty()) return {};
      return {Constraint::mod(t.w, t.c, t.modulus, std::move(rest))};
    }
  }
  return {};
}

// Calls f on every r-element subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Row {
  IntVector w;
  Int c;
  bool equality;
};

constexpr std::size_t kSmall = 12;
using SmallMatrix = __int128[kSmall][kSmall];

// Bareiss determinant of the leading n×n block of a; a is clobbered.
Int small_det(SmallMatrix& a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  __int128 prev = 1;
  constexpr __int128 lim = INT64_MAX;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a[k][j], a[p][j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        if (v > lim || v < -lim) throw ResourceLimit("integer overflow in exact arithmetic (input beyond desk scale)");
        a[i][j] = v;
      }
    }
    prev = a[k][k];
  }
  __int128 d = sign * a[n - 1][n - 1];
  if (d > lim || d < -lim) throw ResourceLimit("integer overflow in exact arithmetic (input beyond desk scale)");
  return static_cast<Int>(d);
}

// Whether {x >= 0 real : every row holds} may be nonempty: phase one of the
// simplex method on a fraction-free integer tableau (every entry is the
// stored value over the positive common denominator d), Bland's rule.
// Gives up and answers true if an entry leaves 64 bits.
bool rational_feasible(const std::vector<Row>& rows, std::size_t k) {
  const std::size_t m = rows.size();
  std::size_t slacks = 0;
  for (const auto& r : rows) slacks += r.equality ? 0 : 1;
  // Columns: x, slacks, artificials, right-hand side. Row m is the objective.
  const std::size_t n = k + slacks + m, rhs = n, w = n + 1;
  std::vector<__int128> t((m + 1) * w, 0);
  auto at = [&](std::size_t i, std::size_t j) -> __int128& { return t[i * w + j]; };
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0, s = 0; i < m; ++i) {
    // w·x - s = -c, scaled so the right-hand side is nonnegative
    const Row& r = rows[i];
    const int sign = r.c > 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) at(i, j) = sign * static_cast<__int128>(r.w[j]);
    if (!r.equality) at(i, k + s++) = -sign;
    at(i, rhs) = -sign * static_cast<__int128>(r.c);
    at(i, k + slacks + i) = 1;
    basis[i] = k + slacks + i;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k + slacks; ++j) at(m, j) -= at(i, j);
  for (std::size_t i = 0; i < m; ++i) at(m, rhs) -= at(i, rhs);
  constexpr __int128 lim = INT64_MAX;
  __int128 d = 1;
  while (true) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (at(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter == n) break;
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (at(i, enter) <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      __int128 lhs = at(i, rhs) * at(leave, enter), cur = at(leave, rhs) * at(i, enter);
      if (lhs < cur || (lhs == cur && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) break;
    const __int128 piv = at(leave, enter);
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const __int128 f = at(i, enter);
      for (std::size_t j = 0; j <= n; ++j) {
        __int128 v = at(i, j) * piv - f * at(leave, j);
        if (v % d != 0) return true;
        v /= d;
        if (v > lim || v < -lim) return true;
        at(i, j) = v;
      }
    }
    d = piv;
    basis[leave] = enter;
  }
  return at(m, rhs) == 0;
}

// Rows with equal normalised coefficients collapse to the tightest one.
// Inequalities are divided by the content of w, flooring the constant,
// which keeps every integer solution.
std::vector<Row> tightened(const std::vector<Row>& in) {
  std::map<IntVector, std::pair<Int, bool>> best;
  std::vector<Row> eqs;
  for (const auto& r : in) {
    if (r.equality) {
      if (std::none_of(eqs.begin(), eqs.end(), [&](const Row& e) { return e.w == r.w && e.c == r.c; }))
        eqs.push_back(r);
      continue;
    }
    Int g = content(r.w);
    IntVector w = r.w;
    Int c = r.c;
    if (g > 1) {
      for (auto& x : w) x /= g;
      c = floor_div(c, g);
    }
    auto [it, fresh] = best.try_emplace(std::move(w), c, false);
    if (!fresh) it->second.first = std::min(it->second.first, c);
  }
  std::vector<Row> out = std::move(eqs);
  for (auto& [w, cv] : best) out.push_back({w, cv.first, false});
  return out;
}

}  // namespace

Int Constraint::value(const NatVector& x) const {
  Int s = c;
  for (std::size_t j = 0; j < w.size(); ++j) s = checked_add(s, checked_mul(w[j], x[j]));
  return s;
}

bool Constraint::holds(const NatVector& x) const {
  Int v = value(x);
  switch (kind) {
    case Kind::Ge:
      return v >= 0;
    case Kind::Eq:
      return v == 0;
    case Kind::Mod:
      return std::binary_search(residues.begin(), residues.end(), floor_mod(v, modulus));
  }
  return false;
}

Region Region::of(const LinearSet& t) {
  const std::size_t k = t.dimension();
  const auto& basis = t.basis();
  const std::size_t r = basis.size();
  if (!is_free(basis)) throw InvariantError("region of a linear set needs a free basis: " + to_string(t));
  Region reg(k);
  IntVector g(t.offset().begin(), t.offset().end());
  if (r == 0) {
    for (std::size_t l = 0; l < k; ++l) reg.add(Constraint::eq(unit_row(k, l), -g[l]));
    reg.normalize();
    return reg;
  }
  IntMatrix m(k, IntVector(r));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < r; ++i) m[l][i] = basis[i][l];
  auto rows = independent_rows(m);
  IntMatrix mr;
  for (auto l : rows) mr.push_back(m[l]);
  const Int d = determinant(mr);
  const Int s = d > 0 ? 1 : -1;
  const Int abs_d = d > 0 ? d : checked_neg(d);
  const IntMatrix adj = adjugate(mr);

  // Coefficients n = adj (x_R - γ_R) / d must be nonnegative integers.
  for (std::size_t i = 0; i < r; ++i) {
    IntVector w(k, 0);
    for (std::size_t t2 = 0; t2 < r; ++t2) w[rows[t2]] = adj[i][t2];
    Int wg = dot(w, g);
    IntVector sw = w;
    for (auto& x : sw) x = checked_mul(x, s);
    reg.add(Constraint::ge(std::move(sw), checked_mul(-s, wg)));
    if (abs_d > 1) reg.add(Constraint::mod(w, checked_neg(wg), abs_d, {0}));
  }
  // Remaining coordinates are determined by the independent ones.
  std::vector<bool> in_rows(k, false);
  for (auto l : rows) in_rows[l] = true;
  for (std::size_t l = 0; l < k; ++l) {
    if (in_rows[l]) continue;
    IntVector w(k, 0);
    w[l] = d;
    for (std::size_t t2 = 0; t2 < r; ++t2) {
      Int u = 0;
      for (std::size_t i = 0; i < r; ++i) u = checked_add(u, checked_mul(m[l][i], adj[i][t2]));
      w[rows[t2]] = checked_add(w[rows[t2]], checked_neg(u));
    }
    Int c = checked_neg(dot(w, g));
    reg.add(Constraint::eq(std::move(w), c));
  }
  reg.normalize();
  return reg;
}

Region& Region::add(Constraint c) {
  if (c.w.size() != k_) throw std::invalid_argument("constraint of wrong dimension");
  if (c.kind == Constraint::Kind::Mod && c.modulus <= 0) throw std::invalid_argument("modulus must be positive");
  cons_.push_back(std::move(c));
  return *this;
}

bool Region::contains(const NatVector& x) const {
  if (empty_ || x.size() != k_) return false;
  return std::all_of(cons_.begin(), cons_.end(), [&](const Constraint& c) { return c.holds(x); });
}

bool Region::normalize() {
  if (empty_) return false;
  auto fail = [this] {
    empty_ = true;
    cons_.clear();
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::map<IntVector, Int> ge;  // w·x + c >= 0, tightest c kept
    std::map<IntVector, Int> eq;  // first nonzero of w positive
    std::map<std::pair<IntVector, Int>, std::vector<Int>> mods;  // (w, m) -> residues of w·x

    auto add_eq = [&](IntVector w, Int c) {
      auto it = std::find_if(w.begin(), w.end(), [](Int x) { return x != 0; });
      if (*it < 0) {
        w = negated(std::move(w));
        c = checked_neg(c);
      }
      auto [pos, fresh] = eq.emplace(std::move(w), c);
      return fresh || pos->second == c;
    };

    for (auto& con : cons_) {
      IntVector w = std::move(con.w);
      Int c = con.c;
      switch (con.kind) {
        case Constraint::Kind::Ge: {
          Int g = content(w);
          if (g == 0) {
            if (c < 0) return fail();
            continue;
          }
          for (auto& x : w) x /= g;
          c = floor_div(c, g);
          if (all_nonnegative(w) && c >= 0) continue;
          if (all_nonnegative(negated(w)) && c < 0) return fail();
          auto [pos, fresh] = ge.emplace(std::move(w), c);
          if (!fresh) pos->second = std::min(pos->second, c);
          break;
        }
        case Constraint::Kind::Eq: {
          Int g = content(w);
          if (g == 0) {
            if (c != 0) return fail();
            continue;
          }
          if (c % g != 0) return fail();
          for (auto& x : w) x /= g;
          if (!add_eq(std::move(w), c / g)) return fail();
          break;
        }
        case Constraint::Kind::Mod: {
          const Int m = con.modulus;
          for (auto& x : w) x = floor_mod(x, m);
          std::vector<Int> res;
          for (Int r : con.residues)
            if (r >= 0 && r < m) res.push_back(floor_mod(r - c, m));
          std::sort(res.begin(), res.end());
          res.erase(std::unique(res.begin(), res.end()), res.end());
          if (res.empty()) return fail();
          if (all_zero(w)) {
            if (!std::binary_search(res.begin(), res.end(), 0)) return fail();
            continue;
          }
          if (static_cast<Int>(res.size()) == m) continue;
          auto key = std::make_pair(std::move(w), m);
          auto it = mods.find(key);
          if (it == mods.end()) {
            mods.emplace(std::move(key), std::move(res));
          } else {
            std::vector<Int> both;
            std::set_intersection(it->second.begin(), it->second.end(), res.begin(), res.end(),
                                  std::back_inserter(both));
            if (both.empty()) return fail();
            it->second = std::move(both);
          }
          break;
        }
      }
    }

    // Opposite inequalities: empty, or collapse into an equation.
    for (auto it = ge.begin(); it != ge.end();) {
      IntVector opp = negated(it->first);
      auto jt = ge.find(opp);
      if (jt == ge.end() || !(it->first < opp)) {
        ++it;
        continue;
      }
      // w·x >= -c1 and w·x <= c2
      Int lo = checked_neg(it->second), hi = jt->second;
      if (lo > hi) return fail();
      if (lo == hi) {
        if (!add_eq(it->first, it->second)) return fail();
        ge.erase(jt);
        it = ge.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }

    // Inequalities along an equation's direction are decided by it.
    for (auto it = ge.begin(); it != ge.end();) {
      Int fixed = 0;  // value of w·x forced by an equation
      bool known = false;
      if (auto e = eq.find(it->first); e != eq.end()) {
        fixed = checked_neg(e->second);
        known = true;
      } else if (auto e2 = eq.find(negated(it->first)); e2 != eq.end()) {
        fixed = e2->second;
        known = true;
      }
      if (!known) {
        ++it;
        continue;
      }
      if (checked_add(fixed, it->second) < 0) return fail();
      it = ge.erase(it);
    }

    cons_.clear();
    for (auto& [w, c] : eq) cons_.push_back(Constraint::eq(w, c));
    for (auto& [w, c] : ge) cons_.push_back(Constraint::ge(w, c));
    for (auto& [key, res] : mods) cons_.push_back(Constraint::mod(key.first, 0, key.second, res));
  }
  return true;
}

std::vector<Region> subtract(const Region& from, const Region& removed) {
  Region rem = removed;
  if (!rem.normalize()) return {from};
  std::vector<Region> out;
  Region base = from;
  for (const auto& t : rem.constraints()) {
    for (auto& neg : negate(t)) {
      Region piece = base;
      piece.add(std::move(neg));
      if (piece.normalize()) out.push_back(std::move(piece));
    }
    base.add(t);
  }
  return out;
}

namespace {

class Decomposer {
 public:
  Decomposer(const RegionLimits& limits, bool first_only) : limits_(limits), first_only_(first_only) {}

  bool found() const { return found_; }

  void run(Region q, std::size_t depth) {
    if (first_only_ && found_) return;
    if (depth > limits_.max_depth) throw ResourceLimit("region decomposition exceeded depth " + std::to_string(limits_.max_depth));
    if (!q.normalize()) return;
    const std::size_t k = q.dimension();
    if (k == 0) {
      if (q.contains(NatVector(0))) emit(NatVector(0));
      return;
    }

    std::vector<Row> ge, eq;
    std::vector<const Constraint*> mods;
    std::vector<bool> has_unit(k, false);
    for (const auto& c : q.constraints()) {
      if (c.kind == Constraint::Kind::Ge) {
        ge.push_back({c.w, c.c, false});
        for (std::size_t j = 0; j < k; ++j)
          if (c.w == unit_row(k, j)) has_unit[j] = true;
      } else if (c.kind == Constraint::Kind::Eq) {
        eq.push_back({c.w, c.c, true});
      } else {
        mods.push_back(&c);
      }
    }
    for (std::size_t j = 0; j < k; ++j)
      if (!has_unit[j]) ge.push_back({unit_row(k, j), 0, false});
    {
      std::vector<Row> rows = eq;
      rows.insert(rows.end(), ge.begin(), ge.end());
      if (!rational_feasible(rows, k)) return;
    }

    if (auto g = find_ray(ge, eq, k)) {
      Int scale = 1;
      for (const Constraint* m : mods) {
        Int v = dot(m->w, *g);
        scale = lcm(scale, m->modulus / gcd(m->modulus, v));
      }
      for (auto& x : *g) x = checked_mul(x, scale);

      // The part of q not reachable from q by a step along g, split into
      // disjoint pieces according to the first constraint a step back
      // would violate.
      std::vector<std::size_t> active;
      std::vector<Int> step;
      for (std::size_t i = 0; i < ge.size(); ++i) {
        Int a = dot(ge[i].w, *g);
        if (a > 0) {
          active.push_back(i);
          step.push_back(a);
        }
      }
      rays_.emplace_back(std::vector<NatVector::value_type>(g->begin(), g->end()));
      for (std::size_t t = 0; t < active.size(); ++t) {
        Region piece = q;
        const Row& row = ge[active[t]];
        piece.add(Constraint::ge(negated(row.w), checked_add(step[t] - 1, checked_neg(row.c))));
        for (std::size_t p = 0; p < t; ++p) {
          const Row& prev = ge[active[p]];
          piece.add(Constraint::ge(prev.w, checked_add(prev.c, checked_neg(step[p]))));
        }
        run(std::move(piece), depth + 1);
      }
      rays_.pop_back();
      return;
    }
    enumerate_bounded(q, ge, eq);
  }

  std::vector<LinearSet> take() { return std::move(out_); }

 private:
  void emit(NatVector point) {
    found_ = true;
    if (first_only_) return;
    out_.emplace_back(std::move(point), rays_);
    if (out_.size() > limits_.max_pieces)
      throw ResourceLimit("region decomposition produced more than " + std::to_string(limits_.max_pieces) + " pieces");
  }

  // An extreme ray of {y : G y >= 0, E y = 0} with smallest 1-norm, or none
  // when that cone is {0}. G contains the rows y_j >= 0.
  std::optional<IntVector> find_ray(const std::vector<Row>& ge, const std::vector<Row>& eq, std::size_t k) {
    IntMatrix all;
    for (const auto& r : eq) all.push_back(r.w);
    IntMatrix em;
    for (auto i : independent_rows(all)) em.push_back(all[i]);
    const std::size_t re = em.size();
    if (re >= k) return std::nullopt;
    if (k > kSmall) throw ResourceLimit("region dimension " + std::to_string(k) + " beyond desk scale");
    const std::size_t need = k - 1 - re;
    std::optional<IntVector> best;
    Int best_norm = 0;
    std::vector<const IntVector*> rows(k - 1);
    for (std::size_t i = 0; i < re; ++i) rows[i] = &em[i];
    IntVector y(k);
    SmallMatrix buf;
    for_each_subset(ge.size(), need, [&](const std::vector<std::size_t>& subset) {
      charge();
      for (std::size_t i = 0; i < need; ++i) rows[re + i] = &ge[subset[i]].w;
      // The kernel of k-1 independent rows is spanned by their signed maximal minors.
      bool zero = true;
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i + 1 < k; ++i)
          for (std::size_t c = 0, cc = 0; c < k; ++c)
            if (c != j) buf[i][cc++] = (*rows[i])[c];
        Int m = small_det(buf, k - 1);
        y[j] = j % 2 ? checked_neg(m) : m;
        if (m != 0) zero = false;
      }
      if (zero) return;
      bool pos = true, neg = true;
      for (const auto& r : ge) {
        Int v = dot(r.w, y);
        if (v < 0) pos = false;
        if (v > 0) neg = false;
        if (!pos && !neg) return;
      }
      IntVector cand = primitive(pos ? y : negated(y));
      Int norm = 0;
      for (Int x : cand) norm = checked_add(norm, x);
      if (!best || norm < best_norm || (norm == best_norm && cand < *best)) {
        best = std::move(cand);
        best_norm = norm;
      }
    });
    return best;
  }

  void enumerate_bounded(const Region& q, const std::vector<Row>& ge, const std::vector<Row>& eq) {
    const std::size_t k = q.dimension();
    std::vector<Row> all = eq;
    all.insert(all.end(), ge.begin(), ge.end());
    const std::vector<Row> rows = tightened(all);
    if (k > kSmall) throw ResourceLimit("region dimension " + std::to_string(k) + " beyond desk scale");

    // Bounding box from the vertices of the polytope.
    std::vector<Int> lo(k, 0), hi(k, 0);
    bool any = false;
    SmallMatrix buf;
    std::vector<Int> num(k);
    for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& subset) {
      charge();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) buf[i][j] = rows[subset[i]].w[j];
      Int den = small_det(buf, k);
      if (den == 0) return;
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t c = 0; c < k; ++c) buf[i][c] = c == j ? -rows[subset[i]].c : rows[subset[i]].w[c];
        num[j] = small_det(buf, k);
      }
      // Vertex x = num / den; check every row exactly.
      for (const auto& r : rows) {
        cpp_int v = cpp_int(r.c) * den;
        for (std::size_t j = 0; j < k; ++j) v += cpp_int(r.w[j]) * num[j];
        if (den < 0) v = -v;
        if (r.equality ? v != 0 : v < 0) return;
      }
      for (std::size_t j = 0; j < k; ++j) {
        Int l = std::max<Int>(0, ceil_div(num[j], den));
        Int h = floor_div(num[j], den);
        if (!any) {
          lo[j] = l;
          hi[j] = h;
        } else {
          lo[j] = std::min(lo[j], l);
          hi[j] = std::max(hi[j], h);
        }
      }
      any = true;
    });
    if (!any) return;

    NatVector x(k);
    scan(q, rows, lo, hi, x, 0);
  }

  void charge() {
    if (++work_ > limits_.max_work)
      throw ResourceLimit("region decomposition exceeded " + std::to_string(limits_.max_work) + " work units");
  }

  void scan(const Region& q, const std::vector<Row>& rows, const std::vector<Int>& lo, const std::vector<Int>& hi,
            NatVector& x, std::size_t j) {
    const std::size_t k = x.size();
    if (++visited_ > limits_.max_points)
      throw ResourceLimit("region decomposition scanned more than " + std::to_string(limits_.max_points) + " points");
    if (j + 1 < k) {
      for (Int v = lo[j]; v <= hi[j] && !(first_only_ && found_); ++v) {
        x[j] = v;
        scan(q, rows, lo, hi, x, j + 1);
      }
      x[j] = 0;
      return;
    }
    // Last coordinate: intersect the interval allowed by every row.
    Int l = lo[j], h = hi[j];
    for (const auto& r : rows) {
      Int rest = r.c;
      for (std::size_t i = 0; i < j; ++i) rest = checked_add(rest, checked_mul(r.w[i], x[i]));
      Int a = r.w[j];
      if (a == 0) {
        if (r.equality ? rest != 0 : rest < 0) return;
      } else if (r.equality) {
        if (rest % a != 0) return;
        Int v = -rest / a;
        l = std::max(l, v);
        h = std::min(h, v);
      } else if (a > 0) {
        l = std::max(l, ceil_div(checked_neg(rest), a));
      } else {
        h = std::min(h, floor_div(rest, -a));
      }
      if (l > h) return;
    }
    for (Int v = l; v <= h && !(first_only_ && found_); ++v) {
      x[j] = v;
      if (q.contains(x)) emit(x);
    }
    x[j] = 0;
  }

  const RegionLimits& limits_;
  std::vector<NatVector> rays_;
  std::vector<LinearSet> out_;
  std::size_t visited_ = 0;
  bool first_only_;
  bool found_ = false;
  std::size_t work_ = 0;
};

}  // namespace

std::vector<LinearSet> decompose(const Region& r, const RegionLimits& limits) {
  Decomposer d(limits, false);
  d.run(r, 0);
  return d.take();
}

bool has_point(const Region& r, const RegionLimits& limits) {
  Decomposer d(limits, true);
  d.run(r, 0);
  return d.found();
}

}  // namespace cclosure
