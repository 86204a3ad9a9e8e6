#include "cclosure/semilinear.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include "cclosure/errors.hpp"
#include "cclosure/int_math.hpp"

namespace cclosure {

std::string to_string(Check c) {
  switch (c) {
    case Check::Yes:
      return "yes";
    case Check::No:
      return "no";
    default:
      return "unknown";
  }
}

SemilinearSet::SemilinearSet(std::size_t k, std::vector<LinearSet> ts) : dimension(k), terms(std::move(ts)) {
  for (const auto& t : terms)
    if (t.dimension() != k) throw std::invalid_argument("term of wrong dimension in semilinear set");
}

namespace {

void dedupe(std::vector<LinearSet>& ts) {
  std::set<LinearSet> seen;
  std::vector<LinearSet> out;
  for (auto& t : ts)
    if (seen.insert(t).second) out.push_back(std::move(t));
  ts = std::move(out);
}

bool subsumes(const LinearSet& big, const LinearSet& small) {
  if (!big.contains(small.offset())) return false;
  LinearSet periods(NatVector(big.dimension()), big.basis());
  return std::all_of(small.basis().begin(), small.basis().end(), [&](const NatVector& b) { return periods.contains(b); });
}

// Drops terms contained in another term (offset and generators inside).
void drop_subsumed(std::vector<LinearSet>& ts) {
  std::vector<LinearSet> kept;
  for (auto& t : ts) {
    if (std::any_of(kept.begin(), kept.end(), [&](const LinearSet& k) { return subsumes(k, t); })) continue;
    std::erase_if(kept, [&](const LinearSet& k) { return subsumes(t, k); });
    kept.push_back(std::move(t));
  }
  ts = std::move(kept);
}

std::vector<NatVector> merged(std::vector<NatVector> a, const std::vector<NatVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<LinearSet> terms_of(const RationalExpr& e) {
  const std::size_t k = e.dimension();
  std::vector<LinearSet> out;
  switch (e.kind()) {
    case RationalExpr::Kind::EmptySet:
      break;
    case RationalExpr::Kind::Point:
      out.emplace_back(e.point_value(), std::vector<NatVector>{});
      break;
    case RationalExpr::Kind::Union:
      out = terms_of(e.left());
      for (auto& t : terms_of(e.right())) out.push_back(std::move(t));
      break;
    case RationalExpr::Kind::Sum: {
      auto l = terms_of(e.left());
      auto r = terms_of(e.right());
      for (const auto& a : l)
        for (const auto& b : r) out.emplace_back(a.offset() + b.offset(), merged(a.basis(), b.basis()));
      break;
    }
    case RationalExpr::Kind::Plus: {
      // (T1 ∪ ... ∪ Tn)^⊕ = T1^⊕ + ... + Tn^⊕, starting from {0}.
      out.emplace_back(NatVector(k), std::vector<NatVector>{});
      for (const auto& t : terms_of(e.left())) {
        std::vector<LinearSet> star;
        if (t.offset().is_zero()) {
          star.push_back(t);
        } else if (t.basis().empty()) {
          star.emplace_back(NatVector(k), std::vector<NatVector>{t.offset()});
        } else {
          // (γ + B^⊕)^⊕ = {0} ∪ (γ + (B ∪ {γ})^⊕)
          star.emplace_back(NatVector(k), std::vector<NatVector>{});
          star.emplace_back(t.offset(), merged(t.basis(), {t.offset()}));
        }
        std::vector<LinearSet> next;
        for (const auto& a : out)
          for (const auto& b : star) next.emplace_back(a.offset() + b.offset(), merged(a.basis(), b.basis()));
        dedupe(next);
        drop_subsumed(next);
        out = std::move(next);
      }
      break;
    }
  }
  dedupe(out);
  drop_subsumed(out);
  return out;
}

void check_terms(std::size_t n, const SemilinearOptions& opt) {
  if (n > opt.max_terms) throw ResourceLimit("semilinear set grew beyond " + std::to_string(opt.max_terms) + " terms");
}

void free_into(const LinearSet& t, std::vector<LinearSet>& out, std::size_t depth, const SemilinearOptions& opt) {
  if (depth > 64) throw ResourceLimit("make_free recursion depth exceeded");
  const std::size_t k = t.dimension();
  std::vector<NatVector> basis = t.basis();

  // Generators already in the monoid of the others are redundant.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<NatVector> rest = basis;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (LinearSet(NatVector(k), rest).contains(basis[i])) {
        basis = std::move(rest);
        again = true;
        break;
      }
    }
  }
  if (is_free(basis)) {
    out.emplace_back(t.offset(), std::move(basis));
    check_terms(out.size(), opt);
    return;
  }

  // A relation Σ_P c_i b_i = Σ_N c_i b_i: a representation minimizing the
  // coefficients on one side has some n_i < c_i there, so that side's
  // small coefficients enumerate every point with b_i dropped.
  const std::size_t r = basis.size();
  IntMatrix m(k, IntVector(r));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < r; ++i) m[l][i] = basis[i][l];
  std::vector<std::pair<std::size_t, Int>> best;
  Int best_cost = 0;
  for (const auto& c : integer_kernel(m, r)) {
    for (int side : {1, -1}) {
      std::vector<std::pair<std::size_t, Int>> pick;
      Int cost = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (c[i] * side > 0) {
          pick.emplace_back(i, c[i] * side);
          cost = checked_add(cost, c[i] * side);
        }
      if (best.empty() || cost < best_cost) {
        best = std::move(pick);
        best_cost = cost;
      }
    }
  }
  if (best.empty()) throw InvariantError("dependent basis without a usable relation");
  std::vector<LinearSet> parts;
  for (const auto& [i, ci] : best) {
    std::vector<NatVector> rest = basis;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    for (Int s = 0; s < ci; ++s) free_into(LinearSet(t.offset() + s * basis[i], rest), parts, depth + 1, opt);
  }
  dedupe(parts);
  drop_subsumed(parts);
  for (auto& p : parts) out.push_back(std::move(p));
  check_terms(out.size(), opt);
}

// Mixed-radix index of σ in the box [0, bound]^k, or -1 outside.
std::ptrdiff_t box_index(const NatVector& v, NatVector::value_type bound) {
  std::ptrdiff_t idx = 0;
  for (auto x : v) {
    if (x > bound) return -1;
    idx = idx * (bound + 1) + x;
  }
  return idx;
}

std::size_t box_size(std::size_t k, NatVector::value_type bound) {
  std::size_t n = 1;
  for (std::size_t j = 0; j < k; ++j) {
    n *= static_cast<std::size_t>(bound + 1);
    if (n > 50'000'000) throw ResourceLimit("certificate box too large");
  }
  return n;
}

void count_representations(const LinearSet& t, std::size_t i, const NatVector& at, NatVector::value_type bound,
                           std::vector<std::uint32_t>& counts) {
  if (i == t.basis().size()) {
    ++counts[static_cast<std::size_t>(box_index(at, bound))];
    return;
  }
  NatVector cur = at;
  while (box_index(cur, bound) >= 0) {
    count_representations(t, i + 1, cur, bound, counts);
    cur += t.basis()[i];
  }
}

std::vector<std::uint32_t> representation_table(const SemilinearSet& s, NatVector::value_type bound) {
  std::vector<std::uint32_t> counts(box_size(s.dimension, bound), 0);
  for (const auto& t : s.terms)
    if (box_index(t.offset(), bound) >= 0) count_representations(t, 0, t.offset(), bound, counts);
  return counts;
}

std::vector<char> indicator_table(const SemilinearSet& s, NatVector::value_type bound) {
  const std::size_t n = box_size(s.dimension, bound);
  std::vector<char> mark(n, 0);
  for (const auto& t : s.terms) {
    if (box_index(t.offset(), bound) < 0) continue;
    std::vector<char> seen(n, 0);
    std::deque<NatVector> queue{t.offset()};
    seen[static_cast<std::size_t>(box_index(t.offset(), bound))] = 1;
    while (!queue.empty()) {
      NatVector v = std::move(queue.front());
      queue.pop_front();
      mark[static_cast<std::size_t>(box_index(v, bound))] = 1;
      for (const auto& b : t.basis()) {
        NatVector w = v + b;
        auto idx = box_index(w, bound);
        if (idx < 0 || seen[static_cast<std::size_t>(idx)]) continue;
        seen[static_cast<std::size_t>(idx)] = 1;
        queue.push_back(std::move(w));
      }
    }
  }
  return mark;
}

}  // namespace

SemilinearSet to_semilinear(const RationalExpr& e) { return SemilinearSet(e.dimension(), terms_of(e)); }

bool member(const NatVector& sigma, const SemilinearSet& s) {
  return std::any_of(s.terms.begin(), s.terms.end(), [&](const LinearSet& t) { return t.contains(sigma); });
}

SemilinearSet make_free(const LinearSet& t, const SemilinearOptions& opt) {
  std::vector<LinearSet> out;
  free_into(t, out, 0, opt);
  dedupe(out);
  drop_subsumed(out);
  SemilinearSet s(t.dimension(), std::move(out));
  s.all_free = Check::Yes;
  return s;
}

SemilinearSet make_free(const SemilinearSet& s, const SemilinearOptions& opt) {
  std::vector<LinearSet> out;
  for (const auto& t : s.terms) free_into(t, out, 0, opt);
  dedupe(out);
  drop_subsumed(out);
  SemilinearSet r(s.dimension, std::move(out));
  r.all_free = Check::Yes;
  return r;
}

namespace {

std::vector<IntVector> intersection_columns(const LinearSet& t1, const LinearSet& t2) {
  std::vector<IntVector> cols;
  for (const auto& b : t1.basis()) cols.emplace_back(b.begin(), b.end());
  for (const auto& b : t2.basis()) {
    IntVector c(b.begin(), b.end());
    for (auto& x : c) x = -x;
    cols.push_back(std::move(c));
  }
  IntVector d(t1.dimension());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = t1.offset()[j] - t2.offset()[j];
  cols.push_back(std::move(d));
  return cols;
}

// Per coordinate: the offset and the gcd of the period components there.
struct Footprint {
  std::vector<Int> offset, step;

  explicit Footprint(const LinearSet& t) : offset(t.offset().begin(), t.offset().end()), step(t.dimension(), 0) {
    for (const auto& b : t.basis())
      for (std::size_t j = 0; j < step.size(); ++j) step[j] = gcd(step[j], b[j]);
  }
};

// A coordinate on which the two sets provably cannot agree: fixed on a side
// that lies below the other's offset, or offsets differing by a non-multiple
// of the gcd of every period component there.
bool clash(const Footprint& f1, const Footprint& f2) {
  for (std::size_t j = 0; j < f1.offset.size(); ++j) {
    const Int o1 = f1.offset[j], o2 = f2.offset[j], g1 = f1.step[j], g2 = f2.step[j];
    if (g1 == 0 && o1 < o2) return true;
    if (g2 == 0 && o2 < o1) return true;
    const Int g = gcd(g1, g2);
    if (g == 0 ? o1 != o2 : (o1 - o2) % g != 0) return true;
  }
  return false;
}

bool coordinates_clash(const LinearSet& t1, const LinearSet& t2) { return clash(Footprint(t1), Footprint(t2)); }

}  // namespace

SemilinearSet intersect_linear(const LinearSet& t1, const LinearSet& t2, const SolverLimits& limits) {
  if (t1.dimension() != t2.dimension()) throw std::invalid_argument("intersecting sets of different dimension");
  const std::size_t k = t1.dimension();
  if (coordinates_clash(t1, t2)) return SemilinearSet(k);
  const std::size_t n1 = t1.basis().size(), z = n1 + t2.basis().size();
  auto sols = minimal_solutions(intersection_columns(t1, t2), {z}, limits);

  std::set<NatVector> offsets, periods;
  for (const auto& y : sols) {
    NatVector v(k);
    for (std::size_t i = 0; i < n1; ++i) v += y[i] * t1.basis()[i];
    if (y[z] == 1)
      offsets.insert(t1.offset() + v);
    else
      periods.insert(std::move(v));
  }
  std::vector<NatVector> basis(periods.begin(), periods.end());
  std::vector<LinearSet> terms;
  for (const auto& o : offsets) {
    bool covered = false;
    for (const auto& other : offsets) {
      if (other == o || !o.dominates(other)) continue;
      NatVector diff = o;
      for (std::size_t j = 0; j < k; ++j) diff[j] -= other[j];
      if (LinearSet(NatVector(k), basis).contains(diff)) {
        covered = true;
        break;
      }
    }
    if (!covered) terms.emplace_back(o, basis);
  }
  return SemilinearSet(k, std::move(terms));
}

bool intersects(const LinearSet& t1, const LinearSet& t2, const SolverLimits& limits) {
  if (t1.dimension() != t2.dimension()) throw std::invalid_argument("intersecting sets of different dimension");
  if (coordinates_clash(t1, t2)) return false;
  if (t1.basis().empty()) return t2.contains(t1.offset());
  if (t2.basis().empty()) return t1.contains(t2.offset());
  const std::size_t z = t1.basis().size() + t2.basis().size();
  auto sols = minimal_solutions(intersection_columns(t1, t2), {z}, limits, static_cast<std::ptrdiff_t>(z));
  return std::any_of(sols.begin(), sols.end(), [&](const IntVector& y) { return y[z] == 1; });
}

namespace {

// Intersection test for free terms through their exact regions.
bool meets(const LinearSet& p, const LinearSet& t, const Region& t_region, const SemilinearOptions& opt) {
  if (p.basis().empty()) return t.contains(p.offset());
  if (t.basis().empty()) return p.contains(t.offset());
  Region both = Region::of(p);
  for (const auto& c : t_region.constraints()) both.add(c);
  return has_point(both, opt.region);
}

}  // namespace

SemilinearSet disambiguate(const SemilinearSet& s, const SemilinearOptions& opt) {
  for (const auto& t : s.terms)
    if (!is_free(t.basis())) throw InvariantError("disambiguate needs free bases; got " + to_string(t));
  // Terms already known to be pairwise disjoint only need the certificate.
  if (s.unambiguous == Check::Yes) {
    SemilinearSet r = s;
    r.all_free = Check::Yes;
    if (!unambiguity_certificate(r, opt.certificate_bound))
      throw InvariantError("set flagged unambiguous fails its unambiguity certificate");
    r.consistent = is_consistent(r) ? Check::Yes : Check::No;
    return r;
  }
  std::vector<LinearSet> originals = s.terms;
  dedupe(originals);

  std::vector<Region> regions;
  std::vector<Footprint> prints;
  for (const auto& t : originals) {
    regions.push_back(Region::of(t));
    prints.emplace_back(t);
  }

  // Pieces stay regions while earlier terms are cut away and are split into
  // linear sets once at the end; splitting after every cut fragments them.
  std::vector<LinearSet> out;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < originals.size(); ++i) {
    std::vector<Region> pieces{regions[i]};
    bool untouched = true;
    for (std::size_t j = 0; j < i && !pieces.empty(); ++j) {
      if (untouched) {
        if (clash(prints[i], prints[j])) continue;
        if (subsumes(originals[j], originals[i])) {
          pieces.clear();
          break;
        }
        if (!meets(originals[i], originals[j], regions[j], opt)) continue;
      }
      std::vector<Region> next;
      for (auto& p : pieces) {
        if (++steps > opt.max_steps)
          throw ResourceLimit("disambiguation exceeded " + std::to_string(opt.max_steps) + " steps");
        Region both = p;
        for (const auto& c : regions[j].constraints()) both.add(c);
        if (!has_point(both, opt.region)) {
          next.push_back(std::move(p));
          continue;
        }
        untouched = false;
        for (auto& rest : subtract(p, regions[j]))
          if (has_point(rest, opt.region)) next.push_back(std::move(rest));
        check_terms(next.size(), opt);
      }
      pieces = std::move(next);
    }
    if (untouched) {
      if (!pieces.empty()) out.push_back(originals[i]);
    } else {
      for (const auto& p : pieces)
        for (auto& q : decompose(p, opt.region)) out.push_back(std::move(q));
    }
    check_terms(out.size(), opt);
  }

  SemilinearSet r(s.dimension, std::move(out));
  r.all_free = Check::Yes;
  if (!unambiguity_certificate(r, s, opt.certificate_bound))
    throw InvariantError("disambiguation failed its unambiguity certificate");
  r.unambiguous = Check::Yes;
  r.consistent = is_consistent(r) ? Check::Yes : Check::No;
  return r;
}

bool is_consistent(const SemilinearSet& s) {
  std::vector<NatVector::value_type> seen(s.dimension, 0);
  for (const auto& t : s.terms)
    for (const auto& b : t.basis()) {
      auto j = b.primary_index();
      if (j < 0) continue;
      auto& p = seen[static_cast<std::size_t>(j)];
      if (p != 0 && p != b[static_cast<std::size_t>(j)]) return false;
      p = b[static_cast<std::size_t>(j)];
    }
  return true;
}

SemilinearSet make_consistent(const SemilinearSet& s) {
  for (const auto& t : s.terms)
    if (!is_free(t.basis())) throw InvariantError("make_consistent needs free bases; got " + to_string(t));
  const std::size_t k = s.dimension;
  std::vector<Int> p(k, 1);
  for (const auto& t : s.terms)
    for (const auto& b : t.basis())
      if (auto j = b.primary_index(); j >= 0) p[static_cast<std::size_t>(j)] = lcm(p[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j)]);

  std::vector<LinearSet> out;
  for (const auto& t : s.terms) {
    std::vector<NatVector> basis;
    std::vector<NatVector> offsets{t.offset()};
    for (const auto& b : t.basis()) {
      auto j = b.primary_index();
      if (j < 0 || b[static_cast<std::size_t>(j)] == p[static_cast<std::size_t>(j)]) {
        basis.push_back(b);
        continue;
      }
      const auto jj = static_cast<std::size_t>(j);
      basis.push_back(NatVector::unit(k, jj, p[jj]));
      std::vector<NatVector> next;
      for (const auto& o : offsets)
        for (Int r = 0; r < p[jj] / b[jj]; ++r) next.push_back(o + r * b);
      offsets = std::move(next);
    }
    for (auto& o : offsets) out.emplace_back(std::move(o), basis);
  }
  SemilinearSet r(k, std::move(out));
  r.all_free = s.all_free;
  r.unambiguous = s.unambiguous;
  r.consistent = Check::Yes;
  return r;
}

bool unambiguity_certificate(const SemilinearSet& s, const SemilinearSet& reference, NatVector::value_type bound) {
  if (s.dimension != reference.dimension) return false;
  auto counts = representation_table(s, bound);
  auto mark = indicator_table(reference, bound);
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != static_cast<std::uint32_t>(mark[i])) return false;
  return true;
}

bool unambiguity_certificate(const SemilinearSet& s, NatVector::value_type bound) {
  auto counts = representation_table(s, bound);
  return std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c <= 1; });
}

std::string to_string(const SemilinearSet& s) {
  if (s.terms.empty()) return "#";
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) out += " | ";
    out += to_string(s.terms[i]);
  }
  return out;
}

namespace {

class SemilinearParser {
 public:
  explicit SemilinearParser(std::string_view text) : text_(text) {}

  SemilinearSet parse(std::size_t empty_dimension) {
    if (peek() == '#') {
      ++pos_;
      expect_end();
      return SemilinearSet(empty_dimension);
    }
    std::vector<LinearSet> terms{term()};
    while (peek() == '|') {
      ++pos_;
      terms.push_back(term());
    }
    expect_end();
    std::size_t k = terms.front().dimension();
    return SemilinearSet(k, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  int peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : -1;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    if (peek() != -1) fail("unexpected trailing input");
  }

  NatVector vector() {
    expect('(');
    std::vector<NatVector::value_type> comps;
    if (peek() != ')') {
      while (true) {
        if (!std::isdigit(peek())) fail("expected a nonnegative integer");
        NatVector::value_type v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          v = checked_add(checked_mul(v, 10), text_[pos_++] - '0');
        comps.push_back(v);
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect(')');
    return NatVector(std::move(comps));
  }

  LinearSet term() {
    NatVector offset = vector();
    std::vector<NatVector> basis;
    if (peek() == '+') {
      ++pos_;
      expect('(');
      basis.push_back(vector());
      while (peek() == '|') {
        ++pos_;
        basis.push_back(vector());
      }
      expect(')');
      expect('+');
    }
    for (const auto& b : basis)
      if (b.size() != offset.size()) fail("vectors of different dimension");
    return LinearSet(std::move(offset), std::move(basis));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SemilinearSet parse_semilinear(std::string_view text, std::size_t empty_dimension) {
  return SemilinearParser(text).parse(empty_dimension);
}

}  // namespace cclosure
