#include "cclosure/resimple.hpp"

#include <algorithm>
#include <set>

#include "cclosure/errors.hpp"

namespace cclosure {

namespace {

// Order classes by their list of members.
bool class_before(const ClassPattern& a, const ClassPattern& b) {
  auto i = a.find_first(), j = b.find_first();
  while (i != ClassPattern::npos && j != ClassPattern::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == ClassPattern::npos && j != ClassPattern::npos;
}

}  // namespace

bool ResimpleSystem::in_term(const NatVector& sigma, std::size_t h) const {
  const NatVector& d = terms_[h].offset;
  for (std::size_t j = 0; j < dimension(); ++j) {
    Int p = periods_[j];
    if (p == 0 ? sigma[j] != d[j] : (sigma[j] < d[j] || (sigma[j] - d[j]) % p != 0)) return false;
  }
  return true;
}

ClassPattern ResimpleSystem::pattern_of(const NatVector& sigma) const {
  ClassPattern h(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) h[i] = in_term(sigma, i);
  return h;
}

Int ResimpleSystem::coefficient_sum(const ClassPattern& h) const {
  Int s = 0;
  for (auto i = h.find_first(); i != ClassPattern::npos; i = h.find_next(i)) s = checked_add(s, terms_[i].mu);
  return s;
}

std::vector<Axis> ResimpleSystem::axes() const {
  std::vector<Axis> out(dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    Axis& a = out[j];
    if (periods_[j] > 0) {
      // Past max(d - p + 1) a count agreeing with d modulo p is >= d.
      a.periodic = true;
      a.period = periods_[j];
      for (const auto& t : terms_) a.tail = std::max(a.tail, t.offset[j] - a.period + 1);
    } else {
      for (const auto& t : terms_) a.tail = std::max(a.tail, t.offset[j] + 1);
    }
  }
  return out;
}

ClassPattern ResimpleSystem::local_pattern(std::size_t j, const Axis& axis, Int s) const {
  ClassPattern h(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    Int d = terms_[i].offset[j];
    if (!axis.periodic)
      h[i] = s == d;
    else if (s < axis.tail)
      h[i] = s >= d && (s - d) % axis.period == 0;
    else
      h[i] = floor_mod(s - d, axis.period) == 0;
  }
  return h;
}

ResimpleSystem build_system(const Polynomial& p, const FactoredDenominator& q, const ResimpleLimits& limits) {
  const std::size_t k = p.dimension();
  ResimpleSystem sys;
  sys.periods_.assign(k, 0);
  for (const auto& [beta, mult] : q.factors) {
    auto j = beta.primary_index();
    if (j < 0) throw InvariantError("denominator factor (1 - " + monomial_string(beta) + ") has more than one variable");
    auto jj = static_cast<std::size_t>(j);
    if (mult != 1 || sys.periods_[jj] != 0)
      throw InvariantError("denominator has several factors in " + variable_name(jj, k));
    sys.periods_[jj] = beta[jj];
  }
  if (p.size() > limits.max_terms)
    throw ResourceLimit("numerator has " + std::to_string(p.size()) + " terms, above the limit");
  for (const auto& [e, c] : display_terms(p)) {
    if (c > INT64_MAX || c < INT64_MIN) throw ResourceLimit("numerator coefficient too large");
    Int mu = static_cast<Int>(c);
    if (q.empty() && mu != 1)
      throw InvariantError("finite set with coefficient " + std::to_string(mu) + " at " + to_string(e));
    sys.terms_.push_back({mu, e});
  }

  // Realized classes: intersect the per-coordinate local patterns.
  const std::size_t m = sys.terms_.size();
  std::set<ClassPattern> partial{ClassPattern(m).set()};
  auto axes = sys.axes();
  for (std::size_t j = 0; j < k; ++j) {
    std::set<ClassPattern> locals;
    for (Int s = 0; s < axes[j].size(); ++s) locals.insert(sys.local_pattern(j, axes[j], s));
    std::set<ClassPattern> next;
    for (const auto& a : partial)
      for (const auto& b : locals) {
        next.insert(a & b);
        if (next.size() > limits.max_classes) throw ResourceLimit("too many membership classes");
      }
    partial = std::move(next);
  }
  for (const auto& h : partial) {
    Int s = sys.coefficient_sum(h);
    if (s != 0 && s != 1)
      throw InvariantError("membership class " + to_string(h) + " has coefficient sum " + std::to_string(s));
    sys.realized_.push_back(h);
    if (s == 1) sys.good_.push_back(h);
  }
  std::sort(sys.realized_.begin(), sys.realized_.end(), class_before);
  std::sort(sys.good_.begin(), sys.good_.end(), class_before);
  return sys;
}

bool class_nonempty(const ResimpleSystem& system, const ClassPattern& h) {
  const auto& r = system.realized_classes();
  return std::find(r.begin(), r.end(), h) != r.end();
}

bool member_system(const NatVector& sigma, const ResimpleSystem& system) {
  return system.coefficient_sum(system.pattern_of(sigma)) == 1;
}

ClassPattern make_pattern(std::size_t m, const std::vector<std::size_t>& members) {
  ClassPattern h(m);
  for (auto i : members) h.set(i);
  return h;
}

std::string to_string(const ClassPattern& h) {
  std::string s = "{";
  bool first = true;
  for (auto i = h.find_first(); i != ClassPattern::npos; i = h.find_next(i)) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::string to_string(const ResimpleSystem& system) {
  const std::size_t k = system.dimension();
  std::string s = "periods:";
  bool any = false;
  for (std::size_t j = 0; j < k; ++j)
    if (system.periods()[j] > 0) {
      s += " " + variable_name(j, k) + "=" + std::to_string(system.periods()[j]);
      any = true;
    }
  if (!any) s += " none";
  s += "\n";
  for (std::size_t h = 0; h < system.terms().size(); ++h) {
    const auto& t = system.terms()[h];
    s += "S" + std::to_string(h + 1) + ": " + (t.mu < 0 ? "-" : "+") + std::to_string(t.mu < 0 ? -t.mu : t.mu) + " " +
         to_string(t.offset) + "\n";
  }
  s += "good classes:";
  if (system.good_classes().empty()) s += " none";
  for (const auto& h : system.good_classes()) s += " " + to_string(h);
  return s + "\n";
}

}  // namespace cclosure
