#pragma once

// Regions of N^k cut out by linear inequalities, linear equations and
// congruences. Used to subtract one linear set from another and to split the
// result back into pairwise disjoint linear sets with free bases.

#include <cstddef>
#include <vector>

#include "cclosure/int_math.hpp"
#include "cclosure/linear_set.hpp"
#include "cclosure/nat_vector.hpp"

namespace cclosure {

struct Constraint {
  enum class Kind { Ge, Eq, Mod };

  Kind kind = Kind::Ge;
  IntVector w;
  Int c = 0;
  Int modulus = 0;            // Mod: (w·x + c) mod modulus ∈ residues
  std::vector<Int> residues;  // sorted

  static Constraint ge(IntVector w, Int c) { return {Kind::Ge, std::move(w), c, 0, {}}; }
  static Constraint eq(IntVector w, Int c) { return {Kind::Eq, std::move(w), c, 0, {}}; }
  static Constraint mod(IntVector w, Int c, Int m, std::vector<Int> residues) {
    return {Kind::Mod, std::move(w), c, m, std::move(residues)};
  }

  Int value(const NatVector& x) const;
  bool holds(const NatVector& x) const;

  friend auto operator<=>(const Constraint&, const Constraint&) = default;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct RegionLimits {
  std::size_t max_depth = 64;
  std::size_t max_points = 2'000'000;  // lattice points scanned in bounded parts
  std::size_t max_pieces = 200'000;
  std::size_t max_work = 20'000'000;  // vertex and ray candidates examined
};

// {x ∈ N^k : every constraint holds}
class Region {
 public:
  explicit Region(std::size_t k) : k_(k) {}
  // Exact description of a linear set with a free basis.
  static Region of(const LinearSet& t);

  std::size_t dimension() const { return k_; }
  const std::vector<Constraint>& constraints() const { return cons_; }
  Region& add(Constraint c);
  bool contains(const NatVector& x) const;
  // Brings constraints to a canonical reduced form. Returns false when the
  // region was found to be empty (it may be empty and still return true).
  bool normalize();

 private:
  std::size_t k_;
  std::vector<Constraint> cons_;
  bool empty_ = false;
};

// from \ removed, as pairwise disjoint regions.
std::vector<Region> subtract(const Region& from, const Region& removed);

// Pairwise disjoint linear sets with free bases whose union is the region.
std::vector<LinearSet> decompose(const Region& r, const RegionLimits& limits = {});

// Whether the region contains a point; stops at the first one found.
bool has_point(const Region& r, const RegionLimits& limits = {});

}  // namespace cclosure
