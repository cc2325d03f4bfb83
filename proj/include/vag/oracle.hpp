#pragma once

#include "vag/group.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace vag {

/// Every element of weight at most N with its exact weight.
struct Ball {
  std::int64_t max_weight = 0;
  std::unordered_map<GroupElement, std::int64_t, GroupElementHash> weight;
  /// Elements in the order they were finalized (nondecreasing weight).
  std::vector<GroupElement> order;
};

Ball ball(const VAGroup &g, const WeightedGenSet &gens, std::int64_t n);

enum class OracleMode { Standard, Relative, Coset, Conjugacy };

using CosetKey = std::vector<std::pair<IntVec, std::size_t>>;

/// Canonical key of the right coset H x.
CosetKey coset_key(const VAGroup &g, const SubgroupResolved &h,
                   const GroupElement &x);

/// Canonical key of the conjugacy class of x. For x centralizing Z^n the
/// class is finite and listed elementwise; otherwise it is a union of cosets
/// of the commutator lattices, listed by reduced representatives.
struct ClassKey {
  bool finite = true;
  std::vector<GroupElement> elements;
  bool operator==(const ClassKey &o) const = default;
  bool operator<(const ClassKey &o) const {
    if (finite != o.finite)
      return finite < o.finite;
    return elements < o.elements;
  }
};

ClassKey class_key(const VAGroup &g, const GroupElement &x);

/// c_0..c_N for the chosen mode. Relative and coset modes need h.
std::vector<Int> oracle_counts(const VAGroup &g, const WeightedGenSet &gens,
                               OracleMode mode, const SubgroupResolved *h,
                               std::int64_t n);
std::vector<Int> oracle_counts(const Ball &b, const VAGroup &g, OracleMode mode,
                               const SubgroupResolved *h);

} // namespace vag
