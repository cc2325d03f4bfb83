#pragma once

#include "vag/linalg.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vag {

/// An element a*t of G in standard form: a in Z^n, t a transversal index.
struct GroupElement {
  IntVec vec;
  std::size_t coset = 0;

  bool operator==(const GroupElement &o) const = default;
  bool operator<(const GroupElement &o) const {
    if (coset != o.coset)
      return coset < o.coset;
    return vec < o.vec;
  }
  std::string str() const;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement &g) const;
};

/// Finite-index data of G over a normal subgroup Z^n with transversal T.
struct VAGroupData {
  std::size_t n = 0, d = 1;
  std::vector<IntMat> delta;                 // delta[t] has columns t e_i t^-1
  std::vector<std::vector<std::size_t>> tau; // s t = cocycle[s][t] * tau[s][t]
  std::vector<std::vector<IntVec>> cocycle;
};

struct Generator {
  GroupElement element;
  std::int64_t weight = 1;
  std::string name;
};

using WeightedGenSet = std::vector<Generator>;

/// Checks every structural identity of the data and that the generators
/// generate G as a group and (up to the given search bound) as a monoid.
/// A bound of 0 selects 4 * (largest generator weight). Returns one
/// message per violation; empty means valid.
std::vector<std::string> validate(const VAGroupData &data,
                                  const WeightedGenSet &gens,
                                  std::int64_t monoid_bound = 0);

/// Checks only the group-data identities (no generators).
std::vector<std::string> validate_data(const VAGroupData &data);

class VAGroup {
public:
  /// Throws std::invalid_argument if the data identities fail.
  explicit VAGroup(VAGroupData data);

  const VAGroupData &data() const { return data_; }
  std::size_t rank() const { return data_.n; }
  std::size_t index() const { return data_.d; }

  GroupElement identity() const;
  GroupElement from_vec(IntVec a) const { return {std::move(a), 0}; }
  GroupElement from_coset(std::size_t t) const;

  GroupElement mul(const GroupElement &g, const GroupElement &h) const;
  GroupElement inv(const GroupElement &g) const;
  /// t g t^-1 with t the transversal element of index t.
  GroupElement conj(std::size_t t, const GroupElement &g) const;
  /// Transversal index t' with tau(t, t') = 0.
  std::size_t coset_inverse(std::size_t t) const { return cinv_[t]; }

  bool centralizes_Zn(std::size_t t) const;
  /// F(gamma): lattice spanned by the commutators [e_i, gamma].
  Lattice commutator_lattice(const GroupElement &gamma) const;

private:
  VAGroupData data_;
  std::vector<std::size_t> cinv_;
};

/// Coset representatives of a subgroup H over H cap Z^n and a basis of
/// H cap Z^n.
struct SubgroupResolved {
  std::size_t c = 1;
  std::vector<GroupElement> reps;
  Lattice lattice;
};

SubgroupResolved resolve_subgroup(const VAGroup &g,
                                  const std::vector<GroupElement> &gens);
bool subgroup_member(const VAGroup &g, const SubgroupResolved &h,
                     const GroupElement &x);

} // namespace vag
