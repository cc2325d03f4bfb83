#pragma once

#include "vag/linalg.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vag {

enum class Kind : std::uint8_t { EQ, GT, CONG };

/// One of u.z = a, u.z > a, or u.z == a (mod b).
struct Constraint {
  Kind kind = Kind::EQ;
  IntVec u;
  Int a = 0;
  Int b = 1;

  static Constraint eq(IntVec u, Int a);
  static Constraint gt(IntVec u, Int a);
  static Constraint cong(IntVec u, Int a, Int b);
  /// u.z >= a
  static Constraint ge(IntVec u, const Int &a);
  /// u.z <= a
  static Constraint le(const IntVec &u, const Int &a);

  bool holds(const IntVec &z) const;
  std::string str() const;

  auto operator<=>(const Constraint &o) const {
    if (kind != o.kind)
      return kind <=> o.kind;
    if (auto c = compare_vec(u, o.u); c != 0)
      return c;
    if (a != o.a)
      return a < o.a ? std::strong_ordering::less
                     : std::strong_ordering::greater;
    if (b != o.b)
      return b < o.b ? std::strong_ordering::less
                     : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Constraint &o) const {
    return kind == o.kind && u == o.u && a == o.a && b == o.b;
  }

private:
  static std::strong_ordering compare_vec(const IntVec &x, const IntVec &y);
};

/// Conjunction of constraints; no constraints means all of Z^m.
class BasicSet {
public:
  explicit BasicSet(std::size_t dim = 0) : dim_(dim) {}
  BasicSet(std::size_t dim, std::vector<Constraint> cons);

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint> &constraints() const { return cons_; }
  void add(Constraint c);
  bool holds(const IntVec &z) const;

  /// Canonicalizes constraints in place. Returns false if the set was
  /// detected to be empty.
  bool normalize();

  bool operator==(const BasicSet &o) const = default;
  bool operator<(const BasicSet &o) const { return cons_ < o.cons_; }
  std::string str() const;

private:
  std::size_t dim_;
  std::vector<Constraint> cons_;
};

/// Finite union of basic sets.
class PresburgerSet {
public:
  explicit PresburgerSet(std::size_t dim = 0) : dim_(dim) {}

  static PresburgerSet universe(std::size_t dim);
  static PresburgerSet empty(std::size_t dim);
  static PresburgerSet from_basic(BasicSet b);
  /// All points with nonnegative coordinates; carries the positivity flag.
  static PresburgerSet orthant(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<BasicSet> &disjuncts() const { return parts_; }
  bool positive() const { return positive_; }
  void set_positive(bool p) { positive_ = p; }
  void add_disjunct(BasicSet b);

  bool member(const IntVec &z) const;

  PresburgerSet unite(const PresburgerSet &o) const;
  PresburgerSet intersect(const PresburgerSet &o) const;
  PresburgerSet intersect(const BasicSet &o) const;
  PresburgerSet complement() const;
  PresburgerSet subtract(const PresburgerSet &o) const;

  /// Exists-quantifies coordinate i; the result has dimension dim - 1.
  PresburgerSet eliminate(std::size_t i) const;
  /// Exists-quantifies every coordinate with mask[i] set and removes them.
  PresburgerSet project_out(const std::vector<bool> &mask) const;

  /// {z : A z + q in this}, A is dim x m.
  PresburgerSet affine_preimage(const IntMat &a, const IntVec &q) const;
  /// {A x + q : x in this}, A is m' x dim.
  PresburgerSet affine_image(const IntMat &a, const IntVec &q) const;

  /// Inserts k unconstrained coordinates starting at position pos.
  PresburgerSet insert_dims(std::size_t pos, std::size_t k) const;

  bool is_empty() const;
  /// Drops duplicate, subsumed, and provably empty disjuncts.
  void simplify();

  std::string str() const;

private:
  std::size_t dim_;
  std::vector<BasicSet> parts_;
  bool positive_ = false;
};

PresburgerSet unite(const PresburgerSet &p, const PresburgerSet &q);
PresburgerSet intersect(const PresburgerSet &p, const PresburgerSet &q);
PresburgerSet complement(const PresburgerSet &p);
PresburgerSet eliminate(const PresburgerSet &p, std::size_t i);
PresburgerSet affine_preimage(const PresburgerSet &p, const IntMat &a,
                              const IntVec &q);
PresburgerSet affine_image(const PresburgerSet &p, const IntMat &a,
                           const IntVec &q);
bool is_empty(const PresburgerSet &p);

/// Satisfiability of one conjunction over the integers.
bool is_satisfiable(const BasicSet &b);

/// c_0..c_N with c_k the number of points p of P with w.p = k.
/// P must carry the positivity flag and all weights must be >= 1.
std::vector<Int> count_by_weight(const PresburgerSet &p,
                                 const std::vector<std::int64_t> &w,
                                 std::int64_t max_weight);

/// Calls f on every point p of P with w.p <= max_weight, in lexicographic
/// order. Same preconditions as count_by_weight.
void for_each_point(const PresburgerSet &p,
                    const std::vector<std::int64_t> &w,
                    std::int64_t max_weight,
                    const std::function<void(const IntVec &)> &f);

/// Splits P along the cover X_1..X_k into pairwise disjoint pieces
/// Y_i subset of X_i whose union is P. Throws if P is not covered.
std::vector<PresburgerSet> disjointify(const PresburgerSet &p,
                                       const std::vector<PresburgerSet> &cover);

} // namespace vag
