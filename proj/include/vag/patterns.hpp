#pragma once

#include "vag/group.hpp"

#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

namespace vag {

/// Exact element weights over a generating set, computed lazily by
/// best-first search from the identity.
class WeightTable {
public:
  WeightTable(const VAGroup &g, const WeightedGenSet &gens);

  /// Weight of x; expands the search until x is settled.
  std::int64_t weight(const GroupElement &x);
  /// Settles every element of weight at most n.
  void expand_to(std::int64_t n);
  /// Settled elements with their weights.
  const std::unordered_map<GroupElement, std::int64_t, GroupElementHash> &
  settled() const {
    return done_;
  }

private:
  bool step();

  const VAGroup &g_;
  WeightedGenSet gens_;
  using Item = std::pair<std::int64_t, GroupElement>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq_;
  std::unordered_map<GroupElement, std::int64_t, GroupElementHash> done_;
  std::int64_t frontier_ = 0;
};

struct XLetter {
  IntVec vec;
  std::int64_t weight = 1;
  std::string name;
};

struct YLetter {
  GroupElement element;
  std::int64_t weight = 1;
  std::string name;
};

/// The extended generating set split into letters inside Z^n (X) and
/// outside it (Y).
struct ExtendedGenSet {
  std::vector<XLetter> xgens;
  std::vector<YLetter> ygens;
  std::size_t d = 0;
};

/// All products of 1..d generators, merged by element, without the
/// identity. Weights are exact element weights. Letters appear in order of
/// weight, ties in order of discovery.
ExtendedGenSet extend_genset(const VAGroup &g, const WeightedGenSet &gens,
                             std::size_t d);

/// Drops X letters that are products of lighter X letters of the same total
/// weight, and Y letters that equal u*y*v for another Y letter y and X-words
/// u, v of the same total weight. Every word over the input set rewrites to a
/// word over the result with the same weight and pattern length.
ExtendedGenSet reduce_genset(const VAGroup &g, const ExtendedGenSet &e);

/// A formal word in the Y letters (indices into ygens).
using Pattern = std::vector<std::size_t>;

/// All patterns of length 0..d, shortest first, then lexicographic.
std::vector<Pattern> enumerate_patterns(const ExtendedGenSet &e, std::size_t d);

std::string pattern_name(const ExtendedGenSet &e, const Pattern &p);

/// Linear data of the words x_0 y_1 x_1 ... y_k x_k with pattern y_1..y_k,
/// where each block x_j is a vector of exponents over the X letters.
struct PatternConstants {
  std::size_t m = 0;
  /// A[i] . w + B[i] is coordinate i of the word's Z^n part.
  std::vector<IntVec> A;
  IntVec B;
  std::size_t t_pi = 0;
  /// Aw . w + Bw is the word's weight.
  std::vector<std::int64_t> Aw;
  std::int64_t Bw = 0;
  /// conjA[t][i] . w + conjB[t][i] is coordinate i of t * word * t^-1.
  std::vector<std::vector<IntVec>> conjA;
  std::vector<IntVec> conjB;
  std::vector<std::size_t> conj_coset;
  /// The element the pattern itself represents.
  GroupElement element;
};

PatternConstants pattern_constants(const VAGroup &g, const ExtendedGenSet &e,
                                   const Pattern &p);

GroupElement eval_word(const PatternConstants &pc, const IntVec &w);
Int word_weight(const PatternConstants &pc, const IntVec &w);

/// The word spelled out letter by letter and multiplied in G.
GroupElement fold_word(const VAGroup &g, const ExtendedGenSet &e,
                       const Pattern &p, const IntVec &w);

} // namespace vag
