#pragma once

#include "vag/patterns.hpp"
#include "vag/presburger.hpp"
#include "vag/series.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace vag {

struct GrowthOptions {
  /// Coefficients 0..max_weight are reported.
  std::int64_t max_weight = 12;
  std::size_t guard = 16;
  std::size_t max_den_degree = 64;
  /// Shrink the extended generating set before building patterns.
  bool reduce = true;
};

struct SeriesResult {
  RationalFunction function;
  SeriesPrefix prefix;
};

/// Word sets indexed by pattern: sets[k] lives in N^{m(pattern k)} and the
/// family's series is the sum over k of z^{Aw.w + Bw} over its points.
/// Patterns outside the family carry empty sets.
struct RepSetFamily {
  std::vector<PresburgerSet> sets;
};

/// Words of several patterns side by side: points of `set` are tuples whose
/// block j is a word of pattern blocks[j].
struct TupleSet {
  std::vector<std::size_t> blocks;
  PresburgerSet set;
};

class GrowthEngine {
public:
  GrowthEngine(const VAGroup &g, const WeightedGenSet &gens,
               GrowthOptions opt = {});

  const VAGroup &group() const { return g_; }
  const GrowthOptions &options() const { return opt_; }
  const ExtendedGenSet &genset() const { return e_; }
  const std::vector<Pattern> &patterns() const { return pats_; }
  const PatternConstants &constants(std::size_t k) const { return pcs_[k]; }
  /// Indices of the patterns whose element lies in coset t.
  const std::vector<std::size_t> &patterns_in_coset(std::size_t t) const {
    return by_coset_[t];
  }

  /// Words of pattern k that are least, in the order weight-then-lex,
  /// among the words of pattern k in the same F-coset.
  PresburgerSet minimal_coset_reps(const Lattice &f, std::size_t k) const;

  /// Removes from v[k] every word for which another pattern of the same
  /// Z^n-coset has a word in the same F-coset that is lighter, or equally
  /// heavy with a smaller pattern index. v is indexed like patterns().
  RepSetFamily cross_pattern_prune(const Lattice &f,
                                   const std::vector<PresburgerSet> &v,
                                   std::size_t coset) const;

  /// One word per F-coset of Z^n t, of least weight, for every t in cosets
  /// (all cosets when empty). Cached.
  const RepSetFamily &family(const Lattice &f,
                             const std::vector<std::size_t> &cosets = {});

  /// Per-block selection of the least component under (weight, pattern
  /// index, lexicographic); returns for every position the selected words.
  std::vector<PresburgerSet> select_minimal_from_tuples(const TupleSet &t) const;

  /// Words of pattern k whose element lies in H.
  PresburgerSet membership_set(const SubgroupResolved &h, std::size_t k) const;

  std::vector<TupleSet> coset_tuples(const SubgroupResolved &h);
  std::vector<TupleSet> conjugacy_tuples();

  /// Coefficients 0..n of each series.
  SeriesPrefix standard_counts(std::int64_t n);
  SeriesPrefix relative_counts(const std::vector<const SubgroupResolved *> &hs,
                               std::int64_t n);
  SeriesPrefix coset_counts(const SubgroupResolved &h, std::int64_t n);
  SeriesPrefix conjugacy_counts(std::int64_t n);

  SeriesResult standard_series();
  SeriesResult relative_series(const SubgroupResolved &h);
  SeriesResult relative_series_union(const std::vector<SubgroupResolved> &hs);
  SeriesResult coset_series(const SubgroupResolved &h);
  SeriesResult conjugacy_series();

  /// Counts a family: coefficient of z^j for j = 0..n.
  SeriesPrefix count_family(const RepSetFamily &fam, std::int64_t n) const;
  /// Counts the union of the selected words of the tuple sets.
  SeriesPrefix count_selected(const std::vector<TupleSet> &tuples,
                              std::int64_t n) const;

private:
  SeriesResult fit(const std::function<SeriesPrefix(std::int64_t)> &count);

  const VAGroup &g_;
  WeightedGenSet gens_;
  GrowthOptions opt_;
  ExtendedGenSet e_;
  std::vector<Pattern> pats_;
  std::vector<PatternConstants> pcs_;
  std::vector<std::vector<std::size_t>> by_coset_;
  std::map<std::pair<std::vector<IntVec>, std::vector<std::size_t>>,
           std::unique_ptr<RepSetFamily>>
      families_;
  std::unique_ptr<std::vector<TupleSet>> conj_tuples_;
};

} // namespace vag
