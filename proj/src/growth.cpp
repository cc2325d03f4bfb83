#include "vag/growth.hpp"

#include <algorithm>
#include <stdexcept>

namespace vag {

namespace {

// Linear forms over a product space, written block by block.
struct Form {
  IntVec u;
  explicit Form(std::size_t dim) : u(dim, Int(0)) {}
  Form &add(std::size_t off, const IntVec &v, const Int &scale = 1) {
    for (std::size_t i = 0; i < v.size(); ++i)
      u[off + i] += scale * v[i];
    return *this;
  }
  Form &add(std::size_t off, const std::vector<std::int64_t> &v,
            const Int &scale = 1) {
    for (std::size_t i = 0; i < v.size(); ++i)
      u[off + i] += scale * Int(v[i]);
    return *this;
  }
  Form &at(std::size_t i, const Int &c) {
    u[i] += c;
    return *this;
  }
};

void add_nonneg(BasicSet &b, std::size_t off, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    b.add(Constraint::ge(unit_vec(b.dim(), off + i), 0));
}

PresburgerSet place(const PresburgerSet &s, std::size_t off, std::size_t dim) {
  return s.insert_dims(0, off).insert_dims(off + s.dim(), dim - off - s.dim());
}

std::vector<bool> mask_range(std::size_t dim, std::size_t lo, std::size_t hi) {
  std::vector<bool> m(dim, false);
  for (std::size_t i = lo; i < hi; ++i)
    m[i] = true;
  return m;
}

PresburgerSet finish(PresburgerSet s) {
  s.simplify();
  s.set_positive(true);
  return s;
}

SeriesPrefix shifted_add(SeriesPrefix acc, const SeriesPrefix &c,
                         std::int64_t shift) {
  for (std::size_t i = 0; i < c.size(); ++i)
    acc[i + shift] += c[i];
  return acc;
}

} // namespace

GrowthEngine::GrowthEngine(const VAGroup &g, const WeightedGenSet &gens,
                           GrowthOptions opt)
    : g_(g), gens_(gens), opt_(opt) {
  if (opt_.max_weight < 0)
    throw std::invalid_argument("max weight must be nonnegative");
  if (opt_.guard < 1)
    throw std::invalid_argument("guard must be at least 1");
  e_ = extend_genset(g, gens, g.index());
  if (opt_.reduce)
    e_ = reduce_genset(g, e_);
  pats_ = enumerate_patterns(e_, e_.d);
  by_coset_.resize(g.index());
  for (std::size_t k = 0; k < pats_.size(); ++k) {
    pcs_.push_back(pattern_constants(g, e_, pats_[k]));
    by_coset_[pcs_.back().t_pi].push_back(k);
  }
}

PresburgerSet GrowthEngine::minimal_coset_reps(const Lattice &f,
                                               std::size_t k) const {
  const PatternConstants &pc = pcs_[k];
  const std::size_t m = pc.m, r = f.rank(), dim = 2 * m + r;
  // Coordinates: the word w, a competing word v, lattice coefficients.
  BasicSet base(dim);
  add_nonneg(base, 0, 2 * m);
  for (std::size_t i = 0; i < g_.rank(); ++i) {
    Form e(dim);
    e.add(0, pc.A[i]).add(m, pc.A[i], -1);
    for (std::size_t l = 0; l < r; ++l)
      e.at(2 * m + l, -f.basis()[l][i]);
    base.add(Constraint::eq(e.u, 0));
  }
  // v < w: weight first, then coordinates in index order.
  std::vector<Form> order;
  order.push_back(Form(dim).add(0, pc.Aw).add(m, pc.Aw, -1));
  for (std::size_t i = 0; i < m; ++i)
    order.push_back(Form(dim).at(i, 1).at(m + i, -1));
  PresburgerSet smaller(dim);
  for (std::size_t p = 0; p < order.size(); ++p) {
    BasicSet b = base;
    for (std::size_t q = 0; q < p; ++q)
      b.add(Constraint::eq(order[q].u, 0));
    b.add(Constraint::gt(order[p].u, 0));
    smaller.add_disjunct(std::move(b));
  }
  PresburgerSet beaten = smaller.project_out(mask_range(dim, m, dim));
  return finish(PresburgerSet::orthant(m).subtract(beaten));
}

RepSetFamily GrowthEngine::cross_pattern_prune(const Lattice &f,
                                               const std::vector<PresburgerSet> &v,
                                               std::size_t coset) const {
  RepSetFamily out;
  for (std::size_t k = 0; k < pats_.size(); ++k)
    out.sets.push_back(PresburgerSet::empty(pcs_[k].m));
  const std::size_t r = f.rank();
  for (std::size_t k : by_coset_[coset]) {
    const PatternConstants &pk = pcs_[k];
    PresburgerSet u = v[k];
    for (std::size_t j : by_coset_[coset]) {
      if (j == k || u.is_empty())
        continue;
      const PatternConstants &pj = pcs_[j];
      const std::size_t dim = pk.m + pj.m + r;
      BasicSet b(dim);
      add_nonneg(b, 0, pk.m + pj.m);
      for (std::size_t i = 0; i < g_.rank(); ++i) {
        Form e(dim);
        e.add(pk.m, pj.A[i]).add(0, pk.A[i], -1);
        for (std::size_t l = 0; l < r; ++l)
          e.at(pk.m + pj.m + l, -f.basis()[l][i]);
        b.add(Constraint::eq(e.u, pk.B[i] - pj.B[i]));
      }
      // weight(w) - weight(v) > 0, or >= 0 when pattern j comes first.
      Form wd(dim);
      wd.add(0, pk.Aw).add(pk.m, pj.Aw, -1);
      Int rhs = Int(pj.Bw - pk.Bw) - (j < k ? 1 : 0);
      b.add(Constraint::gt(wd.u, rhs));
      PresburgerSet beaten = PresburgerSet::from_basic(std::move(b))
                                 .project_out(mask_range(dim, pk.m, dim));
      u = u.subtract(beaten);
      u.simplify();
    }
    out.sets[k] = finish(std::move(u));
  }
  return out;
}

const RepSetFamily &GrowthEngine::family(const Lattice &f,
                                         const std::vector<std::size_t> &cosets) {
  std::vector<std::size_t> cs = cosets;
  if (cs.empty())
    for (std::size_t t = 0; t < g_.index(); ++t)
      cs.push_back(t);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  auto key = std::make_pair(f.basis(), cs);
  auto it = families_.find(key);
  if (it != families_.end())
    return *it->second;

  auto fam = std::make_unique<RepSetFamily>();
  for (std::size_t k = 0; k < pats_.size(); ++k)
    fam->sets.push_back(PresburgerSet::empty(pcs_[k].m));
  for (std::size_t t : cs) {
    std::vector<PresburgerSet> v;
    for (std::size_t k = 0; k < pats_.size(); ++k)
      v.push_back(pcs_[k].t_pi == t ? minimal_coset_reps(f, k)
                                    : PresburgerSet::empty(pcs_[k].m));
    RepSetFamily part = cross_pattern_prune(f, v, t);
    for (std::size_t k : by_coset_[t])
      fam->sets[k] = std::move(part.sets[k]);
  }
  return *families_.emplace(key, std::move(fam)).first->second;
}

std::vector<PresburgerSet>
GrowthEngine::select_minimal_from_tuples(const TupleSet &t) const {
  const std::size_t nb = t.blocks.size();
  std::vector<std::size_t> off(nb + 1, 0);
  for (std::size_t j = 0; j < nb; ++j)
    off[j + 1] = off[j] + pcs_[t.blocks[j]].m;
  const std::size_t dim = off[nb];
  if (t.set.dim() != dim)
    throw std::invalid_argument("tuple set dimension does not match its blocks");

  // Component k beats component j: lighter, or equally heavy with a smaller
  // pattern index, or same pattern and lexicographically smaller. With
  // `or_equal` an identical component also counts.
  auto beats = [&](std::size_t k, std::size_t j, bool or_equal) {
    const std::size_t pk = t.blocks[k], pj = t.blocks[j];
    const PatternConstants &ck = pcs_[pk], &cj = pcs_[pj];
    Form wd(dim);
    wd.add(off[j], cj.Aw).add(off[k], ck.Aw, -1);
    Int rhs = Int(ck.Bw - cj.Bw);
    PresburgerSet s(dim);
    s.add_disjunct(BasicSet(dim, {Constraint::gt(wd.u, rhs)}));
    if (pk < pj) {
      s.add_disjunct(BasicSet(dim, {Constraint::eq(wd.u, rhs)}));
    } else if (pk == pj) {
      const std::size_t m = ck.m;
      for (std::size_t p = 0; p <= m; ++p) {
        if (p == m && !or_equal)
          break;
        BasicSet b(dim, {Constraint::eq(wd.u, rhs)});
        for (std::size_t q = 0; q < p; ++q)
          b.add(Constraint::eq(Form(dim).at(off[j] + q, 1).at(off[k] + q, -1).u, 0));
        if (p < m)
          b.add(Constraint::gt(Form(dim).at(off[j] + p, 1).at(off[k] + p, -1).u, 0));
        s.add_disjunct(std::move(b));
      }
    }
    return s;
  };

  std::vector<PresburgerSet> out;
  for (std::size_t k = 0; k < nb; ++k) {
    PresburgerSet s = t.set;
    for (std::size_t j = 0; j < nb && !s.is_empty(); ++j) {
      if (j == k)
        continue;
      s = s.intersect(beats(k, j, j > k));
      s.simplify();
    }
    std::vector<bool> mask(dim, true);
    for (std::size_t i = off[k]; i < off[k + 1]; ++i)
      mask[i] = false;
    out.push_back(finish(s.project_out(mask)));
  }
  return out;
}

PresburgerSet GrowthEngine::membership_set(const SubgroupResolved &h,
                                           std::size_t k) const {
  const PatternConstants &pc = pcs_[k];
  const GroupElement *rep = nullptr;
  for (const GroupElement &x : h.reps)
    if (x.coset == pc.t_pi)
      rep = &x;
  if (!rep)
    return finish(PresburgerSet::empty(pc.m));
  const std::size_t r = h.lattice.rank(), dim = pc.m + r;
  // A w + B - rep = sum mu_l b_l
  BasicSet b(dim);
  add_nonneg(b, 0, pc.m);
  for (std::size_t i = 0; i < g_.rank(); ++i) {
    Form e(dim);
    e.add(0, pc.A[i]);
    for (std::size_t l = 0; l < r; ++l)
      e.at(pc.m + l, -h.lattice.basis()[l][i]);
    b.add(Constraint::eq(e.u, rep->vec[i] - pc.B[i]));
  }
  return finish(PresburgerSet::from_basic(std::move(b))
                    .project_out(mask_range(dim, pc.m, dim)));
}

namespace {

// Calls f on every tuple of pattern indices with entry j drawn from
// choices[j].
void each_tuple(const std::vector<std::vector<std::size_t>> &choices,
                const std::function<void(const std::vector<std::size_t> &)> &f) {
  std::vector<std::size_t> cur(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == choices.size()) {
      f(cur);
      return;
    }
    for (std::size_t x : choices[j]) {
      cur[j] = x;
      rec(j + 1);
    }
  };
  rec(0);
}

} // namespace

std::vector<TupleSet> GrowthEngine::coset_tuples(const SubgroupResolved &h) {
  const Lattice &f = h.lattice;
  const RepSetFamily &fam = family(f);
  const std::size_t c = h.c, r = f.rank(), n = g_.rank();
  const VAGroupData &data = g_.data();
  std::vector<TupleSet> out;
  for (std::size_t t = 0; t < g_.index(); ++t) {
    // Component j is a word for the F-coset of h_j g with g = (x, t).
    std::vector<std::vector<std::size_t>> choices(c);
    for (std::size_t j = 0; j < c; ++j)
      choices[j] = by_coset_[data.tau[h.reps[j].coset][t]];
    each_tuple(choices, [&](const std::vector<std::size_t> &pi) {
      std::vector<std::size_t> off(c + 1, 0);
      for (std::size_t j = 0; j < c; ++j) {
        if (fam.sets[pi[j]].is_empty())
          return;
        off[j + 1] = off[j] + pcs_[pi[j]].m;
      }
      const std::size_t words = off[c], dim = words + c * r + n;
      const std::size_t lam = words, gx = words + c * r;
      BasicSet b(dim);
      add_nonneg(b, 0, words);
      for (std::size_t j = 0; j < c; ++j) {
        const PatternConstants &pc = pcs_[pi[j]];
        const GroupElement &hj = h.reps[j];
        const IntMat &dj = data.delta[hj.coset];
        const IntVec &x = data.cocycle[hj.coset][t];
        for (std::size_t i = 0; i < n; ++i) {
          Form e(dim);
          e.add(off[j], pc.A[i]);
          for (std::size_t l = 0; l < r; ++l)
            e.at(lam + j * r + l, -f.basis()[l][i]);
          for (std::size_t q = 0; q < n; ++q)
            e.at(gx + q, -dj.at(i, q));
          b.add(Constraint::eq(e.u, hj.vec[i] + x[i] - pc.B[i]));
        }
      }
      PresburgerSet s = PresburgerSet::from_basic(std::move(b))
                            .project_out(mask_range(dim, words, dim));
      for (std::size_t j = 0; j < c && !s.is_empty(); ++j) {
        s = s.intersect(place(fam.sets[pi[j]], off[j], words));
        s.simplify();
      }
      if (!s.is_empty())
        out.push_back({pi, finish(std::move(s))});
    });
  }
  return out;
}

std::vector<TupleSet> GrowthEngine::conjugacy_tuples() {
  if (conj_tuples_)
    return *conj_tuples_;
  const std::size_t d = g_.index(), n = g_.rank();
  std::vector<Lattice> fl;
  std::vector<const RepSetFamily *> fams;
  for (std::size_t t = 0; t < d; ++t) {
    fl.push_back(g_.commutator_lattice(g_.from_coset(t)));
    fams.push_back(&family(fl.back(), {t}));
  }
  const VAGroupData &data = g_.data();
  auto out = std::make_unique<std::vector<TupleSet>>();
  for (std::size_t p1 = 0; p1 < pats_.size(); ++p1) {
    const PatternConstants &c1 = pcs_[p1];
    // Component j is a word for the Z^n-class of t_j g t_j^-1.
    std::vector<std::vector<std::size_t>> choices(d);
    choices[0] = {p1};
    for (std::size_t j = 1; j < d; ++j)
      choices[j] = by_coset_[c1.conj_coset[j]];
    each_tuple(choices, [&](const std::vector<std::size_t> &pi) {
      // Starting from another member of the class permutes the components
      // by j -> tau(j, k); keep the lexicographically least arrangement.
      for (std::size_t k = 1; k < d; ++k) {
        std::vector<std::size_t> moved(d);
        for (std::size_t j = 0; j < d; ++j)
          moved[j] = pi[data.tau[j][k]];
        if (moved < pi)
          return;
      }
      std::vector<std::size_t> off(d + 1, 0), loff(d + 1, 0);
      for (std::size_t j = 0; j < d; ++j) {
        const PatternConstants &pc = pcs_[pi[j]];
        if (fams[pc.t_pi]->sets[pi[j]].is_empty())
          return;
        off[j + 1] = off[j] + pc.m;
        loff[j + 1] = loff[j] + (j == 0 ? 0 : fl[pc.t_pi].rank());
      }
      const std::size_t words = off[d], dim = words + loff[d];
      BasicSet b(dim);
      add_nonneg(b, 0, words);
      for (std::size_t j = 1; j < d; ++j) {
        const PatternConstants &pc = pcs_[pi[j]];
        const Lattice &lj = fl[pc.t_pi];
        for (std::size_t i = 0; i < n; ++i) {
          Form e(dim);
          e.add(off[j], pc.A[i]).add(0, c1.conjA[j][i], -1);
          for (std::size_t l = 0; l < lj.rank(); ++l)
            e.at(words + loff[j] + l, -lj.basis()[l][i]);
          b.add(Constraint::eq(e.u, c1.conjB[j][i] - pc.B[i]));
        }
      }
      PresburgerSet s = PresburgerSet::from_basic(std::move(b))
                            .project_out(mask_range(dim, words, dim));
      for (std::size_t j = 0; j < d && !s.is_empty(); ++j) {
        const PatternConstants &pc = pcs_[pi[j]];
        s = s.intersect(place(fams[pc.t_pi]->sets[pi[j]], off[j], words));
        s.simplify();
      }
      if (!s.is_empty())
        out->push_back({pi, finish(std::move(s))});
    });
  }
  conj_tuples_ = std::move(out);
  return *conj_tuples_;
}

SeriesPrefix GrowthEngine::count_family(const RepSetFamily &fam,
                                        std::int64_t n) const {
  SeriesPrefix acc(n + 1, Int(0));
  for (std::size_t k = 0; k < fam.sets.size(); ++k) {
    const PatternConstants &pc = pcs_[k];
    if (fam.sets[k].disjuncts().empty() || pc.Bw > n)
      continue;
    acc = shifted_add(std::move(acc),
                      count_by_weight(fam.sets[k], pc.Aw, n - pc.Bw), pc.Bw);
  }
  return acc;
}

SeriesPrefix GrowthEngine::count_selected(const std::vector<TupleSet> &tuples,
                                          std::int64_t n) const {
  RepSetFamily fam;
  for (std::size_t k = 0; k < pats_.size(); ++k)
    fam.sets.push_back(PresburgerSet::empty(pcs_[k].m));
  for (const TupleSet &t : tuples) {
    std::vector<PresburgerSet> sel = select_minimal_from_tuples(t);
    for (std::size_t j = 0; j < sel.size(); ++j)
      fam.sets[t.blocks[j]] = fam.sets[t.blocks[j]].unite(sel[j]);
  }
  for (PresburgerSet &s : fam.sets)
    s = finish(std::move(s));
  return count_family(fam, n);
}

SeriesPrefix GrowthEngine::standard_counts(std::int64_t n) {
  return count_family(family(Lattice(g_.rank())), n);
}

SeriesPrefix
GrowthEngine::relative_counts(const std::vector<const SubgroupResolved *> &hs,
                              std::int64_t n) {
  const RepSetFamily &fam = family(Lattice(g_.rank()));
  RepSetFamily sub;
  for (std::size_t k = 0; k < pats_.size(); ++k) {
    PresburgerSet s = fam.sets[k];
    for (const SubgroupResolved *h : hs) {
      if (s.is_empty())
        break;
      s = s.intersect(membership_set(*h, k));
    }
    sub.sets.push_back(finish(std::move(s)));
  }
  return count_family(sub, n);
}

SeriesPrefix GrowthEngine::coset_counts(const SubgroupResolved &h,
                                        std::int64_t n) {
  return count_selected(coset_tuples(h), n);
}

SeriesPrefix GrowthEngine::conjugacy_counts(std::int64_t n) {
  return count_selected(conjugacy_tuples(), n);
}

SeriesResult
GrowthEngine::fit(const std::function<SeriesPrefix(std::int64_t)> &count) {
  const std::int64_t n = opt_.max_weight;
  for (std::size_t d = 4;; d *= 2) {
    std::size_t dd = std::min(d, opt_.max_den_degree);
    std::int64_t len = std::max<std::int64_t>(
        n + 1, static_cast<std::int64_t>(prefix_length_for(dd, opt_.guard)));
    SeriesPrefix c = count(len - 1);
    try {
      RationalFunction f = reconstruct(c, opt_.guard, dd);
      c.resize(n + 1);
      return {f, c};
    } catch (const InsufficientData &) {
      if (dd >= opt_.max_den_degree)
        throw;
    }
  }
}

SeriesResult GrowthEngine::standard_series() {
  return fit([&](std::int64_t n) { return standard_counts(n); });
}

SeriesResult GrowthEngine::relative_series(const SubgroupResolved &h) {
  return fit([&](std::int64_t n) { return relative_counts({&h}, n); });
}

SeriesResult
GrowthEngine::relative_series_union(const std::vector<SubgroupResolved> &hs) {
  if (hs.empty())
    throw std::invalid_argument("relative_series_union needs a subgroup");
  if (hs.size() > 16)
    throw std::invalid_argument("relative_series_union: too many subgroups");
  // Inclusion-exclusion over the nonempty subfamilies; each intersection is
  // the intersection of the membership sets.
  SeriesResult total{RationalFunction::polynomial({Int(0)}),
                     SeriesPrefix(opt_.max_weight + 1, Int(0))};
  for (std::size_t mask = 1; mask < (std::size_t(1) << hs.size()); ++mask) {
    std::vector<const SubgroupResolved *> sel;
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (mask >> i & 1)
        sel.push_back(&hs[i]);
    SeriesResult part = fit([&](std::int64_t n) { return relative_counts(sel, n); });
    bool odd = sel.size() % 2 == 1;
    total.function = odd ? rf_add(total.function, part.function)
                         : rf_sub(total.function, part.function);
    for (std::size_t i = 0; i < total.prefix.size(); ++i)
      total.prefix[i] += odd ? part.prefix[i] : -part.prefix[i];
  }
  return total;
}

SeriesResult GrowthEngine::coset_series(const SubgroupResolved &h) {
  return fit([&](std::int64_t n) { return coset_counts(h, n); });
}

SeriesResult GrowthEngine::conjugacy_series() {
  return fit([&](std::int64_t n) { return conjugacy_counts(n); });
}

} // namespace vag
