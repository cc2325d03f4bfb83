#include "vag/group.hpp"

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace vag {

std::string GroupElement::str() const {
  return "(" + to_string(vec) + "," + std::to_string(coset) + ")";
}

std::size_t GroupElementHash::operator()(const GroupElement &g) const {
  std::size_t h = std::hash<std::size_t>()(g.coset);
  for (const Int &x : g.vec)
    h = h * 1000003u ^ std::hash<Int>()(x);
  return h;
}

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }
std::string idx(std::size_t a, std::size_t b) {
  return std::to_string(a) + "," + std::to_string(b);
}
std::string idx(std::size_t a, std::size_t b, std::size_t c) {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

// Shape checks; when these fail the identity checks are skipped.
std::vector<std::string> check_shapes(const VAGroupData &g) {
  std::vector<std::string> out;
  if (g.d == 0)
    out.push_back("transversal size must be at least 1");
  if (g.delta.size() != g.d)
    out.push_back("delta: expected " + idx(g.d) + " matrices, got " +
                  idx(g.delta.size()));
  for (std::size_t t = 0; t < g.delta.size(); ++t)
    if (g.delta[t].rows() != g.n || g.delta[t].cols() != g.n)
      out.push_back("delta[" + idx(t) + "]: expected " + idx(g.n) + "x" +
                    idx(g.n) + " matrix");
  if (g.tau.size() != g.d)
    out.push_back("tau: expected " + idx(g.d) + " rows");
  for (std::size_t s = 0; s < g.tau.size(); ++s) {
    if (g.tau[s].size() != g.d)
      out.push_back("tau[" + idx(s) + "]: expected " + idx(g.d) + " entries");
    for (std::size_t t = 0; t < g.tau[s].size(); ++t)
      if (g.tau[s][t] >= g.d)
        out.push_back("tau[" + idx(s, t) + "] = " + idx(g.tau[s][t]) +
                      " is not a transversal index");
  }
  if (g.cocycle.size() != g.d)
    out.push_back("cocycle: expected " + idx(g.d) + " rows");
  for (std::size_t s = 0; s < g.cocycle.size(); ++s) {
    if (g.cocycle[s].size() != g.d)
      out.push_back("cocycle[" + idx(s) + "]: expected " + idx(g.d) +
                    " entries");
    for (std::size_t t = 0; t < g.cocycle[s].size(); ++t)
      if (g.cocycle[s][t].size() != g.n)
        out.push_back("cocycle[" + idx(s, t) + "]: expected a vector of length " +
                      idx(g.n));
  }
  return out;
}

} // namespace

std::vector<std::string> validate_data(const VAGroupData &g) {
  std::vector<std::string> out = check_shapes(g);
  if (!out.empty())
    return out;
  const std::size_t d = g.d;
  if (!(g.delta[0] == IntMat::identity(g.n)))
    out.push_back("delta[0] is not the identity matrix");
  for (std::size_t t = 0; t < d; ++t) {
    if (g.tau[0][t] != t || g.tau[t][0] != t)
      out.push_back("tau: index 0 is not an identity at " + idx(t));
    if (!is_zero(g.cocycle[0][t]) || !is_zero(g.cocycle[t][0]))
      out.push_back("cocycle[0," + idx(t) + "] or cocycle[" + idx(t) +
                    ",0] is nonzero");
    if (abs(g.delta[t].determinant()) != 1)
      out.push_back("delta[" + idx(t) + "] is not unimodular");
    bool has_inverse = false;
    for (std::size_t u = 0; u < d; ++u)
      if (g.tau[t][u] == 0 && g.tau[u][t] == 0)
        has_inverse = true;
    if (!has_inverse)
      out.push_back("tau: index " + idx(t) + " has no inverse");
  }
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      if (!(g.delta[s] * g.delta[t] == g.delta[g.tau[s][t]]))
        out.push_back("multiplication is not associative: delta[" + idx(s) +
                      "] * delta[" + idx(t) +
                      "] != delta[tau[" + idx(s, t) + "]]");
      for (std::size_t u = 0; u < d; ++u) {
        if (g.tau[g.tau[s][t]][u] != g.tau[s][g.tau[t][u]]) {
          out.push_back("tau is not associative at (" + idx(s, t, u) + ")");
          continue;
        }
        IntVec lhs = vec_add(g.cocycle[s][t], g.cocycle[g.tau[s][t]][u]);
        IntVec rhs =
            vec_add(g.delta[s] * g.cocycle[t][u], g.cocycle[s][g.tau[t][u]]);
        if (lhs != rhs)
          out.push_back("multiplication is not associative: cocycle identity "
                      "fails at (" + idx(s, t, u) + ")");
      }
    }
  return out;
}

std::vector<std::string> validate(const VAGroupData &data,
                                  const WeightedGenSet &gens,
                                  std::int64_t monoid_bound) {
  std::vector<std::string> out = validate_data(data);
  if (!out.empty())
    return out;
  std::int64_t max_w = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Generator &s = gens[i];
    std::string where = "generators[" + idx(i) + "]";
    if (s.weight < 1)
      out.push_back(where + ": weight must be a positive integer");
    if (s.element.vec.size() != data.n)
      out.push_back(where + ": vector must have length " + idx(data.n));
    if (s.element.coset >= data.d)
      out.push_back(where + ": coset " + idx(s.element.coset) +
                    " is not a transversal index");
    max_w = std::max(max_w, s.weight);
  }
  if (gens.empty())
    out.push_back("generators: empty generating set");
  if (!out.empty())
    return out;

  VAGroup g(data);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].element == g.identity())
      out.push_back("generators[" + idx(i) + "]: identity element");

  // The quotient must be reached from 0 (monoid BFS over tau).
  std::vector<GroupElement> reps(data.d);
  std::vector<bool> seen(data.d, false);
  std::queue<std::size_t> q;
  seen[0] = true;
  reps[0] = g.identity();
  q.push(0);
  while (!q.empty()) {
    std::size_t t = q.front();
    q.pop();
    for (const Generator &s : gens) {
      GroupElement nx = g.mul(reps[t], s.element);
      if (!seen[nx.coset]) {
        seen[nx.coset] = true;
        reps[nx.coset] = nx;
        q.push(nx.coset);
      }
    }
  }
  for (std::size_t t = 0; t < data.d; ++t)
    if (!seen[t])
      out.push_back("generators do not reach transversal index " + idx(t));
  if (!out.empty())
    return out;

  // Schreier generators of G cap Z^n must span all of Z^n.
  std::vector<IntVec> schreier;
  for (std::size_t t = 0; t < data.d; ++t)
    for (const Generator &s : gens) {
      GroupElement p = g.mul(reps[t], s.element);
      GroupElement k = g.mul(p, g.inv(reps[p.coset]));
      schreier.push_back(k.vec);
    }
  Lattice l = lattice_from_generators(schreier, data.n);
  if (l.rank() != data.n || l.index() != 1)
    out.push_back("generators do not generate Z^" + idx(data.n) +
                  " (Schreier lattice " +
                  (l.rank() != data.n ? "has rank " + idx(l.rank())
                                      : "has index " + l.index().str()) +
                  ")");
  if (!out.empty())
    return out;

  // Monoid generation: every inverse must be a positive word of bounded
  // weight.
  std::int64_t bound = monoid_bound > 0 ? monoid_bound : 4 * max_w;
  std::map<GroupElement, std::int64_t> dist;
  using Item = std::pair<std::int64_t, GroupElement>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0, g.identity()});
  std::set<GroupElement> targets;
  for (const Generator &s : gens)
    targets.insert(g.inv(s.element));
  while (!pq.empty() && !targets.empty()) {
    auto [w, x] = pq.top();
    pq.pop();
    if (dist.count(x))
      continue;
    dist[x] = w;
    targets.erase(x);
    for (const Generator &s : gens) {
      std::int64_t nw = w + s.weight;
      if (nw > bound)
        continue;
      GroupElement y = g.mul(x, s.element);
      if (!dist.count(y))
        pq.push({nw, y});
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (targets.count(g.inv(gens[i].element)))
      out.push_back("generators[" + idx(i) +
                    "]: inverse is not a product of generators of weight <= " +
                    std::to_string(bound));
  return out;
}

VAGroup::VAGroup(VAGroupData data) : data_(std::move(data)) {
  std::vector<std::string> errs = validate_data(data_);
  if (!errs.empty())
    throw std::invalid_argument("invalid group data: " + errs.front());
  cinv_.assign(data_.d, 0);
  for (std::size_t t = 0; t < data_.d; ++t)
    for (std::size_t u = 0; u < data_.d; ++u)
      if (data_.tau[t][u] == 0)
        cinv_[t] = u;
}

GroupElement VAGroup::identity() const { return {zero_vec(data_.n), 0}; }

GroupElement VAGroup::from_coset(std::size_t t) const {
  return {zero_vec(data_.n), t};
}

GroupElement VAGroup::mul(const GroupElement &g, const GroupElement &h) const {
  IntVec v = vec_add(vec_add(g.vec, data_.delta[g.coset] * h.vec),
                     data_.cocycle[g.coset][h.coset]);
  return {std::move(v), data_.tau[g.coset][h.coset]};
}

GroupElement VAGroup::inv(const GroupElement &g) const {
  std::size_t tp = cinv_[g.coset];
  IntVec v = vec_sub(vec_neg(data_.delta[tp] * g.vec), data_.cocycle[tp][g.coset]);
  return {std::move(v), tp};
}

GroupElement VAGroup::conj(std::size_t t, const GroupElement &g) const {
  GroupElement tt = from_coset(t);
  return mul(mul(tt, g), inv(tt));
}

bool VAGroup::centralizes_Zn(std::size_t t) const {
  return data_.delta[t] == IntMat::identity(data_.n);
}

Lattice VAGroup::commutator_lattice(const GroupElement &gamma) const {
  IntMat m = IntMat::identity(data_.n) - data_.delta[gamma.coset];
  std::vector<IntVec> cols;
  for (std::size_t i = 0; i < data_.n; ++i)
    cols.push_back(m.col(i));
  return lattice_from_generators(cols, data_.n);
}

SubgroupResolved resolve_subgroup(const VAGroup &g,
                                  const std::vector<GroupElement> &gens) {
  const std::size_t d = g.index();
  std::vector<GroupElement> all;
  for (const GroupElement &s : gens) {
    if (s.vec.size() != g.rank() || s.coset >= d)
      throw std::invalid_argument("subgroup generator " + s.str() +
                                  " does not match the group");
    all.push_back(s);
  }
  for (const GroupElement &s : gens)
    all.push_back(g.inv(s));

  std::vector<int> rep_of(d, -1);
  SubgroupResolved h;
  h.reps.push_back(g.identity());
  rep_of[0] = 0;
  for (std::size_t i = 0; i < h.reps.size(); ++i)
    for (const GroupElement &s : all) {
      GroupElement nx = g.mul(h.reps[i], s);
      if (rep_of[nx.coset] < 0) {
        rep_of[nx.coset] = static_cast<int>(h.reps.size());
        h.reps.push_back(nx);
      }
    }
  h.c = h.reps.size();
  std::vector<IntVec> schreier;
  for (const GroupElement &r : h.reps)
    for (const GroupElement &s : all) {
      GroupElement p = g.mul(r, s);
      GroupElement k = g.mul(p, g.inv(h.reps[rep_of[p.coset]]));
      schreier.push_back(k.vec);
    }
  h.lattice = lattice_from_generators(schreier, g.rank());
  return h;
}

bool subgroup_member(const VAGroup &g, const SubgroupResolved &h,
                     const GroupElement &x) {
  for (const GroupElement &r : h.reps)
    if (r.coset == x.coset)
      return bool(h.lattice.contains(g.mul(x, g.inv(r)).vec));
  return false;
}

} // namespace vag
