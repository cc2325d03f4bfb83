#include "vag/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace vag {

Ball ball(const VAGroup &g, const WeightedGenSet &gens, std::int64_t n) {
  Ball b;
  b.max_weight = n;
  using Item = std::pair<std::int64_t, GroupElement>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0, g.identity()});
  while (!pq.empty()) {
    auto [w, x] = pq.top();
    pq.pop();
    if (b.weight.count(x))
      continue;
    b.weight.emplace(x, w);
    b.order.push_back(x);
    for (const Generator &s : gens) {
      std::int64_t nw = w + s.weight;
      if (nw > n)
        continue;
      GroupElement y = g.mul(x, s.element);
      if (!b.weight.count(y))
        pq.push({nw, std::move(y)});
    }
  }
  return b;
}

CosetKey coset_key(const VAGroup &g, const SubgroupResolved &h,
                   const GroupElement &x) {
  CosetKey key;
  for (const GroupElement &r : h.reps) {
    GroupElement y = g.mul(r, x);
    key.emplace_back(h.lattice.reduce(y.vec), y.coset);
  }
  std::sort(key.begin(), key.end());
  return key;
}

ClassKey class_key(const VAGroup &g, const GroupElement &x) {
  ClassKey key;
  key.finite = g.centralizes_Zn(x.coset);
  for (std::size_t t = 0; t < g.index(); ++t) {
    GroupElement c = g.conj(t, x);
    if (!key.finite)
      c.vec = g.commutator_lattice(c).reduce(c.vec);
    key.elements.push_back(std::move(c));
  }
  std::sort(key.elements.begin(), key.elements.end());
  key.elements.erase(std::unique(key.elements.begin(), key.elements.end()),
                     key.elements.end());
  return key;
}

namespace {

template <typename Key, typename F>
std::vector<Int> count_keys(const Ball &b, F &&key_of) {
  std::map<Key, std::int64_t> best;
  for (const GroupElement &x : b.order) {
    std::int64_t w = b.weight.at(x);
    Key k = key_of(x);
    auto it = best.find(k);
    if (it == best.end() || it->second > w)
      best[k] = w;
  }
  std::vector<Int> c(b.max_weight + 1, Int(0));
  for (const auto &[k, w] : best)
    ++c[w];
  return c;
}

} // namespace

std::vector<Int> oracle_counts(const Ball &b, const VAGroup &g, OracleMode mode,
                               const SubgroupResolved *h) {
  if ((mode == OracleMode::Relative || mode == OracleMode::Coset) && !h)
    throw std::invalid_argument("oracle: this mode needs a subgroup");
  std::vector<Int> c(b.max_weight + 1, Int(0));
  switch (mode) {
  case OracleMode::Standard:
    for (const auto &[x, w] : b.weight)
      ++c[w];
    return c;
  case OracleMode::Relative:
    for (const auto &[x, w] : b.weight)
      if (subgroup_member(g, *h, x))
        ++c[w];
    return c;
  case OracleMode::Coset:
    return count_keys<CosetKey>(
        b, [&](const GroupElement &x) { return coset_key(g, *h, x); });
  case OracleMode::Conjugacy:
    return count_keys<ClassKey>(
        b, [&](const GroupElement &x) { return class_key(g, x); });
  }
  return c;
}

std::vector<Int> oracle_counts(const VAGroup &g, const WeightedGenSet &gens,
                               OracleMode mode, const SubgroupResolved *h,
                               std::int64_t n) {
  return oracle_counts(ball(g, gens, n), g, mode, h);
}

} // namespace vag
