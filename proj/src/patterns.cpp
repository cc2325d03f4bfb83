#include "vag/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace vag {

WeightTable::WeightTable(const VAGroup &g, const WeightedGenSet &gens)
    : g_(g), gens_(gens) {
  pq_.push({0, g.identity()});
}

bool WeightTable::step() {
  while (!pq_.empty()) {
    auto [w, x] = pq_.top();
    pq_.pop();
    if (done_.count(x))
      continue;
    frontier_ = w;
    for (const Generator &s : gens_) {
      GroupElement y = g_.mul(x, s.element);
      if (!done_.count(y))
        pq_.push({w + s.weight, std::move(y)});
    }
    done_.emplace(std::move(x), w);
    return true;
  }
  return false;
}

std::int64_t WeightTable::weight(const GroupElement &x) {
  for (;;) {
    auto it = done_.find(x);
    if (it != done_.end())
      return it->second;
    if (!step())
      throw std::runtime_error("element " + x.str() +
                               " is not reachable from the generators");
  }
}

void WeightTable::expand_to(std::int64_t n) {
  while (!pq_.empty() && pq_.top().first <= n)
    step();
}

ExtendedGenSet extend_genset(const VAGroup &g, const WeightedGenSet &gens,
                             std::size_t d) {
  struct Found {
    GroupElement el;
    std::int64_t weight;
    std::string name;
  };
  std::vector<Found> all;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> where;
  auto record = [&](const GroupElement &x, std::int64_t w,
                    const std::string &name) {
    auto it = where.find(x);
    if (it == where.end()) {
      where.emplace(x, all.size());
      all.push_back({x, w, name});
    } else if (all[it->second].weight > w) {
      all[it->second].weight = w;
      all[it->second].name = name;
    }
  };

  // Products of exactly k generators, merged by element.
  std::vector<Found> level{{g.identity(), 0, ""}};
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<Found> next;
    std::unordered_map<GroupElement, std::size_t, GroupElementHash> idx;
    for (const Found &f : level)
      for (const Generator &s : gens) {
        GroupElement y = g.mul(f.el, s.element);
        std::int64_t w = f.weight + s.weight;
        auto it = idx.find(y);
        if (it == idx.end()) {
          idx.emplace(y, next.size());
          next.push_back({y, w, f.name + s.name});
        } else if (next[it->second].weight > w) {
          next[it->second].weight = w;
          next[it->second].name = f.name + s.name;
        }
      }
    for (const Found &f : next)
      record(f.el, f.weight, f.name);
    level = std::move(next);
  }

  WeightTable table(g, gens);
  ExtendedGenSet e;
  e.d = d;
  for (Found &f : all) {
    if (f.el == g.identity())
      continue;
    f.weight = table.weight(f.el);
    if (f.el.coset == 0)
      e.xgens.push_back({f.el.vec, f.weight, f.name});
    else
      e.ygens.push_back({f.el, f.weight, f.name});
  }
  auto by_weight = [](const auto &a, const auto &b) { return a.weight < b.weight; };
  std::stable_sort(e.xgens.begin(), e.xgens.end(), by_weight);
  std::stable_sort(e.ygens.begin(), e.ygens.end(), by_weight);
  return e;
}

namespace {

// Least weight of each vector of Z^n that is a nonnegative combination of
// the letters, up to the bound.
std::map<IntVec, std::int64_t> combination_weights(
    const std::vector<const XLetter *> &letters, std::size_t n,
    std::int64_t bound) {
  std::map<IntVec, std::int64_t> best;
  using Item = std::pair<std::int64_t, IntVec>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0, zero_vec(n)});
  while (!pq.empty()) {
    auto [w, v] = pq.top();
    pq.pop();
    if (best.count(v))
      continue;
    for (const XLetter *x : letters) {
      std::int64_t nw = w + x->weight;
      if (nw <= bound) {
        IntVec u = vec_add(v, x->vec);
        if (!best.count(u))
          pq.push({nw, std::move(u)});
      }
    }
    best.emplace(std::move(v), w);
  }
  return best;
}

} // namespace

ExtendedGenSet reduce_genset(const VAGroup &g, const ExtendedGenSet &e) {
  const std::size_t n = g.rank();
  ExtendedGenSet out;
  out.d = e.d;
  for (const XLetter &x : e.xgens) {
    std::vector<const XLetter *> lighter;
    for (const XLetter &y : e.xgens)
      if (y.weight < x.weight)
        lighter.push_back(&y);
    auto reach = combination_weights(lighter, n, x.weight);
    if (!reach.count(x.vec))
      out.xgens.push_back(x);
  }

  std::vector<const XLetter *> xs;
  for (const XLetter &x : e.xgens)
    xs.push_back(&x);
  for (const YLetter &y : e.ygens) {
    bool redundant = false;
    const IntMat &dt = g.data().delta[y.element.coset];
    for (const YLetter &z : e.ygens) {
      if (redundant)
        break;
      if (z.element.coset != y.element.coset || z.weight >= y.weight)
        continue;
      std::int64_t room = y.weight - z.weight;
      auto reach = combination_weights(xs, n, room);
      // y = u z v  <=>  y.vec = u + z.vec + delta_t v
      for (const auto &[v, wv] : reach) {
        IntVec u = vec_sub(vec_sub(y.element.vec, z.element.vec), dt * v);
        auto it = reach.find(u);
        if (it != reach.end() && it->second + wv <= room) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant)
      out.ygens.push_back(y);
  }
  return out;
}

std::vector<Pattern> enumerate_patterns(const ExtendedGenSet &e, std::size_t d) {
  std::vector<Pattern> out{{}};
  const std::size_t r = e.ygens.size();
  if (r == 0)
    return out;
  std::vector<Pattern> level{{}};
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<Pattern> next;
    for (const Pattern &p : level)
      for (std::size_t i = 0; i < r; ++i) {
        Pattern q = p;
        q.push_back(i);
        next.push_back(std::move(q));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::string pattern_name(const ExtendedGenSet &e, const Pattern &p) {
  if (p.empty())
    return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      s += ",";
    s += e.ygens[p[i]].name;
  }
  return s + ")";
}

PatternConstants pattern_constants(const VAGroup &g, const ExtendedGenSet &e,
                                   const Pattern &p) {
  const std::size_t n = g.rank(), r = e.xgens.size(), d = g.index();
  PatternConstants pc;
  pc.m = (p.size() + 1) * r;
  pc.A.assign(n, IntVec(pc.m, Int(0)));

  GroupElement prefix = g.identity();
  for (std::size_t j = 0; j <= p.size(); ++j) {
    const IntMat &dj = g.data().delta[prefix.coset];
    for (std::size_t l = 0; l < r; ++l) {
      IntVec col = dj * e.xgens[l].vec;
      for (std::size_t i = 0; i < n; ++i)
        pc.A[i][j * r + l] = col[i];
      pc.Aw.push_back(e.xgens[l].weight);
    }
    if (j < p.size()) {
      const YLetter &y = e.ygens[p[j]];
      prefix = g.mul(prefix, y.element);
      pc.Bw += y.weight;
    }
  }
  pc.element = prefix;
  pc.B = prefix.vec;
  pc.t_pi = prefix.coset;

  pc.conjA.resize(d);
  for (std::size_t t = 0; t < d; ++t) {
    const IntMat &dt = g.data().delta[t];
    pc.conjA[t].assign(n, IntVec(pc.m, Int(0)));
    for (std::size_t c = 0; c < pc.m; ++c) {
      IntVec col(n);
      for (std::size_t i = 0; i < n; ++i)
        col[i] = pc.A[i][c];
      col = dt * col;
      for (std::size_t i = 0; i < n; ++i)
        pc.conjA[t][i][c] = col[i];
    }
    GroupElement ce = g.conj(t, prefix);
    pc.conjB.push_back(ce.vec);
    pc.conj_coset.push_back(ce.coset);
  }
  return pc;
}

GroupElement eval_word(const PatternConstants &pc, const IntVec &w) {
  if (w.size() != pc.m)
    throw std::invalid_argument("eval_word: expected a vector of length " +
                                std::to_string(pc.m) + ", got " +
                                std::to_string(w.size()));
  GroupElement x{pc.B, pc.t_pi};
  for (std::size_t i = 0; i < pc.A.size(); ++i)
    x.vec[i] += dot(pc.A[i], w);
  return x;
}

Int word_weight(const PatternConstants &pc, const IntVec &w) {
  if (w.size() != pc.m)
    throw std::invalid_argument("word_weight: expected a vector of length " +
                                std::to_string(pc.m) + ", got " +
                                std::to_string(w.size()));
  Int s = pc.Bw;
  for (std::size_t i = 0; i < pc.m; ++i)
    s += Int(pc.Aw[i]) * w[i];
  return s;
}

GroupElement fold_word(const VAGroup &g, const ExtendedGenSet &e,
                       const Pattern &p, const IntVec &w) {
  const std::size_t r = e.xgens.size();
  if (w.size() != (p.size() + 1) * r)
    throw std::invalid_argument("fold_word: dimension mismatch");
  GroupElement x = g.identity();
  for (std::size_t j = 0; j <= p.size(); ++j) {
    for (std::size_t l = 0; l < r; ++l) {
      GroupElement letter = g.from_vec(e.xgens[l].vec);
      for (Int k = 0; k < w[j * r + l]; ++k)
        x = g.mul(x, letter);
    }
    if (j < p.size())
      x = g.mul(x, e.ygens[p[j]].element);
  }
  return x;
}

} // namespace vag
