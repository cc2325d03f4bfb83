// Acceptance checks AC1..AC8. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include "checks.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace vag;
using namespace vag::test;

namespace {

const char *kAll[] = {"z", "z_w2", "z2", "dinf", "klein", "swap", "z_c2"};
const char *kStandard[] = {"z", "z_w2", "z2", "dinf", "klein", "swap"};
const char *kAbelian[] = {"z", "z_w2", "z2"};

const double kMaxSeconds = 300.0;

struct SubCase {
  const char *group;
  const char *sub;
};
const SubCase kSubs[] = {{"dinf", "dinf_sub_a"},
                         {"dinf", "dinf_sub_a2b"},
                         {"z2", "z2_sub_diag"},
                         {"klein", "klein_sub_a_b2"}};

// Collects failures of one criterion.
struct Report {
  std::vector<std::string> failures;
  std::string detail;
  void fail(const std::string &s) { failures.push_back(s); }
  void expect(bool ok, const std::string &s) {
    if (!ok)
      fail(s);
  }
};

SeriesPrefix head(const SeriesPrefix &p, std::size_t n) {
  return SeriesPrefix(p.begin(), p.begin() + std::min(n, p.size()));
}

RationalFunction rf(std::initializer_list<long> num,
                    std::initializer_list<long> den) {
  return RationalFunction::make(coeffs(num), coeffs(den));
}

GrowthOptions opts(std::int64_t n) {
  GrowthOptions o;
  o.max_weight = n;
  return o;
}

void compare(Report &r, const std::string &what, const SeriesResult &s,
             const SeriesPrefix &oracle) {
  SeriesPrefix e = expand(s.function, oracle.size() - 1);
  if (e != oracle)
    r.fail(what + ": engine " + int_list(e) + " vs oracle " + int_list(oracle));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Report ac1() {
  Report r;
  double worst = 0;
  for (const char *name : kStandard) {
    Fixture f(name);
    auto t0 = std::chrono::steady_clock::now();
    GrowthEngine eng(f.group, f.gens(), opts(12));
    SeriesResult s = eng.standard_series();
    double sec = seconds_since(t0);
    worst = std::max(worst, sec);
    r.expect(sec <= kMaxSeconds,
             std::string(name) + ": " + std::to_string(sec) + " s");
    compare(r, name, s,
            oracle_counts(f.group, f.gens(), OracleMode::Standard, nullptr, 12));
  }
  std::ostringstream os;
  os << "6 fixtures to N=12, slowest " << worst << " s";
  r.detail = os.str();
  return r;
}

Report ac2() {
  Report r;
  for (const SubCase &c : kSubs) {
    Fixture f(c.group);
    SubgroupResolved h = f.subgroup(c.sub);
    GrowthEngine eng(f.group, f.gens(), opts(12));
    SeriesResult s = eng.relative_series(h);
    compare(r, c.sub, s,
            oracle_counts(f.group, f.gens(), OracleMode::Relative, &h, 12));
    if (std::string(c.sub) == "dinf_sub_a")
      r.expect(s.function == rf({1, 1}, {1, -1}), "dinf <a>: " + s.function.str());
    if (std::string(c.sub) == "dinf_sub_a2b")
      r.expect(s.function == rf({1, 0, 1}, {1, -1}),
               "dinf <a^2,b>: " + s.function.str());
  }
  r.detail = "4 subgroups to N=12, closed forms for dinf";
  return r;
}

Report ac3() {
  Report r;
  for (const SubCase &c : kSubs) {
    Fixture f(c.group);
    SubgroupResolved h = f.subgroup(c.sub);
    GrowthEngine eng(f.group, f.gens(), opts(12));
    SeriesResult s = eng.coset_series(h);
    compare(r, c.sub, s,
            oracle_counts(f.group, f.gens(), OracleMode::Coset, &h, 12));
    if (std::string(c.sub) == "dinf_sub_a")
      r.expect(s.function == rf({1, 1}, {1}), "dinf <a>: " + s.function.str());
  }
  for (const char *name : kStandard) {
    Fixture f(name);
    std::vector<GroupElement> all;
    for (const Generator &s : f.gens())
      all.push_back(s.element);
    SubgroupResolved whole = resolve_subgroup(f.group, all);
    SubgroupResolved trivial = resolve_subgroup(f.group, {});
    GrowthEngine eng(f.group, f.gens(), opts(12));
    SeriesResult sg = eng.coset_series(whole);
    r.expect(sg.function == rf({1}, {1}),
             std::string(name) + " H=G: " + sg.function.str());
    SeriesResult s1 = eng.coset_series(trivial);
    SeriesResult st = eng.standard_series();
    r.expect(s1.function == st.function,
             std::string(name) + " H=1: " + s1.function.str() + " vs " +
                 st.function.str());
  }
  r.detail = "4 subgroups to N=12, H=G and H=1 on 6 fixtures";
  return r;
}

Report ac4() {
  Report r;
  for (const char *name : kAll) {
    Fixture f(name);
    GrowthEngine eng(f.group, f.gens(), opts(10));
    SeriesResult s = eng.conjugacy_series();
    compare(r, name, s,
            oracle_counts(f.group, f.gens(), OracleMode::Conjugacy, nullptr, 10));
    if (std::string(name) == "dinf")
      r.expect(s.function == rf({1, 1, 0, -1}, {1, -1}),
               "dinf: " + s.function.str());
    for (const char *a : kAbelian)
      if (std::string(a) == name) {
        SeriesResult st = eng.standard_series();
        r.expect(s.function == st.function,
                 std::string(name) + ": conjugacy " + s.function.str() +
                     " vs standard " + st.function.str());
      }
  }
  r.detail = "7 fixtures to N=10";
  return r;
}

// Counts every conjugacy tuple at the weight of its lightest component,
// without selecting a single word per class.
SeriesPrefix per_tuple_counts(GrowthEngine &eng, std::int64_t n) {
  SeriesPrefix c(n + 1, Int(0));
  for (const TupleSet &t : eng.conjugacy_tuples()) {
    std::vector<std::int64_t> w;
    std::vector<std::size_t> start;
    for (std::size_t k : t.blocks) {
      start.push_back(w.size());
      const PatternConstants &pc = eng.constants(k);
      w.insert(w.end(), pc.Aw.begin(), pc.Aw.end());
    }
    // Components of one tuple are conjugate by transversal elements, so a
    // generous bound on the total is enough to see every tuple of interest.
    std::int64_t bound = static_cast<std::int64_t>(t.blocks.size()) * (n + 8);
    for_each_point(t.set, w, bound, [&](const IntVec &p) {
      std::int64_t least = INT64_MAX;
      for (std::size_t j = 0; j < t.blocks.size(); ++j) {
        const PatternConstants &pc = eng.constants(t.blocks[j]);
        IntVec part(p.begin() + start[j], p.begin() + start[j] + pc.m);
        least = std::min(least, word_weight(pc, part).convert_to<std::int64_t>());
      }
      if (least <= n)
        ++c[least];
    });
  }
  return c;
}

Report ac5() {
  Report r;
  Fixture f("swap");
  GrowthEngine eng(f.group, f.gens(), opts(10));
  SeriesResult s = eng.conjugacy_series();
  SeriesPrefix o =
      oracle_counts(f.group, f.gens(), OracleMode::Conjugacy, nullptr, 1);
  SeriesPrefix pt = per_tuple_counts(eng, 1);
  r.expect(s.prefix[1] == 3, "engine sigma_1 = " + to_string(s.prefix[1]));
  r.expect(o[1] == 3, "oracle sigma_1 = " + to_string(o[1]));
  r.expect(pt[1] == 4, "per-tuple sigma_1 = " + to_string(pt[1]) + ", expected 4");
  r.detail = "engine " + to_string(s.prefix[1]) + ", oracle " + to_string(o[1]) +
             ", per-tuple " + to_string(pt[1]);
  return r;
}

Report ac6() {
  Report r;
  Rng rng(101);
  std::size_t points = 0;
  while (points < 1000) {
    std::size_t m = rng.range(1, 4);
    PresburgerSet p = random_set(rng, m), q = random_set(rng, m),
                  s = random_set(rng, m);
    PresburgerSet pc = p.complement(), qc = q.complement();
    PresburgerSet dm1 = p.unite(q).complement(), dm2 = pc.intersect(qc);
    PresburgerSet dd = pc.complement();
    PresburgerSet d1 = p.intersect(q.unite(s));
    PresburgerSet d2 = p.intersect(q).unite(p.intersect(s));
    PresburgerSet diff = p.subtract(q);
    for (int k = 0; k < 20; ++k, ++points) {
      IntVec z = rng.vec(m, -8, 8);
      bool ok = pc.member(z) == !p.member(z) &&
                dm1.member(z) == dm2.member(z) && dd.member(z) == p.member(z) &&
                d1.member(z) == d2.member(z) &&
                diff.member(z) == (p.member(z) && !q.member(z));
      if (!ok)
        r.fail("boolean law at " + int_list(z) + " for " + p.str());
    }
  }

  const long B = 4;
  for (int it = 0; it < 200; ++it) {
    std::size_t m = rng.range(2, 3);
    PresburgerSet p = random_set(rng, m, 2);
    BasicSet box(m);
    for (std::size_t i = 0; i < m; ++i) {
      box.add(Constraint::ge(unit_vec(m, i), -B));
      box.add(Constraint::le(unit_vec(m, i), B));
    }
    p = p.intersect(box);
    std::size_t i = rng.range(0, m - 1);
    PresburgerSet e = p.eliminate(i);
    for_box(m - 1, B + 1, [&](const IntVec &zp) {
      bool witness = false;
      for (long x = -B; x <= B && !witness; ++x) {
        IntVec z = zp;
        z.insert(z.begin() + i, Int(x));
        witness = p.member(z);
      }
      if (e.member(zp) != witness)
        r.fail("elimination at " + int_list(zp) + " for " + p.str());
    });
  }

  for (int it = 0; it < 50; ++it) {
    std::size_t m = rng.range(1, 3);
    std::vector<PresburgerSet> cover;
    for (long k = rng.range(1, 3); k > 0; --k)
      cover.push_back(random_set(rng, m));
    PresburgerSet all = PresburgerSet::empty(m);
    for (auto &x : cover)
      all = all.unite(x);
    PresburgerSet p = all.intersect(random_set(rng, m));
    auto ys = disjointify(p, cover);
    for (int k = 0; k < 40; ++k) {
      IntVec z = rng.vec(m, -8, 8);
      int hits = 0;
      for (std::size_t i = 0; i < ys.size(); ++i)
        if (ys[i].member(z)) {
          ++hits;
          if (!cover[i].member(z))
            r.fail("disjointify piece leaves its cover at " + int_list(z));
        }
      if (hits != (p.member(z) ? 1 : 0))
        r.fail("disjointify hits " + std::to_string(hits) + " at " + int_list(z));
    }
  }
  r.detail = "1000 boolean-law points, 200 eliminations, 50 covers";
  return r;
}

Report ac7() {
  Report r;
  Rng rng(102);
  for (int it = 0; it < 50; ++it) {
    std::vector<Int> num = rng.vec(rng.range(1, 7), -5, 5);
    std::vector<Int> den = rng.vec(rng.range(1, 7), -3, 3);
    den[0] = 1;
    SeriesPrefix s = long_division(num, den, 80);
    try {
      RationalFunction f = reconstruct(s, 20, 64);
      r.expect(expand(f, 79) == s && f == canonicalize(num, den),
               "round trip of " + int_list(num) + "/" + int_list(den));
    } catch (const InsufficientData &) {
      r.fail("no certificate for " + int_list(num) + "/" + int_list(den));
    }
  }
  int certified = 0;
  for (int it = 0; it < 200; ++it) {
    SeriesPrefix s;
    if (it % 2 == 0) {
      s = rng.vec(60, -50, 50);
    } else {
      std::vector<Int> num = rng.vec(rng.range(1, 5), -5, 5);
      std::vector<Int> den = rng.vec(rng.range(2, 5), -2, 2);
      den[0] = 1;
      s = long_division(num, den, 60);
      s[rng.range(30, 59)] += 1;
    }
    try {
      RationalFunction f = reconstruct(s, 16, 16);
      ++certified;
      r.expect(expand(f, s.size() - 1) == s,
               "certified a contradicting function for " + int_list(s));
    } catch (const InsufficientData &) {
    }
  }
  r.detail = "50 round trips, 200 adversarial prefixes (" +
             std::to_string(certified) + " certified)";
  return r;
}

GroupElement random_element(Rng &rng, const VAGroup &g) {
  return {rng.vec(g.rank(), -6, 6),
          static_cast<std::size_t>(rng.range(0, g.index() - 1))};
}

IntVec random_word(Rng &rng, std::size_t m) {
  IntVec w;
  for (std::size_t i = 0; i < m; ++i)
    w.emplace_back(rng.range(0, 2) == 0 ? rng.range(0, 3) : 0);
  return w;
}

Report ac8() {
  Report r;
  Rng rng(103);
  for (const char *name : kAll) {
    Fixture f(name);
    const VAGroup &g = f.group;
    for (const std::string &e : validate(f.file.data, f.gens()))
      r.fail(std::string(name) + ": " + e);
    for (int i = 0; i < 200; ++i) {
      GroupElement a = random_element(rng, g), b = random_element(rng, g),
                   c = random_element(rng, g);
      bool ok = g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)) &&
                g.mul(a, g.identity()) == a && g.mul(g.identity(), a) == a &&
                g.mul(a, g.inv(a)) == g.identity() &&
                g.mul(g.inv(a), a) == g.identity();
      if (!ok)
        r.fail(std::string(name) + ": group axiom at " + a.str());
    }

    GrowthEngine eng(g, f.gens());
    const auto &ps = eng.patterns();
    for (int i = 0; i < 200; ++i) {
      std::size_t k = rng.range(0, ps.size() - 1);
      const PatternConstants &pc = eng.constants(k);
      IntVec w = random_word(rng, pc.m);
      if (eval_word(pc, w) != fold_word(g, eng.genset(), ps[k], w))
        r.fail(std::string(name) + ": eval_word differs on " + int_list(w));
    }

    std::vector<Lattice> ls{Lattice(g.rank())};
    for (std::size_t t = 0; t < g.index(); ++t)
      ls.push_back(g.commutator_lattice(g.from_coset(t)));
    for (const Lattice &l : ls)
      for (std::size_t k = 0; k < ps.size(); ++k)
        if (std::string e = check_minimal_reps(eng, l, k, 8); !e.empty())
          r.fail(std::string(name) + ": " + e);

    Ball b = ball(g, f.gens(), 8);
    std::vector<std::size_t> all;
    for (std::size_t t = 0; t < g.index(); ++t)
      all.push_back(t);
    if (std::string e = check_family(eng, Lattice(g.rank()), all, b); !e.empty())
      r.fail(std::string(name) + ": " + e);
    for (std::size_t t = 0; t < g.index(); ++t)
      if (std::string e = check_family(eng, ls[t + 1], {t}, b); !e.empty())
        r.fail(std::string(name) + ": " + e);
  }
  r.detail = "7 fixtures, 200 words each, balls of weight 8";
  return r;
}

} // namespace

int main() {
  struct Criterion {
    const char *id;
    const char *what;
    std::function<Report()> run;
  };
  std::vector<Criterion> all{
      {"AC1", "standard growth matches the oracle", ac1},
      {"AC2", "relative growth matches the oracle", ac2},
      {"AC3", "coset growth matches the oracle", ac3},
      {"AC4", "conjugacy growth matches the oracle", ac4},
      {"AC5", "selection rule regression on swap", ac5},
      {"AC6", "Presburger engine suite", ac6},
      {"AC7", "series engine suite", ac7},
      {"AC8", "structural invariants", ac8},
  };
  int failed = 0;
  for (const Criterion &c : all) {
    Report r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r = c.run();
    } catch (const std::exception &e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double sec = seconds_since(t0);
    bool ok = r.failures.empty();
    failed += !ok;
    std::cout << c.id << " " << (ok ? "PASS" : "FAIL") << "  " << c.what;
    if (!r.detail.empty())
      std::cout << " (" << r.detail << ")";
    std::cout << " [" << static_cast<long>(sec * 1000) << " ms]\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
      std::cout << "    " << r.failures[i] << "\n";
    if (r.failures.size() > 10)
      std::cout << "    ... " << r.failures.size() - 10 << " more\n";
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
