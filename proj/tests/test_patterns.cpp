#include "doctest.h"
#include "fixtures.hpp"
#include "support.hpp"
#include "words.hpp"

#include "vag/oracle.hpp"
#include "vag/patterns.hpp"

using namespace vag;
using namespace vag::test;

namespace {

const char *kAll[] = {"z", "z_w2", "z2", "dinf", "klein", "swap", "z_c2"};

IntVec random_word(Rng &rng, std::size_t m) {
  IntVec w;
  for (std::size_t i = 0; i < m; ++i)
    w.emplace_back(rng.range(0, 2) == 0 ? rng.range(0, 3) : 0);
  return w;
}

} // namespace

TEST_CASE("extended generating set of the infinite dihedral group") {
  Fixture f("dinf");
  ExtendedGenSet e = extend_genset(f.group, f.gens(), 2);
  REQUIRE(e.xgens.size() == 4);
  CHECK(e.xgens[0].vec == iv({1}));
  CHECK(e.xgens[1].vec == iv({-1}));
  CHECK(e.xgens[2].vec == iv({2}));
  CHECK(e.xgens[3].vec == iv({-2}));
  std::vector<std::int64_t> xw;
  for (const XLetter &x : e.xgens)
    xw.push_back(x.weight);
  CHECK(xw == std::vector<std::int64_t>{1, 1, 2, 2});
  REQUIRE(e.ygens.size() == 3);
  CHECK(e.ygens[0].element == GroupElement{iv({0}), 1});
  CHECK(e.ygens[1].element == GroupElement{iv({1}), 1});
  CHECK(e.ygens[2].element == GroupElement{iv({-1}), 1});
  std::vector<std::int64_t> yw;
  for (const YLetter &y : e.ygens)
    yw.push_back(y.weight);
  CHECK(yw == std::vector<std::int64_t>{1, 2, 2});

  ExtendedGenSet r = reduce_genset(f.group, e);
  CHECK(r.xgens.size() == 2);
  CHECK(r.ygens.size() == 1);
}

TEST_CASE("extended generating set of abelian inputs") {
  Fixture z("z"), z2("z2");
  ExtendedGenSet e = extend_genset(z.group, z.gens(), 1);
  REQUIRE(e.xgens.size() == 2);
  CHECK(e.xgens[0].vec == iv({1}));
  CHECK(e.xgens[1].vec == iv({-1}));
  CHECK(e.ygens.empty());
  ExtendedGenSet e2 = extend_genset(z2.group, z2.gens(), 1);
  REQUIRE(e2.xgens.size() == z2.gens().size());
  for (std::size_t i = 0; i < e2.xgens.size(); ++i)
    CHECK(e2.xgens[i].vec == z2.gens()[i].element.vec);
}

TEST_CASE("extended weights are element weights") {
  for (const char *name : kAll) {
    CAPTURE(name);
    Fixture f(name);
    Ball b = ball(f.group, f.gens(), 8);
    ExtendedGenSet e = extend_genset(f.group, f.gens(), f.group.index());
    for (const XLetter &x : e.xgens)
      CHECK(b.weight.at(f.group.from_vec(x.vec)) == x.weight);
    for (const YLetter &y : e.ygens)
      CHECK(b.weight.at(y.element) == y.weight);
  }
}

TEST_CASE("pattern enumeration") {
  ExtendedGenSet e;
  e.ygens.resize(3);
  std::vector<Pattern> p = enumerate_patterns(e, 2);
  CHECK(p.size() == 13);
  CHECK(p[0].empty());
  CHECK(p[1] == Pattern{0});
  CHECK(p[4] == Pattern{0, 0});
  CHECK(p[5] == Pattern{0, 1});
  CHECK(p[12] == Pattern{2, 2});
  CHECK(enumerate_patterns(e, 0).size() == 1);
  e.ygens.clear();
  CHECK(enumerate_patterns(e, 3).size() == 1);
}

TEST_CASE("pattern constants for the infinite dihedral group") {
  Fixture f("dinf");
  ExtendedGenSet e = extend_genset(f.group, f.gens(), 2);
  PatternConstants pc = pattern_constants(f.group, e, Pattern{0});
  CHECK(pc.m == 8);
  CHECK(pc.A[0] == iv({1, -1, 2, -2, -1, 1, -2, 2}));
  CHECK(pc.B == iv({0}));
  CHECK(pc.t_pi == 1);
  CHECK(pc.Aw == std::vector<std::int64_t>{1, 1, 2, 2, 1, 1, 2, 2});
  CHECK(pc.Bw == 1);

  IntVec e1 = unit_vec(8, 0);
  CHECK(eval_word(pc, e1) == GroupElement{iv({1}), 1});
  CHECK(word_weight(pc, e1) == 2);
  CHECK(eval_word(pc, zero_vec(8)) == pc.element);
  CHECK(word_weight(pc, zero_vec(8)) == pc.Bw);
  CHECK_THROWS_AS(eval_word(pc, zero_vec(3)), std::invalid_argument);

  for (const char *name : kAll) {
    Fixture g(name);
    ExtendedGenSet eg = extend_genset(g.group, g.gens(), g.group.index());
    PatternConstants empty = pattern_constants(g.group, eg, Pattern{});
    CHECK(empty.t_pi == 0);
    CHECK(empty.Bw == 0);
    CHECK(is_zero(empty.B));
    for (std::size_t i = 0; i < g.group.rank(); ++i)
      for (std::size_t l = 0; l < eg.xgens.size(); ++l)
        CHECK(empty.A[i][l] == eg.xgens[l].vec[i]);
    for (const Pattern &p : enumerate_patterns(eg, eg.d)) {
      PatternConstants q = pattern_constants(g.group, eg, p);
      CHECK(q.conjA[0] == q.A);
      CHECK(q.conjB[0] == q.B);
    }
  }
}

TEST_CASE("words evaluate like folded products") {
  Rng rng(21);
  for (const char *name : kAll) {
    CAPTURE(name);
    Fixture f(name);
    const VAGroup &g = f.group;
    ExtendedGenSet e = extend_genset(g, f.gens(), g.index());
    std::vector<Pattern> ps = enumerate_patterns(e, e.d);
    for (int i = 0; i < 200; ++i) {
      const Pattern &p = ps[rng.range(0, ps.size() - 1)];
      PatternConstants pc = pattern_constants(g, e, p);
      IntVec w = random_word(rng, pc.m);
      GroupElement x = eval_word(pc, w);
      CHECK(x == fold_word(g, e, p, w));
      for (std::size_t t = 0; t < g.index(); ++t) {
        GroupElement c = g.conj(t, x);
        IntVec v = pc.conjB[t];
        for (std::size_t k = 0; k < g.rank(); ++k)
          v[k] += dot(pc.conjA[t][k], w);
        CHECK(c.vec == v);
        CHECK(c.coset == pc.conj_coset[t]);
      }
    }
  }
}

TEST_CASE("patterned words reach every element at its weight") {
  const std::int64_t N = 6;
  for (bool reduce : {false, true})
    for (const char *name : kAll) {
      CAPTURE(name);
      CAPTURE(reduce);
      Fixture f(name);
      const VAGroup &g = f.group;
      Ball b = ball(g, f.gens(), N);
      ExtendedGenSet e = extend_genset(g, f.gens(), g.index());
      if (reduce)
        e = reduce_genset(g, e);
      std::unordered_map<GroupElement, std::int64_t, GroupElementHash> best;
      for (const Pattern &p : enumerate_patterns(e, e.d)) {
        PatternConstants pc = pattern_constants(g, e, p);
        if (pc.Bw > N)
          continue;
        each_bounded(pc.Aw, N - pc.Bw, [&](const IntVec &w) {
          GroupElement x = eval_word(pc, w);
          std::int64_t ww = word_weight(pc, w).convert_to<std::int64_t>();
          auto it = b.weight.find(x);
          // A word is never lighter than its element.
          if (it != b.weight.end())
            CHECK(ww >= it->second);
          else
            CHECK(ww > N);
          auto jt = best.find(x);
          if (jt == best.end() || jt->second > ww)
            best[x] = ww;
        });
      }
      for (const auto &[x, w] : b.weight) {
        auto it = best.find(x);
        REQUIRE(it != best.end());
        CHECK(it->second == w);
      }
    }
}
