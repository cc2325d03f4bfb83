#include "doctest.h"
#include "generators.hpp"
#include "support.hpp"

#include "vag/presburger.hpp"

using namespace vag;
using namespace vag::test;

namespace {

PresburgerSet set1(Constraint c) {
  std::size_t m = c.u.size();
  return PresburgerSet::from_basic(BasicSet(m, {std::move(c)}));
}

} // namespace

TEST_CASE("membership") {
  CHECK(set1(Constraint::cong(iv({1}), 1, 2)).member(iv({3})));
  BasicSet contra(1, {Constraint::gt(iv({1}), 0), Constraint::eq(iv({1}), 0)});
  PresburgerSet p(1);
  p.add_disjunct(contra);
  CHECK_FALSE(p.member(iv({0})));
  CHECK_FALSE(p.member(iv({1})));
  CHECK(set1(Constraint::eq(iv({2, -1}), 0)).member(iv({3, 6})));
  CHECK_THROWS(p.member(iv({1, 2})));
}

TEST_CASE("boolean operations") {
  PresburgerSet zero = set1(Constraint::eq(iv({1}), 0));
  PresburgerSet c = zero.complement();
  CHECK(c.member(iv({1})));
  CHECK(c.member(iv({-1})));
  CHECK_FALSE(c.member(iv({0})));

  PresburgerSet even = set1(Constraint::cong(iv({1}), 0, 2));
  PresburgerSet three = set1(Constraint::cong(iv({1}), 0, 3));
  PresburgerSet six = even.intersect(three);
  for (long z = -20; z <= 20; ++z)
    CHECK(six.member(iv({z})) == (z % 6 == 0));
}

TEST_CASE("boolean laws on random sets") {
  Rng rng(1);
  for (int it = 0; it < 60; ++it) {
    std::size_t m = rng.range(1, 4);
    PresburgerSet p = random_set(rng, m), q = random_set(rng, m),
                  r = random_set(rng, m);
    PresburgerSet pc = p.complement(), qc = q.complement();
    PresburgerSet dm1 = p.unite(q).complement(), dm2 = pc.intersect(qc);
    PresburgerSet dd = pc.complement();
    PresburgerSet d1 = p.intersect(q.unite(r));
    PresburgerSet d2 = p.intersect(q).unite(p.intersect(r));
    for (int s = 0; s < 20; ++s) {
      IntVec z = rng.vec(m, -8, 8);
      CHECK(pc.member(z) == !p.member(z));
      CHECK(dm1.member(z) == dm2.member(z));
      CHECK(dd.member(z) == p.member(z));
      CHECK(d1.member(z) == d2.member(z));
      CHECK(p.subtract(q).member(z) == (p.member(z) && !q.member(z)));
    }
  }
}

TEST_CASE("elimination examples") {
  PresburgerSet p = set1(Constraint::eq(iv({2, -1}), 0));
  PresburgerSet e = p.eliminate(0);
  for (long y = -10; y <= 10; ++y) {
    bool witness = false;
    for (long x = -20; x <= 20; ++x)
      witness = witness || p.member(iv({x, y}));
    CHECK(e.member(iv({y})) == witness);
    CHECK(e.member(iv({y})) == (y % 2 == 0));
  }

  PresburgerSet q = PresburgerSet::from_basic(BasicSet(
      2, {Constraint::gt(iv({1, 0}), 0), Constraint::gt(iv({-1, 1}), 0)}));
  PresburgerSet f = q.eliminate(0);
  for (long y = -10; y <= 10; ++y)
    CHECK(f.member(iv({y})) == (y > 1));

  CHECK(PresburgerSet::empty(2).eliminate(1).is_empty());
  CHECK(PresburgerSet::empty(2).eliminate(1).dim() == 1);
}

TEST_CASE("elimination agrees with witness search on bounded sets") {
  Rng rng(2);
  const long B = 4;
  for (int it = 0; it < 120; ++it) {
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
      CHECK(e.member(zp) == witness);
    });
  }
}

TEST_CASE("affine maps") {
  PresburgerSet nat = PresburgerSet::orthant(1);
  IntMat a = im({{2}});
  PresburgerSet img = nat.affine_image(a, iv({1}));
  for (long y = -10; y <= 30; ++y)
    CHECK(img.member(iv({y})) == (y >= 1 && y % 2 == 1));

  PresburgerSet big = set1(Constraint::gt(iv({1}), 3));
  PresburgerSet pre = big.affine_preimage(a, iv({1}));
  for (long x = -10; x <= 10; ++x)
    CHECK(pre.member(iv({x})) == (x > 1));

  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    std::size_t m = rng.range(1, 3);
    PresburgerSet p = random_set(rng, m);
    PresburgerSet id1 = p.affine_image(IntMat::identity(m), zero_vec(m));
    PresburgerSet id2 = p.affine_preimage(IntMat::identity(m), zero_vec(m));
    for (int s = 0; s < 20; ++s) {
      IntVec z = rng.vec(m, -6, 6);
      CHECK(id1.member(z) == p.member(z));
      CHECK(id2.member(z) == p.member(z));
    }
    // Image of the preimage contains every image point of the preimage.
    IntMat A = rng.mat(m, m, -2, 2);
    IntVec q = rng.vec(m, -2, 2);
    PresburgerSet pre2 = p.affine_preimage(A, q);
    PresburgerSet back = pre2.affine_image(A, q);
    for (int s = 0; s < 20; ++s) {
      IntVec x = rng.vec(m, -5, 5);
      if (pre2.member(x)) {
        IntVec y = vec_add(A * x, q);
        CHECK(back.member(y));
        CHECK(p.member(y));
      }
    }
  }
}

TEST_CASE("emptiness") {
  PresburgerSet a = set1(Constraint::gt(iv({1}), 0))
                        .intersect(set1(Constraint::gt(iv({-1}), 0)));
  CHECK(a.is_empty());
  PresburgerSet b = set1(Constraint::cong(iv({1}), 1, 2))
                        .intersect(set1(Constraint::cong(iv({1}), 0, 4)));
  CHECK(b.is_empty());
  CHECK_FALSE(PresburgerSet::universe(1).is_empty());
  // 2x + 4y = 1 has no integer solution; 6x + 10y = 2 does.
  CHECK(set1(Constraint::eq(iv({2, 4}), 1)).is_empty());
  CHECK_FALSE(set1(Constraint::eq(iv({6, 10}), 2)).is_empty());
  // 1 < 3x < 3 has no integer solution.
  PresburgerSet thin = PresburgerSet::from_basic(BasicSet(
      1, {Constraint::gt(iv({3}), 1), Constraint::gt(iv({-3}), -3)}));
  CHECK(thin.is_empty());
}

TEST_CASE("counting by weight") {
  PresburgerSet n2 = PresburgerSet::orthant(2);
  CHECK(count_by_weight(n2, {1, 1}, 3) == coeffs({1, 2, 3, 4}));

  PresburgerSet par = n2.intersect(set1(Constraint::cong(iv({1, -1}), 0, 2)));
  CHECK(par.positive());
  CHECK(count_by_weight(par, {1, 1}, 4) == coeffs({1, 0, 3, 0, 5}));

  PresburgerSet none = PresburgerSet::orthant(2).intersect(PresburgerSet::empty(2));
  CHECK(count_by_weight(none, {1, 1}, 3) == coeffs({0, 0, 0, 0}));

  CHECK_THROWS(count_by_weight(PresburgerSet::universe(1), {1}, 3));
  CHECK_THROWS(count_by_weight(PresburgerSet::orthant(1), {0}, 3));
}

TEST_CASE("counting obeys inclusion-exclusion") {
  Rng rng(4);
  for (int it = 0; it < 40; ++it) {
    std::size_t m = rng.range(1, 3);
    PresburgerSet p = PresburgerSet::orthant(m).intersect(random_set(rng, m));
    PresburgerSet q = PresburgerSet::orthant(m).intersect(random_set(rng, m));
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < m; ++i)
      w.push_back(rng.range(1, 3));
    auto a = count_by_weight(p.unite(q), w, 8);
    auto b = count_by_weight(p.intersect(q), w, 8);
    auto c = count_by_weight(p, w, 8);
    auto d = count_by_weight(q, w, 8);
    for (std::size_t k = 0; k <= 8; ++k)
      CHECK(a[k] + b[k] == c[k] + d[k]);
    // Brute force on the same range.
    std::vector<Int> brute(9, Int(0));
    for_box(m, 8, [&](const IntVec &z) {
      Int wt = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (z[i] < 0)
          return;
        wt += z[i] * w[i];
      }
      if (wt <= 8 && p.member(z))
        ++brute[wt.convert_to<std::size_t>()];
    });
    CHECK(c == brute);
  }
}

TEST_CASE("disjointify") {
  PresburgerSet nat = PresburgerSet::orthant(1);
  PresburgerSet x1 = set1(Constraint::ge(iv({1}), 0));
  PresburgerSet x2 = set1(Constraint::cong(iv({1}), 0, 2));
  auto ys = disjointify(nat, {x1, x2});
  REQUIRE(ys.size() == 2);
  CHECK(ys[1].is_empty());
  for (long z = -5; z <= 5; ++z)
    CHECK(ys[0].member(iv({z})) == (z >= 0));

  PresburgerSet box = PresburgerSet::from_basic(
      BasicSet(1, {Constraint::ge(iv({1}), 0), Constraint::le(iv({1}), 3)}));
  auto zs = disjointify(box, {set1(Constraint::le(iv({1}), 1)),
                              set1(Constraint::ge(iv({1}), 1))});
  for (long z = -3; z <= 6; ++z) {
    CHECK(zs[0].member(iv({z})) == (z == 0 || z == 1));
    CHECK(zs[1].member(iv({z})) == (z == 2 || z == 3));
  }

  auto one = disjointify(box, {x1});
  for (long z = -3; z <= 6; ++z)
    CHECK(one[0].member(iv({z})) == box.member(iv({z})));

  CHECK_THROWS(disjointify(nat, {x2}));
}

TEST_CASE("disjointify partitions random covers") {
  Rng rng(6);
  for (int it = 0; it < 30; ++it) {
    std::size_t m = rng.range(1, 3);
    std::vector<PresburgerSet> cover;
    for (long k = rng.range(1, 3); k > 0; --k)
      cover.push_back(random_set(rng, m));
    PresburgerSet all = PresburgerSet::empty(m);
    for (auto &x : cover)
      all = all.unite(x);
    PresburgerSet p = all.intersect(random_set(rng, m));
    auto ys = disjointify(p, cover);
    for (int s = 0; s < 30; ++s) {
      IntVec z = rng.vec(m, -8, 8);
      int hits = 0;
      for (std::size_t i = 0; i < ys.size(); ++i)
        if (ys[i].member(z)) {
          ++hits;
          CHECK(cover[i].member(z));
        }
      CHECK(hits == (p.member(z) ? 1 : 0));
    }
  }
}
