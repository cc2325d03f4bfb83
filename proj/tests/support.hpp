#pragma once

#include "vag/linalg.hpp"

#include <initializer_list>
#include <random>

namespace vag::test {

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

inline IntMat im(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.push_back(iv(r));
    cols = r.size();
  }
  return IntMat::from_rows(rs, cols);
}

inline std::vector<Int> coeffs(std::initializer_list<long> xs) { return iv(xs); }

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long range(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }
  IntVec vec(std::size_t n, long lo, long hi) {
    IntVec v;
    for (std::size_t i = 0; i < n; ++i)
      v.emplace_back(range(lo, hi));
    return v;
  }
  IntMat mat(std::size_t r, std::size_t c, long lo, long hi) {
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = range(lo, hi);
    return m;
  }
};

} // namespace vag::test
