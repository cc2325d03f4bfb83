#pragma once

#include "vag/int.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vag {

class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int &at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;
  void set_row(std::size_t r, const IntVec &v);
  std::vector<IntVec> row_list() const;

  IntMat operator*(const IntMat &o) const;
  IntVec operator*(const IntVec &v) const;
  IntMat operator-(const IntMat &o) const;
  bool operator==(const IntMat &o) const = default;

  IntMat transpose() const;
  Int determinant() const;
  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct HnfResult {
  IntMat h;
  IntMat u;
};

/// Row Hermite normal form: H = U * M with U unimodular. Pivots are
/// positive, entries above each pivot lie in [0, pivot), zero rows last.
HnfResult hnf(const IntMat &m);

/// A subgroup of Z^n stored by its canonical HNF basis.
class Lattice {
public:
  explicit Lattice(std::size_t ambient = 0) : ambient_(ambient) {}

  static Lattice from_generators(const std::vector<IntVec> &gens,
                                 std::size_t n);
  static Lattice full(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVec> &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  /// Coefficients c with sum c_i * basis_i = v, if v lies in the lattice.
  std::optional<IntVec> contains(const IntVec &v) const;
  /// Canonical representative of v + L.
  IntVec reduce(const IntVec &v) const;

  /// |Z^n / L| when rank is full, otherwise 0 (infinite).
  Int index() const;

  bool operator==(const Lattice &o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

private:
  std::size_t ambient_;
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

Lattice lattice_from_generators(const std::vector<IntVec> &vs, std::size_t n);
std::optional<IntVec> lattice_contains(const Lattice &l, const IntVec &v);
IntVec lattice_reduce(const Lattice &l, const IntVec &v);

} // namespace vag
