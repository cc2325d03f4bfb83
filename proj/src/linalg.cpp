#include "vag/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace vag {

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec> &rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    m.set_row(r, rows[r]);
  return m;
}

IntVec IntMat::row(std::size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMat::col(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = at(r, c);
  return v;
}

void IntMat::set_row(std::size_t r, const IntVec &v) {
  if (v.size() != cols_)
    throw std::invalid_argument("row dimension mismatch");
  for (std::size_t c = 0; c < cols_; ++c)
    at(r, c) = v[c];
}

std::vector<IntVec> IntMat::row_list() const {
  std::vector<IntVec> out;
  for (std::size_t r = 0; r < rows_; ++r)
    out.push_back(row(r));
  return out;
}

IntMat IntMat::operator*(const IntMat &o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix shape mismatch");
  IntMat m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int &a = at(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

IntVec IntMat::operator*(const IntVec &v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (at(i, k) != 0 && v[k] != 0)
        r[i] += at(i, k) * v[k];
  return r;
}

IntMat IntMat::operator-(const IntMat &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  IntMat m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] = data_[i] - o.data_[i];
  return m;
}

IntMat IntMat::transpose() const {
  IntMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m.at(j, i) = at(i, j);
  return m;
}

Int IntMat::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination.
  IntMat a = *this;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMat::str() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r)
      s += ",";
    s += to_string(row(r));
  }
  return s + "]";
}

namespace {

void row_swap(IntMat &m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    std::swap(m.at(a, j), m.at(b, j));
}

// row[dst] -= q * row[src]
void row_axpy(IntMat &m, std::size_t dst, std::size_t src, const Int &q) {
  if (q == 0)
    return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.at(src, j) != 0)
      m.at(dst, j) -= q * m.at(src, j);
}

void row_negate(IntMat &m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m.at(r, j) = -m.at(r, j);
}

} // namespace

HnfResult hnf(const IntMat &m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid on column c among rows r..end until a single nonzero remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h.at(i, c) != 0 &&
            (best == h.rows() || abs(h.at(i, c)) < abs(h.at(best, c))))
          best = i;
      if (best == h.rows())
        break;
      if (best != r) {
        row_swap(h, best, r);
        row_swap(u, best, r);
      }
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, c) == 0)
          continue;
        Int q = floor_div(h.at(i, c), h.at(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (h.at(i, c) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (h.at(r, c) == 0)
      continue;
    if (h.at(r, c) < 0) {
      row_negate(h, r);
      row_negate(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

Lattice Lattice::from_generators(const std::vector<IntVec> &gens,
                                 std::size_t n) {
  for (const IntVec &g : gens)
    if (g.size() != n)
      throw std::invalid_argument("lattice generator dimension mismatch");
  Lattice l(n);
  if (gens.empty())
    return l;
  HnfResult res = hnf(IntMat::from_rows(gens, n));
  for (std::size_t r = 0; r < res.h.rows(); ++r) {
    IntVec row = res.h.row(r);
    if (is_zero(row))
      break;
    std::size_t p = 0;
    while (row[p] == 0)
      ++p;
    l.basis_.push_back(std::move(row));
    l.pivots_.push_back(p);
  }
  return l;
}

Lattice Lattice::full(std::size_t n) {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(unit_vec(n, i));
  return from_generators(gens, n);
}

std::optional<IntVec> Lattice::contains(const IntVec &v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("lattice membership dimension mismatch");
  IntVec w = v;
  IntVec coeffs(basis_.size(), Int(0));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Int &piv = basis_[i][pivots_[i]];
    // Coordinates before this pivot must already be zero.
    for (std::size_t j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < pivots_[i];
         ++j)
      if (w[j] != 0)
        return std::nullopt;
    if (w[pivots_[i]] % piv != 0)
      return std::nullopt;
    Int q = w[pivots_[i]] / piv;
    coeffs[i] = q;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      w[j] -= q * basis_[i][j];
  }
  if (!is_zero(w))
    return std::nullopt;
  return coeffs;
}

IntVec Lattice::reduce(const IntVec &v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("lattice reduction dimension mismatch");
  IntVec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Int q = floor_div(w[pivots_[i]], basis_[i][pivots_[i]]);
    if (q == 0)
      continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      w[j] -= q * basis_[i][j];
  }
  return w;
}

Int Lattice::index() const {
  if (basis_.size() != ambient_)
    return 0;
  Int p = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    p *= basis_[i][pivots_[i]];
  return p;
}

Lattice lattice_from_generators(const std::vector<IntVec> &vs, std::size_t n) {
  return Lattice::from_generators(vs, n);
}

std::optional<IntVec> lattice_contains(const Lattice &l, const IntVec &v) {
  return l.contains(v);
}

IntVec lattice_reduce(const Lattice &l, const IntVec &v) {
  return l.reduce(v);
}

} // namespace vag
