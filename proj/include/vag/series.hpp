#pragma once

#include "vag/int.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vag {

/// Coefficients c_0..c_N of a power series; index k is the coefficient of z^k.
using SeriesPrefix = std::vector<Int>;

/// num/den with integer coefficients in ascending degree. Canonical form:
/// reduced over Q, joint content 1, den(0) > 0.
struct RationalFunction {
  std::vector<Int> num{Int(0)};
  std::vector<Int> den{Int(1)};

  static RationalFunction make(std::vector<Int> num, std::vector<Int> den);
  static RationalFunction polynomial(std::vector<Int> p);

  bool operator==(const RationalFunction &o) const = default;

  /// "(1 + 2z + z^2)/(1 - z)", or just the numerator for a polynomial.
  std::string str() const;
};

class InsufficientData : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Brings num/den into canonical form. Throws on a zero denominator.
RationalFunction canonicalize(const std::vector<Int> &num,
                              const std::vector<Int> &den);

/// Coefficients 0..n of the series expansion.
SeriesPrefix expand(const RationalFunction &r, std::size_t n);

RationalFunction rf_add(const RationalFunction &a, const RationalFunction &b);
RationalFunction rf_sub(const RationalFunction &a, const RationalFunction &b);

/// Finds the rational function of least recurrence order that reproduces
/// the whole prefix, fitting on an initial segment with denominator degree
/// bounds 4, 8, 16, ... up to max_den_degree and requiring at least `guard`
/// further coefficients to agree. Throws InsufficientData otherwise.
RationalFunction reconstruct(const SeriesPrefix &prefix, std::size_t guard,
                             std::size_t max_den_degree);

/// Number of coefficients reconstruct needs to try denominator degree d.
std::size_t prefix_length_for(std::size_t d, std::size_t guard);

/// Polynomial helpers on ascending coefficient lists.
std::vector<Int> poly_trim(std::vector<Int> p);
std::vector<Int> poly_mul(const std::vector<Int> &a, const std::vector<Int> &b);
std::vector<Int> poly_add(const std::vector<Int> &a, const std::vector<Int> &b);

} // namespace vag
