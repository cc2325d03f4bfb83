#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace vag {

using Int = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using IntVec = std::vector<Int>;

/// Floor of a / b for b != 0.
Int floor_div(const Int &a, const Int &b);
/// Ceiling of a / b for b != 0.
Int ceil_div(const Int &a, const Int &b);
/// Residue of a modulo b in [0, |b|).
Int mod_floor(const Int &a, const Int &b);
Int gcd(const Int &a, const Int &b);
Int lcm(const Int &a, const Int &b);

std::string to_string(const Int &x);
Int parse_int(const std::string &s);

// Vector helpers. Dimensions must agree; mismatches throw std::invalid_argument.
IntVec vec_add(const IntVec &a, const IntVec &b);
IntVec vec_sub(const IntVec &a, const IntVec &b);
IntVec vec_neg(const IntVec &a);
IntVec vec_scale(const Int &c, const IntVec &a);
Int dot(const IntVec &a, const IntVec &b);
IntVec zero_vec(std::size_t n);
IntVec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const IntVec &a);
/// gcd of all entries; 0 for the zero vector.
Int content(const IntVec &a);
std::string to_string(const IntVec &v);

} // namespace vag
