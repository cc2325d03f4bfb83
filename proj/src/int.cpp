#include "vag/int.hpp"

#include <stdexcept>

namespace vag {

Int floor_div(const Int &a, const Int &b) {
  if (b == 0)
    throw std::domain_error("floor_div by zero");
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0)))
    --q;
  return q;
}

Int ceil_div(const Int &a, const Int &b) { return -floor_div(-a, b); }

Int mod_floor(const Int &a, const Int &b) {
  Int m = abs(b);
  Int r = a % m;
  if (r < 0)
    r += m;
  return r;
}

Int gcd(const Int &a, const Int &b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Int lcm(const Int &a, const Int &b) {
  if (a == 0 || b == 0)
    return 0;
  return abs(a / gcd(a, b) * b);
}

std::string to_string(const Int &x) { return x.str(); }

Int parse_int(const std::string &s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  if (i == s.size())
    throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw std::invalid_argument("not an integer: '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

static void check_dims(const IntVec &a, const IntVec &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector dimension mismatch");
}

IntVec vec_add(const IntVec &a, const IntVec &b) {
  check_dims(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec &a, const IntVec &b) {
  check_dims(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

IntVec vec_neg(const IntVec &a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = -a[i];
  return r;
}

IntVec vec_scale(const Int &c, const IntVec &a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = c * a[i];
  return r;
}

Int dot(const IntVec &a, const IntVec &b) {
  check_dims(a, b);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      s += a[i] * b[i];
  return s;
}

IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

IntVec unit_vec(std::size_t n, std::size_t i) {
  IntVec r(n, Int(0));
  r.at(i) = 1;
  return r;
}

bool is_zero(const IntVec &a) {
  for (const Int &x : a)
    if (x != 0)
      return false;
  return true;
}

Int content(const IntVec &a) {
  Int g = 0;
  for (const Int &x : a) {
    if (x != 0)
      g = gcd(g, x);
    if (g == 1)
      break;
  }
  return g;
}

std::string to_string(const IntVec &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += v[i].str();
  }
  return s + ")";
}

} // namespace vag
