#include "vag/series.hpp"

#include <algorithm>

namespace vag {

namespace {

using Rat = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using RPoly = std::vector<Rat>;

void trim(RPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

RPoly to_rat(const std::vector<Int> &p) {
  RPoly r;
  for (const Int &x : p)
    r.emplace_back(x);
  trim(r);
  return r;
}

// Remainder and quotient of a by b (b nonzero, trimmed).
RPoly poly_divmod(RPoly a, const RPoly &b, RPoly *quot) {
  trim(a);
  RPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rat f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  if (quot) {
    trim(q);
    *quot = std::move(q);
  }
  return a;
}

// Scales p to integer coefficients with content 1.
void make_primitive(RPoly &p) {
  Int l = 1, g = 0;
  for (const Rat &x : p)
    l = lcm(l, boost::multiprecision::denominator(x));
  for (Rat &x : p) {
    x *= l;
    g = gcd(g, boost::multiprecision::numerator(x));
  }
  if (g > 1)
    for (Rat &x : p)
      x /= g;
}

RPoly poly_gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    RPoly r = poly_divmod(a, b, nullptr);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Scales num and den jointly to coprime integer coefficients.
void to_integers(const RPoly &num, const RPoly &den, std::vector<Int> &inum,
                 std::vector<Int> &iden) {
  Int l = 1;
  for (const RPoly *p : {&num, &den})
    for (const Rat &x : *p)
      l = lcm(l, boost::multiprecision::denominator(x));
  Int g = 0;
  inum.clear();
  iden.clear();
  for (const Rat &x : num) {
    Int v = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
    g = gcd(g, v);
    inum.push_back(v);
  }
  for (const Rat &x : den) {
    Int v = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
    g = gcd(g, v);
    iden.push_back(v);
  }
  if (g > 1) {
    for (Int &v : inum)
      v /= g;
    for (Int &v : iden)
      v /= g;
  }
}

std::string poly_str(const std::vector<Int> &p) {
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0)
      continue;
    Int c = abs(p[i]);
    if (first)
      s += p[i] < 0 ? "-" : "";
    else
      s += p[i] < 0 ? " - " : " + ";
    if (c != 1 || i == 0)
      s += c.str();
    if (i >= 1)
      s += "z";
    if (i >= 2)
      s += "^" + std::to_string(i);
    first = false;
  }
  return first ? "0" : s;
}

} // namespace

std::vector<Int> poly_trim(std::vector<Int> p) {
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
  if (p.empty())
    p.push_back(0);
  return p;
}

std::vector<Int> poly_mul(const std::vector<Int> &a, const std::vector<Int> &b) {
  if (a.empty() || b.empty())
    return {Int(0)};
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

std::vector<Int> poly_add(const std::vector<Int> &a, const std::vector<Int> &b) {
  std::vector<Int> r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  return poly_trim(std::move(r));
}

RationalFunction canonicalize(const std::vector<Int> &num,
                              const std::vector<Int> &den) {
  RPoly n = to_rat(num), d = to_rat(den);
  if (d.empty())
    throw std::invalid_argument("rational function with zero denominator");
  RationalFunction r;
  if (n.empty())
    return r;
  RPoly g = poly_gcd(n, d);
  if (g.size() > 1) {
    RPoly qn, qd;
    poly_divmod(n, g, &qn);
    poly_divmod(d, g, &qd);
    n = std::move(qn);
    d = std::move(qd);
  }
  if (d.front() == 0)
    throw std::invalid_argument("denominator vanishes at zero");
  to_integers(n, d, r.num, r.den);
  if (r.den.front() < 0) {
    for (Int &v : r.num)
      v = -v;
    for (Int &v : r.den)
      v = -v;
  }
  return r;
}

RationalFunction RationalFunction::make(std::vector<Int> num,
                                        std::vector<Int> den) {
  return canonicalize(num, den);
}

RationalFunction RationalFunction::polynomial(std::vector<Int> p) {
  return canonicalize(p, {Int(1)});
}

std::string RationalFunction::str() const {
  if (den.size() == 1 && den[0] == 1)
    return poly_str(num);
  return "(" + poly_str(num) + ")/(" + poly_str(den) + ")";
}

SeriesPrefix expand(const RationalFunction &r, std::size_t n) {
  if (r.den.empty() || r.den.front() == 0)
    throw std::invalid_argument("expand: den(0) must be nonzero");
  SeriesPrefix c(n + 1, Int(0));
  const Int &q0 = r.den.front();
  for (std::size_t k = 0; k <= n; ++k) {
    Int acc = k < r.num.size() ? r.num[k] : Int(0);
    for (std::size_t i = 1; i < r.den.size() && i <= k; ++i)
      acc -= r.den[i] * c[k - i];
    if (acc % q0 != 0)
      throw std::domain_error("expand: non-integral coefficient");
    c[k] = acc / q0;
  }
  return c;
}

RationalFunction rf_add(const RationalFunction &a, const RationalFunction &b) {
  return canonicalize(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                      poly_mul(a.den, b.den));
}

RationalFunction rf_sub(const RationalFunction &a, const RationalFunction &b) {
  std::vector<Int> nb = poly_mul(b.num, a.den);
  for (Int &v : nb)
    v = -v;
  return canonicalize(poly_add(poly_mul(a.num, b.den), nb),
                      poly_mul(a.den, b.den));
}

std::size_t prefix_length_for(std::size_t d, std::size_t guard) {
  return 2 * d + guard;
}

namespace {

// Berlekamp-Massey over Q: shortest linear recurrence generating s.
// Returns the connection polynomial C (C[0] = 1) and its length L.
std::pair<RPoly, std::size_t> berlekamp_massey(const std::vector<Rat> &s) {
  RPoly c{Rat(1)}, b{Rat(1)};
  std::size_t l = 0, m = 1;
  Rat bd = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rat d = s[n];
    for (std::size_t i = 1; i <= l && i < c.size(); ++i)
      d += c[i] * s[n - i];
    if (d == 0) {
      ++m;
      continue;
    }
    Rat f = d / bd;
    RPoly t = c;
    if (c.size() < b.size() + m)
      c.resize(b.size() + m, Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i)
      c[i + m] -= f * b[i];
    if (2 * l <= n) {
      l = n + 1 - l;
      b = std::move(t);
      bd = d;
      m = 1;
    } else {
      ++m;
    }
  }
  trim(c);
  return {c, l};
}

} // namespace

RationalFunction reconstruct(const SeriesPrefix &prefix, std::size_t guard,
                             std::size_t max_den_degree) {
  const std::size_t len = prefix.size();
  if (guard == 0)
    throw std::invalid_argument("reconstruct: guard must be positive");
  if (len <= guard)
    throw InsufficientData("prefix of length " + std::to_string(len) +
                           " leaves no room to fit beside guard " +
                           std::to_string(guard));
  std::vector<Rat> s(prefix.begin(), prefix.end());
  for (std::size_t d = 4;; d *= 2) {
    std::size_t dc = std::min(d, max_den_degree);
    std::size_t fit = std::min(2 * dc, len - guard);
    std::vector<Rat> head(s.begin(), s.begin() + fit);
    auto [c, l] = berlekamp_massey(head);
    if (2 * l <= fit) {
      RPoly p(l, Rat(0));
      for (std::size_t k = 0; k < l; ++k)
        for (std::size_t i = 0; i <= k && i < c.size(); ++i)
          p[k] += c[i] * s[k - i];
      trim(p);
      std::vector<Int> in, id;
      to_integers(p, c, in, id);
      if (in.empty())
        in.push_back(0);
      RationalFunction raw;
      raw.num = in;
      raw.den = id;
      try {
        if (expand(raw, len - 1) == prefix)
          return canonicalize(in, id);
      } catch (const std::domain_error &) {
      }
    }
    if (dc >= max_den_degree || 2 * dc >= len - guard)
      break;
  }
  throw InsufficientData("no rational function with denominator degree <= " +
                         std::to_string(max_den_degree) +
                         " certified on a prefix of length " +
                         std::to_string(len) + " with guard " +
                         std::to_string(guard));
}

} // namespace vag
