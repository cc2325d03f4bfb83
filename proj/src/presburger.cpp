#include "vag/presburger.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace vag {

//===----------------------------------------------------------------------===//
// Constraint
//===----------------------------------------------------------------------===//

Constraint Constraint::eq(IntVec u, Int a) {
  return {Kind::EQ, std::move(u), std::move(a), 1};
}

Constraint Constraint::gt(IntVec u, Int a) {
  return {Kind::GT, std::move(u), std::move(a), 1};
}

Constraint Constraint::cong(IntVec u, Int a, Int b) {
  if (b < 1)
    throw std::invalid_argument("congruence modulus must be positive");
  return {Kind::CONG, std::move(u), std::move(a), std::move(b)};
}

Constraint Constraint::ge(IntVec u, const Int &a) {
  return gt(std::move(u), a - 1);
}

Constraint Constraint::le(const IntVec &u, const Int &a) {
  return gt(vec_neg(u), -a - 1);
}

bool Constraint::holds(const IntVec &z) const {
  Int v = dot(u, z);
  switch (kind) {
  case Kind::EQ:
    return v == a;
  case Kind::GT:
    return v > a;
  case Kind::CONG:
    return mod_floor(v - a, b) == 0;
  }
  return false;
}

std::string Constraint::str() const {
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0)
      continue;
    if (!first || u[i] < 0)
      s += u[i] < 0 ? (first ? "-" : " - ") : " + ";
    Int c = abs(u[i]);
    if (c != 1)
      s += c.str();
    s += "z" + std::to_string(i);
    first = false;
  }
  if (first)
    s = "0";
  switch (kind) {
  case Kind::EQ:
    return s + " = " + a.str();
  case Kind::GT:
    return s + " > " + a.str();
  case Kind::CONG:
    return s + " == " + a.str() + " mod " + b.str();
  }
  return s;
}

std::strong_ordering Constraint::compare_vec(const IntVec &x,
                                             const IntVec &y) {
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != y[i])
      return x[i] < y[i] ? std::strong_ordering::less
                         : std::strong_ordering::greater;
  return x.size() <=> y.size();
}

namespace {

enum class Truth { True, False, Keep };

int first_sign(const IntVec &u) {
  for (const Int &x : u)
    if (x != 0)
      return x > 0 ? 1 : -1;
  return 0;
}

// Canonicalizes a single constraint: gcd reduction, sign convention for
// equalities, and residue reduction for congruences.
Truth normalize_constraint(Constraint &c) {
  switch (c.kind) {
  case Kind::EQ: {
    Int g = content(c.u);
    if (g == 0)
      return c.a == 0 ? Truth::True : Truth::False;
    if (c.a % g != 0)
      return Truth::False;
    if (g != 1) {
      for (Int &x : c.u)
        x /= g;
      c.a /= g;
    }
    if (first_sign(c.u) < 0) {
      for (Int &x : c.u)
        x = -x;
      c.a = -c.a;
    }
    return Truth::Keep;
  }
  case Kind::GT: {
    Int g = content(c.u);
    if (g == 0)
      return 0 > c.a ? Truth::True : Truth::False;
    if (g != 1) {
      for (Int &x : c.u)
        x /= g;
      c.a = floor_div(c.a, g);
    }
    return Truth::Keep;
  }
  case Kind::CONG: {
    c.b = abs(c.b);
    for (Int &x : c.u)
      x = mod_floor(x, c.b);
    c.a = mod_floor(c.a, c.b);
    if (c.b == 1)
      return Truth::True;
    Int g = content(c.u);
    if (g == 0)
      return c.a == 0 ? Truth::True : Truth::False;
    g = gcd(g, c.b);
    if (c.a % g != 0)
      return Truth::False;
    if (g != 1) {
      for (Int &x : c.u)
        x /= g;
      c.a /= g;
      c.b /= g;
    }
    if (c.b == 1)
      return Truth::True;
    return Truth::Keep;
  }
  }
  return Truth::Keep;
}

// x := s.z + e where s[x] == 0.
void substitute(Constraint &c, std::size_t x, const IntVec &s, const Int &e) {
  Int k = c.u[x];
  if (k == 0)
    return;
  c.u[x] = 0;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j] != 0)
      c.u[j] += k * s[j];
  c.a -= k * e;
}

Constraint scaled(const Constraint &c, const Int &f) {
  Constraint r = c;
  for (Int &x : r.u)
    x *= f;
  r.a *= f;
  if (r.kind == Kind::CONG)
    r.b *= f;
  return r;
}

std::vector<Constraint> negate(const Constraint &c) {
  std::vector<Constraint> out;
  switch (c.kind) {
  case Kind::EQ:
    out.push_back(Constraint::gt(c.u, c.a));
    out.push_back(Constraint::gt(vec_neg(c.u), -c.a));
    break;
  case Kind::GT:
    out.push_back(Constraint::gt(vec_neg(c.u), -c.a - 1));
    break;
  case Kind::CONG:
    for (Int r = 0; r < c.b; ++r)
      if (r != mod_floor(c.a, c.b))
        out.push_back(Constraint::cong(c.u, r, c.b));
    break;
  }
  return out;
}

} // namespace

//===----------------------------------------------------------------------===//
// BasicSet
//===----------------------------------------------------------------------===//

BasicSet::BasicSet(std::size_t dim, std::vector<Constraint> cons)
    : dim_(dim), cons_(std::move(cons)) {
  for (const Constraint &c : cons_)
    if (c.u.size() != dim_)
      throw std::invalid_argument("constraint dimension mismatch");
}

void BasicSet::add(Constraint c) {
  if (c.u.size() != dim_)
    throw std::invalid_argument("constraint dimension mismatch");
  cons_.push_back(std::move(c));
}

bool BasicSet::holds(const IntVec &z) const {
  for (const Constraint &c : cons_)
    if (!c.holds(z))
      return false;
  return true;
}

bool BasicSet::normalize() {
  for (int round = 0; round < 64; ++round) {
    struct Bounds {
      std::optional<Int> lo, hi, eq;
    };
    std::map<IntVec, Bounds> bounds;
    std::map<std::pair<IntVec, Int>, Int> congs;
    for (Constraint &c : cons_) {
      Truth t = normalize_constraint(c);
      if (t == Truth::False)
        return false;
      if (t == Truth::True)
        continue;
      if (c.kind == Kind::EQ) {
        Bounds &bd = bounds[c.u];
        if (bd.eq && *bd.eq != c.a)
          return false;
        bd.eq = c.a;
      } else if (c.kind == Kind::GT) {
        if (first_sign(c.u) > 0) {
          Bounds &bd = bounds[c.u];
          Int lo = c.a + 1;
          if (!bd.lo || *bd.lo < lo)
            bd.lo = lo;
        } else {
          Bounds &bd = bounds[vec_neg(c.u)];
          Int hi = -c.a - 1;
          if (!bd.hi || *bd.hi > hi)
            bd.hi = hi;
        }
      } else {
        auto key = std::make_pair(c.u, c.b);
        auto it = congs.find(key);
        if (it != congs.end() && it->second != c.a)
          return false;
        congs[key] = c.a;
      }
    }
    std::vector<Constraint> out;
    for (auto &[u, bd] : bounds) {
      if (bd.eq) {
        if ((bd.lo && *bd.lo > *bd.eq) || (bd.hi && *bd.hi < *bd.eq))
          return false;
        out.push_back(Constraint::eq(u, *bd.eq));
      } else if (bd.lo && bd.hi) {
        if (*bd.lo > *bd.hi)
          return false;
        if (*bd.lo == *bd.hi) {
          out.push_back(Constraint::eq(u, *bd.lo));
        } else {
          out.push_back(Constraint::gt(u, *bd.lo - 1));
          out.push_back(Constraint::gt(vec_neg(u), -*bd.hi - 1));
        }
      } else if (bd.lo) {
        out.push_back(Constraint::gt(u, *bd.lo - 1));
      } else if (bd.hi) {
        out.push_back(Constraint::gt(vec_neg(u), -*bd.hi - 1));
      }
    }
    for (auto &[key, a] : congs)
      out.push_back(Constraint::cong(key.first, a, key.second));

    // Propagate single-variable equalities into the other constraints.
    bool changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Constraint &e = out[i];
      if (e.kind != Kind::EQ)
        continue;
      std::size_t var = dim_, nz = 0;
      for (std::size_t j = 0; j < dim_; ++j)
        if (e.u[j] != 0) {
          var = j;
          ++nz;
        }
      if (nz != 1)
        continue;
      // Normalized single-variable equality has coefficient 1.
      Int val = e.a;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (k == i || out[k].u[var] == 0)
          continue;
        out[k].a -= out[k].u[var] * val;
        out[k].u[var] = 0;
        changed = true;
      }
    }
    cons_ = std::move(out);
    if (!changed)
      break;
  }
  std::sort(cons_.begin(), cons_.end());
  return true;
}

std::string BasicSet::str() const {
  if (cons_.empty())
    return "{ true }";
  std::string s = "{ ";
  for (std::size_t i = 0; i < cons_.size(); ++i) {
    if (i)
      s += ", ";
    s += cons_[i].str();
  }
  return s + " }";
}

//===----------------------------------------------------------------------===//
// Quantifier elimination
//===----------------------------------------------------------------------===//

namespace {

BasicSet drop_column(const BasicSet &b, std::size_t i) {
  std::vector<Constraint> cons;
  for (const Constraint &c : b.constraints()) {
    Constraint r = c;
    r.u.erase(r.u.begin() + i);
    cons.push_back(std::move(r));
  }
  return BasicSet(b.dim() - 1, std::move(cons));
}

struct VarProfile {
  bool present = false;
  bool unit_eq = false;
  bool any_eq = false;
  std::size_t lowers = 0, uppers = 0, congs = 0;
  bool unit_lowers = true, unit_uppers = true;
  Int lcm_coeff = 1;
};

VarProfile profile(const BasicSet &b, std::size_t x) {
  VarProfile p;
  for (const Constraint &c : b.constraints()) {
    const Int &k = c.u[x];
    if (k == 0)
      continue;
    p.present = true;
    p.lcm_coeff = lcm(p.lcm_coeff, k);
    if (c.kind == Kind::EQ) {
      p.any_eq = true;
      if (abs(k) == 1)
        p.unit_eq = true;
    } else if (c.kind == Kind::GT) {
      if (k > 0) {
        ++p.lowers;
        if (k != 1)
          p.unit_lowers = false;
      } else {
        ++p.uppers;
        if (k != -1)
          p.unit_uppers = false;
      }
    } else {
      ++p.congs;
    }
  }
  return p;
}

// Heuristic cost of eliminating x; smaller is cheaper.
double elimination_cost(const BasicSet &b, std::size_t x) {
  VarProfile p = profile(b, x);
  if (!p.present)
    return 0;
  if (p.unit_eq)
    return 1;
  if (p.any_eq)
    return 2;
  if (p.congs == 0) {
    if (p.lowers == 0 || p.uppers == 0)
      return 1;
    if (p.unit_lowers || p.unit_uppers)
      return 3 + double(p.lowers) * double(p.uppers);
  }
  if (p.congs == 1 && p.lowers == 0 && p.uppers == 0)
    return 1;
  double side = std::min(p.lowers == 0 ? 1.0 : double(p.lowers),
                         p.uppers == 0 ? 1.0 : double(p.uppers));
  double d = p.lcm_coeff.convert_to<double>();
  for (const Constraint &c : b.constraints())
    if (c.kind == Kind::CONG && c.u[x] != 0)
      d *= c.b.convert_to<double>();
  return 10 + side * std::min(d, 1e12) * double(b.constraints().size());
}

// Exists-quantifies x in b. Results keep the dimension (column x is zero)
// and are normalized; disjuncts detected empty are dropped. Each result is
// passed to sink, which returns false to stop early.
template <typename Sink>
void exists_var(const BasicSet &b, std::size_t x, Sink &&sink,
                std::size_t *ticks = nullptr) {
  const std::size_t m = b.dim();
  std::vector<Constraint> keep, with;
  for (const Constraint &c : b.constraints())
    (c.u[x] == 0 ? keep : with).push_back(c);
  bool stop = false;
  auto emit = [&](std::vector<Constraint> cons) {
    if (stop)
      return;
    if (ticks) {
      if (*ticks == 0) {
        stop = true;
        return;
      }
      --*ticks;
    }
    BasicSet r(m, std::move(cons));
    if (r.normalize() && !sink(std::move(r)))
      stop = true;
  };
  if (with.empty()) {
    emit(std::move(keep));
    return;
  }

  // Equality: substitute, possibly through a scaled copy.
  std::optional<std::size_t> eqi;
  for (std::size_t i = 0; i < with.size(); ++i)
    if (with[i].kind == Kind::EQ &&
        (!eqi || abs(with[i].u[x]) < abs(with[*eqi].u[x])))
      eqi = i;
  if (eqi) {
    Constraint e = with[*eqi];
    if (e.u[x] < 0) {
      e.u = vec_neg(e.u);
      e.a = -e.a;
    }
    Int c = e.u[x];
    // c*x = e.a - r.z
    IntVec r = e.u;
    r[x] = 0;
    std::vector<Constraint> cons = keep;
    for (std::size_t i = 0; i < with.size(); ++i) {
      if (i == *eqi)
        continue;
      Constraint k = c == 1 ? with[i] : scaled(with[i], c);
      // k.u[x] is now a multiple of c; replace c*x.
      Int q = k.u[x] / c;
      k.u[x] = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (r[j] != 0)
          k.u[j] -= q * r[j];
      k.a -= q * e.a;
      cons.push_back(std::move(k));
    }
    if (c != 1)
      cons.push_back(Constraint::cong(r, e.a, c));
    emit(std::move(cons));
    return;
  }

  std::vector<const Constraint *> lowers, uppers, congs;
  for (const Constraint &c : with) {
    if (c.kind == Kind::GT)
      (c.u[x] > 0 ? lowers : uppers).push_back(&c);
    else
      congs.push_back(&c);
  }

  if (congs.empty()) {
    if (lowers.empty() || uppers.empty()) {
      emit(std::move(keep));
      return;
    }
    bool unit_lo = std::all_of(lowers.begin(), lowers.end(),
                               [&](const Constraint *c) { return c->u[x] == 1; });
    bool unit_up = std::all_of(uppers.begin(), uppers.end(),
                               [&](const Constraint *c) { return c->u[x] == -1; });
    if (unit_lo || unit_up) {
      // Exact integer shadow when one side has unit coefficients.
      std::vector<Constraint> cons = keep;
      for (const Constraint *lo : lowers)
        for (const Constraint *up : uppers) {
          Int kl = lo->u[x], h = -up->u[x];
          IntVec u(m);
          for (std::size_t j = 0; j < m; ++j)
            u[j] = h * lo->u[j] + kl * up->u[j];
          u[x] = 0;
          Int a = h * lo->a + kl * up->a + (kl == 1 ? h : kl);
          cons.push_back(Constraint::gt(std::move(u), std::move(a)));
        }
      emit(std::move(cons));
      return;
    }
  }

  if (congs.size() == 1 && lowers.empty() && uppers.empty()) {
    const Constraint &c = *congs[0];
    Constraint r = c;
    r.b = gcd(c.u[x], c.b);
    r.u[x] = 0;
    keep.push_back(std::move(r));
    emit(std::move(keep));
    return;
  }

  // Cooper: scale so x has coefficient +-l, then x' = l*x.
  Int l = 1;
  for (const Constraint &c : with)
    l = lcm(l, c.u[x]);
  std::vector<Constraint> sc;
  for (const Constraint &c : with) {
    Constraint s = scaled(c, l / abs(c.u[x]));
    s.u[x] = s.u[x] > 0 ? 1 : -1;
    sc.push_back(std::move(s));
  }
  if (l > 1)
    sc.push_back(Constraint::cong(unit_vec(m, x), 0, l));
  Int dmod = 1;
  std::vector<std::size_t> lo_idx, up_idx;
  for (std::size_t i = 0; i < sc.size(); ++i) {
    if (sc[i].kind == Kind::CONG)
      dmod = lcm(dmod, sc[i].b);
    else if (sc[i].u[x] > 0)
      lo_idx.push_back(i);
    else
      up_idx.push_back(i);
  }
  auto size_of = [](std::size_t k) { return k == 0 ? std::size_t(1) : k; };
  bool use_lower = size_of(lo_idx.size()) <= size_of(up_idx.size());
  const std::vector<std::size_t> &bidx = use_lower ? lo_idx : up_idx;

  auto instantiate = [&](const IntVec &s, const Int &e, bool drop_bounds) {
    std::vector<Constraint> cons = keep;
    for (const Constraint &c : sc) {
      if (drop_bounds && c.kind == Kind::GT)
        continue;
      Constraint k = c;
      substitute(k, x, s, e);
      cons.push_back(std::move(k));
    }
    emit(std::move(cons));
  };

  if (bidx.empty()) {
    // No bound on the chosen side: the other side's bounds are vacuous.
    IntVec s = zero_vec(m);
    for (Int j = 1; j <= dmod && !stop; ++j)
      instantiate(s, use_lower ? j : -j, true);
    return;
  }
  for (std::size_t bi : bidx) {
    const Constraint &bc = sc[bi];
    // lower: x' + w.z > a  =>  x' = a - w.z + j
    // upper: -x' + w.z > a =>  x' = w.z - a - j
    IntVec s(m);
    for (std::size_t j = 0; j < m; ++j)
      s[j] = use_lower ? -bc.u[j] : bc.u[j];
    s[x] = 0;
    for (Int j = 1; j <= dmod && !stop; ++j)
      instantiate(s, use_lower ? bc.a + j : -bc.a - j, false);
    if (stop)
      return;
  }
}

std::size_t cheapest_var(const BasicSet &b, const std::vector<bool> &mask) {
  std::size_t best = b.dim();
  double bc = 0;
  for (std::size_t x = 0; x < b.dim(); ++x) {
    if (!mask[x])
      continue;
    double c = elimination_cost(b, x);
    if (best == b.dim() || c < bc) {
      best = x;
      bc = c;
    }
    if (c == 0)
      break;
  }
  return best;
}

bool mentions(const BasicSet &b, std::size_t x) {
  for (const Constraint &c : b.constraints())
    if (c.u[x] != 0)
      return true;
  return false;
}

// Eliminates all masked variables from b, keeping dimension.
void project_basic(const BasicSet &b, const std::vector<bool> &mask,
                   std::vector<BasicSet> &out) {
  std::vector<BasicSet> work{b};
  while (!work.empty()) {
    BasicSet cur = std::move(work.back());
    work.pop_back();
    std::vector<bool> live(mask.size(), false);
    bool any = false;
    for (std::size_t x = 0; x < mask.size(); ++x)
      if (mask[x] && mentions(cur, x)) {
        live[x] = true;
        any = true;
      }
    if (!any) {
      out.push_back(std::move(cur));
      continue;
    }
    std::size_t x = cheapest_var(cur, live);
    exists_var(cur, x, [&](BasicSet r) {
      work.push_back(std::move(r));
      return true;
    });
  }
}

struct SatSearch {
  std::size_t budget;
  bool exhausted = false;

  // Returns true when b is satisfiable (or the budget ran out).
  bool run(const BasicSet &b) {
    if (budget == 0) {
      exhausted = true;
      return true;
    }
    --budget;
    std::vector<bool> live(b.dim(), false);
    bool any = false;
    for (std::size_t x = 0; x < b.dim(); ++x)
      if (mentions(b, x)) {
        live[x] = true;
        any = true;
      }
    if (!any)
      return true;
    std::size_t x = cheapest_var(b, live);
    bool found = false;
    exists_var(
        b, x,
        [&](BasicSet r) {
          if (exhausted || run(r))
            found = true;
          return !found;
        },
        &budget);
    if (budget == 0)
      exhausted = true;
    return found || exhausted;
  }
};

// Satisfiability with a work limit; on exhaustion answers "maybe".
bool maybe_satisfiable(const BasicSet &b, std::size_t budget) {
  BasicSet n = b;
  if (!n.normalize())
    return false;
  SatSearch s{budget};
  return s.run(n);
}

constexpr std::size_t kPruneBudget = 2000;

bool subsumes(const BasicSet &big, const BasicSet &small) {
  // Every constraint of big appears in small => small is a subset of big.
  const auto &bc = big.constraints();
  const auto &sc = small.constraints();
  if (bc.size() > sc.size())
    return false;
  return std::includes(sc.begin(), sc.end(), bc.begin(), bc.end());
}

} // namespace

bool is_satisfiable(const BasicSet &b) {
  return maybe_satisfiable(b, std::numeric_limits<std::size_t>::max());
}

//===----------------------------------------------------------------------===//
// PresburgerSet
//===----------------------------------------------------------------------===//

PresburgerSet PresburgerSet::universe(std::size_t dim) {
  PresburgerSet p(dim);
  p.parts_.push_back(BasicSet(dim));
  return p;
}

PresburgerSet PresburgerSet::empty(std::size_t dim) {
  return PresburgerSet(dim);
}

PresburgerSet PresburgerSet::from_basic(BasicSet b) {
  PresburgerSet p(b.dim());
  p.add_disjunct(std::move(b));
  return p;
}

PresburgerSet PresburgerSet::orthant(std::size_t dim) {
  BasicSet b(dim);
  for (std::size_t i = 0; i < dim; ++i)
    b.add(Constraint::gt(unit_vec(dim, i), -1));
  PresburgerSet p = from_basic(std::move(b));
  p.positive_ = true;
  return p;
}

void PresburgerSet::add_disjunct(BasicSet b) {
  if (b.dim() != dim_)
    throw std::invalid_argument("disjunct dimension mismatch");
  if (b.normalize())
    parts_.push_back(std::move(b));
}

bool PresburgerSet::member(const IntVec &z) const {
  if (z.size() != dim_)
    throw std::invalid_argument("membership dimension mismatch");
  for (const BasicSet &b : parts_)
    if (b.holds(z))
      return true;
  return false;
}

static void check_same_dim(const PresburgerSet &p, const PresburgerSet &q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("set dimension mismatch");
}

PresburgerSet PresburgerSet::unite(const PresburgerSet &o) const {
  check_same_dim(*this, o);
  PresburgerSet r(dim_);
  r.parts_ = parts_;
  r.parts_.insert(r.parts_.end(), o.parts_.begin(), o.parts_.end());
  r.positive_ = positive_ && o.positive_;
  r.simplify();
  return r;
}

PresburgerSet PresburgerSet::intersect(const PresburgerSet &o) const {
  check_same_dim(*this, o);
  PresburgerSet r(dim_);
  for (const BasicSet &a : parts_)
    for (const BasicSet &b : o.parts_) {
      std::vector<Constraint> cons = a.constraints();
      cons.insert(cons.end(), b.constraints().begin(), b.constraints().end());
      r.add_disjunct(BasicSet(dim_, std::move(cons)));
    }
  r.positive_ = positive_ || o.positive_;
  r.simplify();
  return r;
}

PresburgerSet PresburgerSet::intersect(const BasicSet &o) const {
  return intersect(from_basic(o));
}

namespace {

// Appends pieces of a \ t, pairwise disjoint.
void subtract_basic(const BasicSet &a, const BasicSet &t,
                    std::vector<BasicSet> &out) {
  {
    std::vector<Constraint> both = a.constraints();
    both.insert(both.end(), t.constraints().begin(), t.constraints().end());
    if (!maybe_satisfiable(BasicSet(a.dim(), std::move(both)), kPruneBudget)) {
      out.push_back(a);
      return;
    }
  }
  BasicSet prefix = a;
  for (const Constraint &c : t.constraints()) {
    for (Constraint &n : negate(c)) {
      BasicSet piece = prefix;
      piece.add(std::move(n));
      if (piece.normalize() && maybe_satisfiable(piece, kPruneBudget))
        out.push_back(std::move(piece));
    }
    prefix.add(c);
    if (!prefix.normalize())
      return;
  }
}

} // namespace

PresburgerSet PresburgerSet::subtract(const PresburgerSet &o) const {
  check_same_dim(*this, o);
  PresburgerSet r(dim_);
  for (const BasicSet &a : parts_) {
    std::vector<BasicSet> pieces{a};
    for (const BasicSet &t : o.parts_) {
      std::vector<BasicSet> next;
      for (const BasicSet &p : pieces)
        subtract_basic(p, t, next);
      pieces = std::move(next);
      if (pieces.empty())
        break;
    }
    for (BasicSet &p : pieces)
      r.parts_.push_back(std::move(p));
  }
  r.positive_ = positive_;
  r.simplify();
  return r;
}

PresburgerSet PresburgerSet::complement() const {
  return universe(dim_).subtract(*this);
}

PresburgerSet PresburgerSet::project_out(const std::vector<bool> &mask) const {
  if (mask.size() != dim_)
    throw std::invalid_argument("projection mask dimension mismatch");
  std::vector<BasicSet> res;
  for (const BasicSet &b : parts_)
    project_basic(b, mask, res);
  std::size_t kept = std::count(mask.begin(), mask.end(), false);
  PresburgerSet r(kept);
  for (BasicSet &b : res) {
    BasicSet cur = std::move(b);
    for (std::size_t x = dim_; x-- > 0;)
      if (mask[x])
        cur = drop_column(cur, x);
    r.parts_.push_back(std::move(cur));
  }
  r.simplify();
  return r;
}

PresburgerSet PresburgerSet::eliminate(std::size_t i) const {
  if (i >= dim_)
    throw std::invalid_argument("eliminate: coordinate out of range");
  std::vector<bool> mask(dim_, false);
  mask[i] = true;
  return project_out(mask);
}

PresburgerSet PresburgerSet::affine_preimage(const IntMat &a,
                                             const IntVec &q) const {
  if (a.rows() != dim_ || q.size() != dim_)
    throw std::invalid_argument("affine_preimage shape mismatch");
  std::size_t m = a.cols();
  PresburgerSet r(m);
  for (const BasicSet &b : parts_) {
    std::vector<Constraint> cons;
    for (const Constraint &c : b.constraints()) {
      Constraint n = c;
      n.u = zero_vec(m);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (c.u[i] == 0)
          continue;
        for (std::size_t j = 0; j < m; ++j)
          if (a.at(i, j) != 0)
            n.u[j] += c.u[i] * a.at(i, j);
      }
      n.a = c.a - dot(c.u, q);
      cons.push_back(std::move(n));
    }
    r.add_disjunct(BasicSet(m, std::move(cons)));
  }
  r.simplify();
  return r;
}

PresburgerSet PresburgerSet::affine_image(const IntMat &a,
                                          const IntVec &q) const {
  if (a.cols() != dim_ || q.size() != a.rows())
    throw std::invalid_argument("affine_image shape mismatch");
  std::size_t mp = a.rows(), tot = dim_ + mp;
  // Graph in coordinates (x, y) with y = A x + q.
  PresburgerSet g = insert_dims(dim_, mp);
  BasicSet graph(tot);
  for (std::size_t i = 0; i < mp; ++i) {
    IntVec u = zero_vec(tot);
    for (std::size_t j = 0; j < dim_; ++j)
      u[j] = -a.at(i, j);
    u[dim_ + i] = 1;
    graph.add(Constraint::eq(std::move(u), q[i]));
  }
  g = g.intersect(graph);
  std::vector<bool> mask(tot, false);
  for (std::size_t j = 0; j < dim_; ++j)
    mask[j] = true;
  return g.project_out(mask);
}

PresburgerSet PresburgerSet::insert_dims(std::size_t pos, std::size_t k) const {
  if (pos > dim_)
    throw std::invalid_argument("insert_dims position out of range");
  PresburgerSet r(dim_ + k);
  for (const BasicSet &b : parts_) {
    std::vector<Constraint> cons;
    for (const Constraint &c : b.constraints()) {
      Constraint n = c;
      n.u.insert(n.u.begin() + pos, k, Int(0));
      cons.push_back(std::move(n));
    }
    r.parts_.push_back(BasicSet(dim_ + k, std::move(cons)));
  }
  return r;
}

bool PresburgerSet::is_empty() const {
  for (const BasicSet &b : parts_)
    if (is_satisfiable(b))
      return false;
  return true;
}

void PresburgerSet::simplify() {
  std::vector<BasicSet> ps;
  for (BasicSet &b : parts_)
    if (b.normalize())
      ps.push_back(std::move(b));
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  // Fewer constraints first, so subsuming sets are seen before subsumed ones.
  std::stable_sort(ps.begin(), ps.end(), [](const BasicSet &x, const BasicSet &y) {
    return x.constraints().size() < y.constraints().size();
  });
  std::vector<BasicSet> kept;
  for (BasicSet &b : ps) {
    bool sub = false;
    if (ps.size() <= 4000)
      for (const BasicSet &k : kept)
        if (subsumes(k, b)) {
          sub = true;
          break;
        }
    if (sub)
      continue;
    if (!maybe_satisfiable(b, kPruneBudget))
      continue;
    kept.push_back(std::move(b));
  }
  parts_ = std::move(kept);
}

std::string PresburgerSet::str() const {
  if (parts_.empty())
    return "{ }";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      s += " | ";
    s += parts_[i].str();
  }
  return s;
}

PresburgerSet unite(const PresburgerSet &p, const PresburgerSet &q) {
  return p.unite(q);
}
PresburgerSet intersect(const PresburgerSet &p, const PresburgerSet &q) {
  return p.intersect(q);
}
PresburgerSet complement(const PresburgerSet &p) { return p.complement(); }
PresburgerSet eliminate(const PresburgerSet &p, std::size_t i) {
  return p.eliminate(i);
}
PresburgerSet affine_preimage(const PresburgerSet &p, const IntMat &a,
                              const IntVec &q) {
  return p.affine_preimage(a, q);
}
PresburgerSet affine_image(const PresburgerSet &p, const IntMat &a,
                           const IntVec &q) {
  return p.affine_image(a, q);
}
bool is_empty(const PresburgerSet &p) { return p.is_empty(); }

//===----------------------------------------------------------------------===//
// Enumeration
//===----------------------------------------------------------------------===//

namespace {

// Depth-first enumeration of {p >= 0 : w.p <= N} intersected with P. A
// disjunct is discarded as soon as one of its constraints cannot hold for
// any completion of the current prefix inside the weight simplex.
template <typename T> class Enumerator {
public:
  struct Lin {
    Kind kind;
    std::vector<T> u;
    T a, b;
    std::size_t last; // largest coordinate with nonzero coefficient
  };

  Enumerator(const PresburgerSet &p, const std::vector<std::int64_t> &w,
             std::int64_t n)
      : m_(p.dim()), w_(w), n_(n) {
    for (const BasicSet &b : p.disjuncts()) {
      std::vector<Lin> cs;
      for (const Constraint &c : b.constraints()) {
        Lin l{c.kind, {}, conv(c.a), conv(c.b), 0};
        for (std::size_t i = 0; i < m_; ++i) {
          l.u.push_back(conv(c.u[i]));
          if (c.u[i] != 0)
            l.last = i;
        }
        cs.push_back(std::move(l));
      }
      parts_.push_back(std::move(cs));
    }
  }

  template <typename F> void run(F &&f) {
    if (parts_.empty())
      return;
    z_.assign(m_, T(0));
    std::vector<std::size_t> alive(parts_.size());
    for (std::size_t i = 0; i < alive.size(); ++i)
      alive[i] = i;
    dfs(0, 0, alive, f);
  }

private:
  static T conv(const Int &x) {
    if constexpr (std::is_same_v<T, Int>)
      return x;
    else
      return x.template convert_to<T>();
  }

  static T fdiv(T a, T b) {
    if constexpr (std::is_same_v<T, Int>) {
      return floor_div(a, b);
    } else {
      T q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
      return q;
    }
  }

  // Whether c can still hold for some completion of z_0..z_{k-1} whose
  // remaining coordinates have weight at most r.
  bool feasible(const Lin &c, std::size_t k, std::int64_t r) const {
    T fixed = 0;
    for (std::size_t i = 0; i < k && i <= c.last; ++i)
      if (c.u[i] != 0)
        fixed += c.u[i] * z_[i];
    if (c.last < k) {
      switch (c.kind) {
      case Kind::EQ:
        return fixed == c.a;
      case Kind::GT:
        return fixed > c.a;
      case Kind::CONG: {
        T d = (fixed - c.a) % c.b;
        return d == 0;
      }
      }
    }
    if (c.kind == Kind::CONG)
      return true;
    T hi = 0, lo = 0;
    for (std::size_t i = k; i <= c.last; ++i) {
      if (c.u[i] == 0)
        continue;
      // Bounds of u_i * z_i over the rational simplex w.z <= r.
      T num = c.u[i] * T(r);
      T up = fdiv(num, T(w_[i]));
      T down = -fdiv(-num, T(w_[i]));
      if (up > hi)
        hi = up;
      if (down < lo)
        lo = down;
    }
    if (c.kind == Kind::GT)
      return fixed + hi > c.a;
    return fixed + lo <= c.a && c.a <= fixed + hi;
  }

  template <typename F>
  void dfs(std::size_t k, std::int64_t used, const std::vector<std::size_t> &alive,
           F &f) {
    if (k == m_) {
      f(z_, used);
      return;
    }
    std::int64_t room = n_ - used;
    std::vector<std::size_t> next;
    for (std::int64_t v = 0; v * w_[k] <= room; ++v) {
      z_[k] = T(v);
      std::int64_t r = room - v * w_[k];
      next.clear();
      for (std::size_t d : alive) {
        bool ok = true;
        for (const Lin &c : parts_[d])
          if (c.last >= k && !feasible(c, k + 1, r)) {
            ok = false;
            break;
          }
        if (ok)
          next.push_back(d);
      }
      if (!next.empty())
        dfs(k + 1, used + v * w_[k], next, f);
    }
    z_[k] = T(0);
  }

  std::size_t m_;
  std::vector<std::int64_t> w_;
  std::int64_t n_;
  std::vector<std::vector<Lin>> parts_;
  std::vector<T> z_;
};

void check_enumerable(const PresburgerSet &p, const std::vector<std::int64_t> &w,
                      std::int64_t n) {
  if (!p.positive())
    throw std::invalid_argument("count_by_weight requires a positive set");
  if (w.size() != p.dim())
    throw std::invalid_argument("weight vector dimension mismatch");
  for (std::int64_t x : w)
    if (x < 1)
      throw std::invalid_argument("weights must be positive");
  if (n < 0)
    throw std::invalid_argument("negative maximum weight");
}

// Whether every intermediate value of the enumeration fits in 64 bits.
bool fits_machine_words(const PresburgerSet &p, std::int64_t n) {
  const Int lim = Int(1) << 24;
  if (n > (std::int64_t(1) << 24) || p.dim() > 256)
    return false;
  for (const BasicSet &b : p.disjuncts())
    for (const Constraint &c : b.constraints()) {
      if (abs(c.a) > lim || c.b > lim)
        return false;
      for (const Int &x : c.u)
        if (abs(x) > lim)
          return false;
    }
  return true;
}

} // namespace

std::vector<Int> count_by_weight(const PresburgerSet &p,
                                 const std::vector<std::int64_t> &w,
                                 std::int64_t max_weight) {
  check_enumerable(p, w, max_weight);
  std::vector<std::int64_t> counts(max_weight + 1, 0);
  if (fits_machine_words(p, max_weight)) {
    Enumerator<std::int64_t> e(p, w, max_weight);
    e.run([&](const std::vector<std::int64_t> &, std::int64_t wt) {
      ++counts[wt];
    });
  } else {
    Enumerator<Int> e(p, w, max_weight);
    e.run([&](const std::vector<Int> &, std::int64_t wt) { ++counts[wt]; });
  }
  return std::vector<Int>(counts.begin(), counts.end());
}

void for_each_point(const PresburgerSet &p, const std::vector<std::int64_t> &w,
                    std::int64_t max_weight,
                    const std::function<void(const IntVec &)> &f) {
  check_enumerable(p, w, max_weight);
  IntVec pt(p.dim());
  if (fits_machine_words(p, max_weight)) {
    Enumerator<std::int64_t> e(p, w, max_weight);
    e.run([&](const std::vector<std::int64_t> &z, std::int64_t) {
      for (std::size_t i = 0; i < z.size(); ++i)
        pt[i] = z[i];
      f(pt);
    });
  } else {
    Enumerator<Int> e(p, w, max_weight);
    e.run([&](const std::vector<Int> &z, std::int64_t) { f(IntVec(z)); });
  }
}

std::vector<PresburgerSet> disjointify(const PresburgerSet &p,
                                       const std::vector<PresburgerSet> &cover) {
  PresburgerSet seen = PresburgerSet::empty(p.dim());
  for (const PresburgerSet &x : cover)
    seen = seen.unite(x);
  if (!p.subtract(seen).is_empty())
    throw std::invalid_argument("disjointify: sets do not cover P");
  std::vector<PresburgerSet> out;
  PresburgerSet rest = p;
  for (const PresburgerSet &x : cover) {
    PresburgerSet y = rest.intersect(x);
    y.set_positive(p.positive());
    rest = rest.subtract(x);
    out.push_back(std::move(y));
  }
  return out;
}

} // namespace vag
