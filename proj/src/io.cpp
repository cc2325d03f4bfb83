#include "vag/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace vag {

namespace {

using nlohmann::json;

// DOM builder that keeps integer literals too large for 64 bits as strings
// instead of rounding them to doubles.
class BigIntDom : public nlohmann::detail::json_sax_dom_parser<json> {
public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_unsigned(number_unsigned_t v) {
    if (v > static_cast<number_unsigned_t>(INT64_MAX)) {
      std::string s = std::to_string(v);
      return Base::string(s);
    }
    return Base::number_unsigned(v);
  }

  bool number_float(number_float_t v, const string_t &lexeme) {
    if (lexeme.find_first_of(".eE") == std::string::npos) {
      std::string s = lexeme;
      return Base::string(s);
    }
    return Base::number_float(v, lexeme);
  }
};

json parse_json(const std::string &text, const std::string &source) {
  json root;
  BigIntDom dom(root, true);
  try {
    json::sax_parse(text, &dom);
  } catch (const json::exception &e) {
    throw ParseError(source + ": malformed JSON: " + e.what());
  }
  return root;
}

struct Ctx {
  std::string source;
  [[noreturn]] void fail(const std::string &where, const std::string &msg) const {
    throw ParseError(source + ": " + where + ": " + msg);
  }
};

const json &field(const Ctx &c, const json &obj, const std::string &where,
                  const char *key) {
  if (!obj.is_object())
    c.fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    c.fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Int get_int(const Ctx &c, const json &v, const std::string &where) {
  if (v.is_number_integer())
    return v.is_number_unsigned() ? Int(v.get<std::uint64_t>())
                                  : Int(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const std::invalid_argument &) {
    }
  }
  c.fail(where, "expected an integer");
}

std::size_t get_index(const Ctx &c, const json &v, const std::string &where,
                      std::size_t limit) {
  Int x = get_int(c, v, where);
  if (x < 0 || x >= limit)
    c.fail(where, "index " + x.str() + " out of range [0, " +
                      std::to_string(limit) + ")");
  return x.convert_to<std::size_t>();
}

IntVec get_vec(const Ctx &c, const json &v, const std::string &where,
               std::size_t n) {
  if (!v.is_array())
    c.fail(where, "expected an array of " + std::to_string(n) + " integers");
  if (v.size() != n)
    c.fail(where, "expected length " + std::to_string(n) + ", got " +
                      std::to_string(v.size()));
  IntVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_int(c, v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const json &get_array(const Ctx &c, const json &v, const std::string &where,
                      std::size_t n) {
  if (!v.is_array())
    c.fail(where, "expected an array");
  if (v.size() != n)
    c.fail(where, "expected " + std::to_string(n) + " entries, got " +
                      std::to_string(v.size()));
  return v;
}

GroupElement get_element(const Ctx &c, const json &g, const std::string &where,
                         std::size_t n, std::size_t d) {
  GroupElement e;
  e.vec = get_vec(c, field(c, g, where, "vector"), where + ".vector", n);
  e.coset = get_index(c, field(c, g, where, "coset"), where + ".coset", d);
  return e;
}

} // namespace

GroupFile parse_group(const std::string &text, const std::string &source) {
  Ctx c{source};
  json root = parse_json(text, source);
  GroupFile out;
  VAGroupData &g = out.data;
  Int n = get_int(c, field(c, root, "root", "rank"), "rank");
  Int d = get_int(c, field(c, root, "root", "transversal"), "transversal");
  if (n < 0 || n > 64)
    c.fail("rank", "must lie in [0, 64]");
  if (d < 1 || d > 4096)
    c.fail("transversal", "must lie in [1, 4096]");
  g.n = n.convert_to<std::size_t>();
  g.d = d.convert_to<std::size_t>();

  const json &delta = get_array(c, field(c, root, "root", "delta"), "delta", g.d);
  for (std::size_t t = 0; t < g.d; ++t) {
    std::string where = "delta[" + std::to_string(t) + "]";
    const json &m = delta[t];
    // Accept both a flat row-major list and a list of rows.
    IntMat mat(g.n, g.n);
    if (m.is_array() && m.size() == g.n * g.n &&
        (g.n == 0 || !m[0].is_array())) {
      IntVec flat = get_vec(c, m, where, g.n * g.n);
      for (std::size_t i = 0; i < g.n * g.n; ++i)
        mat.at(i / g.n, i % g.n) = flat[i];
    } else {
      const json &rows = get_array(c, m, where, g.n);
      for (std::size_t i = 0; i < g.n; ++i)
        mat.set_row(i, get_vec(c, rows[i], where + "[" + std::to_string(i) + "]",
                               g.n));
    }
    g.delta.push_back(std::move(mat));
  }

  const json &tau = get_array(c, field(c, root, "root", "tau"), "tau", g.d);
  g.tau.assign(g.d, std::vector<std::size_t>(g.d, 0));
  for (std::size_t s = 0; s < g.d; ++s) {
    std::string where = "tau[" + std::to_string(s) + "]";
    const json &row = get_array(c, tau[s], where, g.d);
    for (std::size_t t = 0; t < g.d; ++t)
      g.tau[s][t] = get_index(c, row[t], where + "[" + std::to_string(t) + "]", g.d);
  }

  const json &coc = get_array(c, field(c, root, "root", "cocycle"), "cocycle", g.d);
  g.cocycle.assign(g.d, std::vector<IntVec>(g.d));
  for (std::size_t s = 0; s < g.d; ++s) {
    std::string where = "cocycle[" + std::to_string(s) + "]";
    const json &row = get_array(c, coc[s], where, g.d);
    for (std::size_t t = 0; t < g.d; ++t)
      g.cocycle[s][t] =
          get_vec(c, row[t], where + "[" + std::to_string(t) + "]", g.n);
  }

  const json &gens = field(c, root, "root", "generators");
  if (!gens.is_array())
    c.fail("generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string where = "generators[" + std::to_string(i) + "]";
    Generator s;
    s.element = get_element(c, gens[i], where, g.n, g.d);
    Int w = get_int(c, field(c, gens[i], where, "weight"), where + ".weight");
    if (w < 1 || w > Int(1) << 40)
      c.fail(where + ".weight", "must be a positive integer below 2^40");
    s.weight = w.convert_to<std::int64_t>();
    if (gens[i].contains("name")) {
      if (!gens[i]["name"].is_string())
        c.fail(where + ".name", "expected a string");
      s.name = gens[i]["name"].get<std::string>();
    } else {
      s.name = "s" + std::to_string(i);
    }
    out.gens.push_back(std::move(s));
  }
  return out;
}

std::vector<GroupElement> parse_subgroup(const std::string &text, std::size_t n,
                                         std::size_t d,
                                         const std::string &source) {
  Ctx c{source};
  json root = parse_json(text, source);
  const json &gens = field(c, root, "root", "generators");
  if (!gens.is_array())
    c.fail("generators", "expected an array");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(get_element(c, gens[i],
                              "generators[" + std::to_string(i) + "]", n, d));
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupFile load_group(const std::string &path) {
  return parse_group(read_file(path), path);
}

std::vector<GroupElement> load_subgroup(const std::string &path, std::size_t n,
                                        std::size_t d) {
  return parse_subgroup(read_file(path), n, d, path);
}

std::string int_list(const std::vector<Int> &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

} // namespace vag
