// vag: growth series of virtually abelian groups.

#include "vag/growth.hpp"
#include "vag/io.hpp"
#include "vag/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

using namespace vag;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUncertified = 2, kMismatch = 3 };

struct Config {
  std::string group;
  std::vector<std::string> subgroups;
  std::string mode = "standard";
  std::int64_t max_weight = 12;
  std::size_t guard = 16;
  std::size_t max_den_degree = 64;
  std::string format = "text";
  bool full_genset = false;
};

class Failure : public std::runtime_error {
public:
  Failure(Exit code, const std::string &msg)
      : std::runtime_error(msg), code(code) {}
  Exit code;
};

nlohmann::json int_json(const std::vector<Int> &v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int &x : v) {
    if (x >= Int(INT64_MIN) && x <= Int(INT64_MAX))
      a.push_back(x.convert_to<std::int64_t>());
    else
      a.push_back(to_string(x));
  }
  return a;
}

struct Loaded {
  GroupFile file;
  std::optional<VAGroup> group;
  std::vector<SubgroupResolved> subs;
};

Loaded load(const Config &cfg) {
  Loaded l;
  try {
    l.file = load_group(cfg.group);
  } catch (const ParseError &e) {
    throw Failure(kInvalid, e.what());
  }
  std::vector<std::string> errs = validate(l.file.data, l.file.gens);
  if (!errs.empty()) {
    std::string msg;
    for (const std::string &e : errs)
      msg += cfg.group + ": " + e + "\n";
    msg.pop_back();
    throw Failure(kInvalid, msg);
  }
  l.group.emplace(l.file.data);
  for (const std::string &path : cfg.subgroups) {
    try {
      l.subs.push_back(resolve_subgroup(
          *l.group, load_subgroup(path, l.group->rank(), l.group->index())));
    } catch (const ParseError &e) {
      throw Failure(kInvalid, e.what());
    }
  }
  return l;
}

void need_subgroups(const Config &cfg, std::size_t lo, std::size_t hi) {
  if (cfg.subgroups.size() < lo || cfg.subgroups.size() > hi)
    throw Failure(kInvalid,
                  lo == hi ? "expected " + std::to_string(lo) + " subgroup file(s)"
                           : "expected at least " + std::to_string(lo) +
                                 " subgroup file(s)");
}

GrowthOptions options(const Config &cfg) {
  GrowthOptions o;
  o.max_weight = cfg.max_weight;
  o.guard = cfg.guard;
  o.max_den_degree = cfg.max_den_degree;
  o.reduce = !cfg.full_genset;
  return o;
}

SeriesResult run_engine(const Config &cfg, const std::string &mode, Loaded &l) {
  GrowthEngine eng(*l.group, l.file.gens, options(cfg));
  try {
    if (mode == "standard") {
      need_subgroups(cfg, 0, 0);
      return eng.standard_series();
    }
    if (mode == "relative") {
      need_subgroups(cfg, 1, SIZE_MAX);
      if (l.subs.size() == 1)
        return eng.relative_series(l.subs[0]);
      return eng.relative_series_union(l.subs);
    }
    if (mode == "coset") {
      need_subgroups(cfg, 1, 1);
      return eng.coset_series(l.subs[0]);
    }
    if (mode == "conjugacy") {
      need_subgroups(cfg, 0, 0);
      return eng.conjugacy_series();
    }
  } catch (const InsufficientData &e) {
    throw Failure(kUncertified, e.what());
  }
  throw Failure(kInvalid, "unknown mode " + mode);
}

SeriesPrefix run_oracle(const Config &cfg, const std::string &mode, Loaded &l) {
  std::vector<const SubgroupResolved *> hs;
  for (const SubgroupResolved &h : l.subs)
    hs.push_back(&h);
  Ball b = ball(*l.group, l.file.gens, cfg.max_weight);
  if (mode == "standard") {
    need_subgroups(cfg, 0, 0);
    return oracle_counts(b, *l.group, OracleMode::Standard, nullptr);
  }
  if (mode == "relative") {
    need_subgroups(cfg, 1, SIZE_MAX);
    if (hs.size() == 1)
      return oracle_counts(b, *l.group, OracleMode::Relative, hs[0]);
    SeriesPrefix c(cfg.max_weight + 1, Int(0));
    for (const GroupElement &x : b.order)
      for (const SubgroupResolved *h : hs)
        if (subgroup_member(*l.group, *h, x)) {
          ++c[b.weight.at(x)];
          break;
        }
    return c;
  }
  if (mode == "coset") {
    need_subgroups(cfg, 1, 1);
    return oracle_counts(b, *l.group, OracleMode::Coset, hs[0]);
  }
  if (mode == "conjugacy") {
    need_subgroups(cfg, 0, 0);
    return oracle_counts(b, *l.group, OracleMode::Conjugacy, nullptr);
  }
  throw Failure(kInvalid, "unknown mode " + mode);
}

void print_series(const Config &cfg, const std::string &command,
                  const std::optional<RationalFunction> &f,
                  const SeriesPrefix &c) {
  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = command;
    if (f) {
      j["numerator"] = int_json(f->num);
      j["denominator"] = int_json(f->den);
    }
    j["coefficients"] = int_json(c);
    std::cout << j.dump() << "\n";
    return;
  }
  if (f) {
    std::cout << "numerator: " << int_list(f->num) << "\n";
    std::cout << "denominator: " << int_list(f->den) << "\n";
  }
  std::cout << "coefficients: " << int_list(c) << "\n";
}

Exit run(const std::string &command, const Config &cfg) {
  if (cfg.max_weight < 0)
    throw Failure(kInvalid, "--max-weight must be nonnegative");
  if (cfg.guard < 1)
    throw Failure(kInvalid, "--guard must be at least 1");
  Loaded l = load(cfg);
  if (command == "validate") {
    if (cfg.format == "json")
      std::cout << nlohmann::json{{"command", command}, {"valid", true}}.dump()
                << "\n";
    else
      std::cout << cfg.group << ": ok\n";
    return kOk;
  }
  if (command == "oracle") {
    print_series(cfg, command, std::nullopt, run_oracle(cfg, cfg.mode, l));
    return kOk;
  }
  if (command == "verify") {
    SeriesResult r = run_engine(cfg, cfg.mode, l);
    SeriesPrefix o = run_oracle(cfg, cfg.mode, l);
    std::optional<std::size_t> diff;
    for (std::size_t k = 0; k < o.size() && !diff; ++k)
      if (r.prefix[k] != o[k])
        diff = k;
    if (cfg.format == "json") {
      nlohmann::json j{{"command", command},
                       {"mode", cfg.mode},
                       {"numerator", int_json(r.function.num)},
                       {"denominator", int_json(r.function.den)},
                       {"coefficients", int_json(r.prefix)},
                       {"oracle", int_json(o)},
                       {"agree", !diff}};
      if (diff)
        j["first_difference"] = *diff;
      std::cout << j.dump() << "\n";
    } else {
      print_series(cfg, command, r.function, r.prefix);
      std::cout << "oracle: " << int_list(o) << "\n";
      if (diff)
        std::cout << "mismatch at weight " << *diff << ": engine "
                  << to_string(r.prefix[*diff]) << ", oracle "
                  << to_string(o[*diff]) << "\n";
      else
        std::cout << "agree up to weight " << cfg.max_weight << "\n";
    }
    return diff ? kMismatch : kOk;
  }
  SeriesResult r = run_engine(cfg, command == "growth" ? "standard" : command, l);
  print_series(cfg, command, r.function, r.prefix);
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Weighted growth series of virtually abelian groups"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App *sub, bool series) {
    sub->add_option("group", cfg.group, "group file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (!series)
      return;
    sub->add_option("--max-weight,-N", cfg.max_weight,
                    "report coefficients up to this weight");
    sub->add_option("--guard,-G", cfg.guard,
                    "extra coefficients that must agree with the fitted series");
    sub->add_option("--max-den-degree", cfg.max_den_degree,
                    "largest denominator degree tried");
    sub->add_flag("--full-genset", cfg.full_genset,
                  "use every product of up to d generators as a letter");
  };
  auto subs = [&](CLI::App *sub, bool many) {
    auto *o = sub->add_option("subgroup", cfg.subgroups, "subgroup file(s) (JSON)")
                  ->check(CLI::ExistingFile);
    if (!many)
      o->expected(0, 1);
  };
  auto mode = [&](CLI::App *sub) {
    sub->add_option("--mode", cfg.mode, "series to compute")
        ->check(CLI::IsMember({"standard", "relative", "coset", "conjugacy"}));
  };

  CLI::App *validate = app.add_subcommand("validate", "check group data and generators");
  common(validate, false);
  CLI::App *growth = app.add_subcommand("growth", "standard growth series");
  common(growth, true);
  CLI::App *relative = app.add_subcommand(
      "relative", "growth of a subgroup, or of a union of subgroups");
  common(relative, true);
  subs(relative, true);
  CLI::App *coset = app.add_subcommand("coset", "growth of the right cosets of a subgroup");
  common(coset, true);
  subs(coset, false);
  CLI::App *conj = app.add_subcommand("conjugacy", "conjugacy growth series");
  common(conj, true);
  CLI::App *oracle = app.add_subcommand("oracle", "brute-force coefficients");
  common(oracle, true);
  subs(oracle, true);
  mode(oracle);
  CLI::App *verify = app.add_subcommand("verify", "compare engine and brute force");
  common(verify, true);
  subs(verify, true);
  mode(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, cfg);
  } catch (const Failure &f) {
    std::cerr << f.what() << "\n";
    return f.code;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
