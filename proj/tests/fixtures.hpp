#pragma once

#include "vag/io.hpp"

#include <string>

namespace vag::test {

inline std::string fixture_path(const std::string &name) {
  return std::string(VAG_FIXTURE_DIR) + "/" + name;
}

struct Fixture {
  GroupFile file;
  VAGroup group;
  explicit Fixture(const std::string &name)
      : file(load_group(fixture_path(name + ".json"))), group(file.data) {}
  const WeightedGenSet &gens() const { return file.gens; }
  SubgroupResolved subgroup(const std::string &name) const {
    return resolve_subgroup(
        group, load_subgroup(fixture_path(name + ".json"), group.rank(),
                             group.index()));
  }
};

} // namespace vag::test
