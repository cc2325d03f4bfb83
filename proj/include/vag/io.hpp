#pragma once

#include "vag/group.hpp"
#include "vag/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vag {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GroupFile {
  VAGroupData data;
  WeightedGenSet gens;
};

/// Parses the group JSON format. Integers may be arbitrarily large, written
/// either as JSON numbers or as decimal strings. Errors name the source and
/// the offending field.
GroupFile parse_group(const std::string &text,
                      const std::string &source = "<input>");
GroupFile load_group(const std::string &path);

/// Parses a subgroup file against a group of rank n and index d.
std::vector<GroupElement> parse_subgroup(const std::string &text, std::size_t n,
                                         std::size_t d,
                                         const std::string &source = "<input>");
std::vector<GroupElement> load_subgroup(const std::string &path, std::size_t n,
                                        std::size_t d);

std::string read_file(const std::string &path);

/// "[1, -2, 3]"
std::string int_list(const std::vector<Int> &v);

} // namespace vag
