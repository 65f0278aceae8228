#pragma once

#include <vector>

#include "dirflow/distances.hpp"

namespace fixtures {

using dirflow::DirectedDistance;
using dirflow::Rational;

inline DirectedDistance table(std::vector<std::string> names,
                              std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> values;
  for (auto& r : rows) {
    std::vector<Rational> row;
    for (long v : r) row.push_back(Rational(v));
    values.push_back(std::move(row));
  }
  return dirflow::make_distance(std::move(names), std::move(values));
}

// The tight-but-not-cyclically-tight extension table over {s,t,u,v}.
inline DirectedDistance tight_extension_table() {
  return table({"s", "t", "u", "v"}, {{0, 1, 1, 0},
                                      {1, 0, 1, 0},
                                      {0, 0, 0, 0},
                                      {1, 1, 1, 0}});
}

// Its companion extension with the zeroed last row.
inline DirectedDistance slack_extension_table() {
  return table({"s", "t", "u", "v"}, {{0, 1, 1, 1},
                                      {1, 0, 1, 1},
                                      {0, 0, 0, 0},
                                      {0, 0, 0, 0}});
}

inline DirectedDistance symmetric_pair_weight() {
  return table({"s", "t"}, {{0, 1}, {1, 0}});
}

inline DirectedDistance two_commodity_weight() {
  return table({"s1", "t1", "s2", "t2"}, {{0, 1, 0, 0},
                                          {0, 0, 0, 0},
                                          {0, 0, 0, 1},
                                          {0, 0, 0, 0}});
}

}  // namespace fixtures
