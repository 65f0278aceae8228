#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirflow/rational.hpp"

namespace dirflow {

// Square matrix of exact rationals over an ordered ground set, with zero
// diagonal and nonnegative entries. Houses terminal weights and metrics alike.
struct DirectedDistance {
  std::vector<std::string> elements;
  std::vector<std::vector<Rational>> values;

  int size() const { return (int)elements.size(); }
  const Rational& at(int i, int j) const { return values[i][j]; }
  Rational& at(int i, int j) { return values[i][j]; }
  int index_of(const std::string& id) const;

  bool operator==(const DirectedDistance& o) const = default;
};

// Throws std::invalid_argument unless zero-diagonal and nonnegative.
DirectedDistance make_distance(std::vector<std::string> elements,
                               std::vector<std::vector<Rational>> values);
DirectedDistance zero_distance(std::vector<std::string> elements);
DirectedDistance all_one_distance(std::vector<std::string> elements);

// Ordered pair of disjoint subsets of a ground set, as bitmasks.
struct PartialCut {
  uint32_t a = 0;
  uint32_t b = 0;

  bool operator==(const PartialCut& o) const = default;
  bool valid(int ground_size) const;
  bool full(int ground_size) const;
};

// The four-case laminarity test for partial cuts.
bool cuts_laminar(const PartialCut& x, const PartialCut& y);

struct LaminarDecomposition {
  std::vector<PartialCut> cuts;
  std::vector<Rational> weights;  // positive, parallel to cuts
};

// Checks pairwise laminarity, positivity, and exact re-sum to mu.
bool validate_decomposition(const LaminarDecomposition& dec,
                            const DirectedDistance& mu);

bool is_metric(const DirectedDistance& d);

DirectedDistance cut_distance(const PartialCut& cut,
                              const std::vector<std::string>& ground);

// Node classes of x~y <=> d(xy)=d(yx)=0, and the extremal edge classes.
struct ExtremalClasses {
  std::vector<int> node_class;                    // node index -> class id
  int num_node_classes = 0;
  std::vector<std::pair<int, int>> extremal;      // (from class, to class)
};
ExtremalClasses extremal_classes(const DirectedDistance& d);

struct MinimalityStatus {
  bool minimal = false;
  bool c_minimal = false;
};
// Requires d metric on the same ground set with d >= mu entrywise.
MinimalityStatus minimality_status(const DirectedDistance& d,
                                   const DirectedDistance& mu);

struct ExtensionStatus {
  bool tight = false;
  bool cyclically_tight = false;
};
// d is a metric on V extending mu on S (matched by element id).
ExtensionStatus extension_status(const DirectedDistance& d,
                                 const DirectedDistance& mu);

DirectedDistance gamma_metric(int n);

struct ExtremalityStatus {
  bool extreme = false;
  bool c_extreme = false;
};
// Rank test on the tight-constraint system of the metric cone; the
// cyclic variant works modulo the potential-difference space.
ExtremalityStatus extremality_status(const DirectedDistance& d);

// Exact rank of a rational matrix (Gaussian elimination).
int matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace dirflow
