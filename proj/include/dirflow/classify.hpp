#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirflow/distances.hpp"
#include "dirflow/rational.hpp"

namespace dirflow {

// Segments [a_s, b_s] on the line with mu(s,t) = (a_t - b_s)_+ exactly.
struct IntervalRepresentation {
  std::vector<Rational> a;
  std::vector<Rational> b;
};

struct IntervalResult {
  std::optional<IntervalRepresentation> rep;
  // Constraint cycle witnessing infeasibility (variable names), empty when rep.
  std::vector<std::string> negative_cycle;
};

IntervalResult interval_representation(const DirectedDistance& mu);

bool validate_interval(const IntervalRepresentation& rep,
                       const DirectedDistance& mu);

// Oriented tree with rational edge lengths; one-way distances ignore edges
// traversed against their direction.
struct OrientedTree {
  struct Edge {
    int tail = 0;
    int head = 0;
  };
  int num_nodes = 0;
  std::vector<Edge> edges;
  std::vector<Rational> alpha;
};

Rational tree_distance(const OrientedTree& tree, int u, int v);

struct OrientedTreeRealization {
  OrientedTree tree;
  std::vector<std::string> terminals;
  std::vector<std::vector<int>> subtrees;  // node set per terminal
};

Rational subtree_distance(const OrientedTreeRealization& real, int s, int t);
bool validate_realization(const OrientedTreeRealization& real,
                          const DirectedDistance& mu);

enum class RealizationStatus { Found, None, BudgetExceeded };

struct RealizationResult {
  RealizationStatus status = RealizationStatus::None;
  std::optional<OrientedTreeRealization> realization;
  std::optional<LaminarDecomposition> decomposition;
};

// Complete search for a laminar cut decomposition; converts a found family
// into a tree realization. "None" is a certificate within the budget.
RealizationResult oriented_tree_realization(const DirectedDistance& mu,
                                            int budget = 8);

// Builds the tree realization of a laminar family directly (unit handling of
// duplicates: weights merge).
OrientedTreeRealization realization_from_decomposition(
    const LaminarDecomposition& dec, const std::vector<std::string>& ground);

LaminarDecomposition cut_decomposition(const OrientedTreeRealization& real);

struct ProperTerminals {
  std::vector<int> terminals;  // indices into the ground set
  bool conservative = false;   // true when no realization was supplied
};
ProperTerminals proper_terminals(const DirectedDistance& mu,
                                 const std::optional<OrientedTreeRealization>& real);

// Simple loopless digraph for commodity recognition.
struct Digraph {
  std::vector<std::string> names;
  std::vector<std::vector<char>> adj;

  int size() const { return (int)names.size(); }
};

struct QuasiCompletePart {
  uint32_t complete_part = 0;  // T as a bitmask
  bool source_type = false;
};

struct CommodityRecognition {
  std::optional<QuasiCompletePart> quasi_complete;
  std::optional<Digraph> multipartite_base;  // twin-collapsed base, if useful
  std::optional<QuasiCompletePart> base_quasi_complete;

  bool succeeds() const {
    return quasi_complete.has_value() || base_quasi_complete.has_value();
  }
};

CommodityRecognition recognize_commodity_graph(const Digraph& h);

DirectedDistance commodity_to_distance(const Digraph& h);

}  // namespace dirflow
