#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirflow/distances.hpp"
#include "dirflow/rational.hpp"

namespace dirflow {

// Point of R^{S^c u S^r}: a column part and a row part over the ground set.
struct LabeledPoint {
  std::vector<std::string> base;
  std::vector<Rational> column;
  std::vector<Rational> row;

  int size() const { return (int)base.size(); }
  bool operator==(const LabeledPoint& o) const = default;
};

LabeledPoint make_point(std::vector<std::string> base, std::vector<Rational> column,
                        std::vector<Rational> row);

// Bipartite graph of tight defining inequalities at a point.
struct TightnessGraph {
  int n = 0;
  std::vector<std::vector<char>> edge;  // edge[s][t] <=> p(s^c)+p(t^r) = mu(s,t)

  // Component labels over the 2n nodes: columns 0..n-1, rows n..2n-1.
  std::vector<int> components() const;
  int num_components() const;
  bool isolated_column(int s) const;
  bool isolated_row(int t) const;
  // N_p(U): rows adjacent to the given column set (and symmetrically).
  uint32_t row_neighbors(uint32_t column_mask) const;
  uint32_t column_neighbors(uint32_t row_mask) const;
};

TightnessGraph tightness_graph(const DirectedDistance& mu, const LabeledPoint& p);

struct PointClassification {
  bool in_P = false;
  bool in_P_plus = false;
  bool in_Q = false;
  bool in_T = false;
  bool in_Q_slim = false;
  std::optional<int> face_dim_T;  // local face dimension within the tight span
  std::optional<int> face_dim_Q;  // local dimension within the tropical polytope
  std::vector<int> terminal_regions;  // s with p(s^c)+p(s^r) = 0
  std::optional<uint32_t> fat_relative_to;
  std::optional<uint32_t> degenerate_relative_to;
  // Local dimension in the slimmed tropical polytope (degenerate-set
  // directions collapsed); set when in_Q_slim.
  std::optional<int> slim_local_dim;
};

PointClassification classify_point(const DirectedDistance& mu,
                                   const LabeledPoint& p);

// The distinguished point made of the s-column and s-row of mu.
LabeledPoint column_row_point(const DirectedDistance& mu, int s);

struct LiftResult {
  LabeledPoint point;
  bool in_q = false;  // whether the lift certifies membership
};
// Lift a column part by the max-residual row formula and re-classify.
LiftResult lift_column(const DirectedDistance& mu, const std::vector<Rational>& q);

Rational directed_linf_plus(const std::vector<Rational>& p,
                            const std::vector<Rational>& q);
Rational directed_linf(const LabeledPoint& p, const LabeledPoint& q);

// Perturbation form of the fat test (one-sided epsilon move stays inside);
// cross-checked against the neighborhood definition in tests.
bool is_fat_by_perturbation(const DirectedDistance& mu, const LabeledPoint& p);

enum class WitnessTarget { TightSpan, SlimTropical };
enum class WitnessStatus { Found, NoneFound, BudgetExhausted };

struct WitnessResult {
  WitnessStatus status = WitnessStatus::NoneFound;
  std::optional<LabeledPoint> point;
  int dim = 0;
  int states_visited = 0;
};

// Searches for a point of the target complex with local dimension >= 2 by
// seeding from column-row points and lifted barycenters, then walking the
// face structure with exact one-sided perturbations. "NoneFound" is a search
// outcome, never a dimension certificate.
WitnessResult dim_witness_search(const DirectedDistance& mu, WitnessTarget target,
                                 int max_states = 4000);

}  // namespace dirflow
