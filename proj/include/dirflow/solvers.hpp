#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirflow/classify.hpp"
#include "dirflow/distances.hpp"
#include "dirflow/network.hpp"
#include "dirflow/rational.hpp"

namespace dirflow {

// Thrown when a solver's Eulerian-style hypothesis fails; carries the
// violated condition.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Multiflow {
  std::vector<std::vector<int>> paths;  // node index sequences in the network
  std::vector<Rational> values;         // positive, parallel to paths
};

enum class SolveMethod { Lp, Tree, Mcc, Locking };

struct EdgeCutCertificate {
  PartialCut cut;          // terminal sides (over mu's element order)
  Rational alpha;
  long long cut_value = 0;
  std::vector<int> x;      // inclusion-minimal node set
};

struct SolveReport {
  Rational value;
  SolveMethod method = SolveMethod::Lp;
  bool optimum_certified = true;
  std::optional<Multiflow> multiflow;
  std::optional<DirectedDistance> dual_metric;  // on the node set
  std::vector<EdgeCutCertificate> tree_cuts;
  std::optional<Rational> location_optimum;     // brute-force cross-check
};

// Terminal names of the network, in mu's element order; throws when the
// network terminals do not carry exactly mu's ground set.
std::vector<int> terminal_nodes(const DirectedDistance& mu, const Network& net);

// Capacity feasibility at node-pair granularity (parallel edges aggregate).
// Returns the violated pair, or nullopt when feasible.
std::optional<std::pair<int, int>> feasibility_violation(const Multiflow& f,
                                                         const Network& net);

Rational flow_value(const DirectedDistance& mu, const Network& net,
                    const Multiflow& f);

// Exact LP dual: min sum c(xy) d(x,y) over metrics dominating mu on terminals.
SolveReport solve_lpd(const DirectedDistance& mu, const Network& net);

// Exact path-packing LP over all simple S-paths.
SolveReport solve_path_lp(const DirectedDistance& mu, const Network& net,
                          int node_budget = 10, int max_paths = 20000);

// Weighted min-cut sum over the tree realization's cuts; certifies the
// optimum only under the matching Eulerian hypothesis.
SolveReport solve_tree(const OrientedTreeRealization& real, const Network& net);

// Integral solver by unit expansion and value-preserving splitting-off.
SolveReport solve_tree_integral(const OrientedTreeRealization& real,
                                const Network& net);

// Integral solver via the min-cost-circulation reduction; works on every
// network once mu has an interval representation.
SolveReport solve_interval_mcc(const IntervalRepresentation& rep,
                               const DirectedDistance& mu, const Network& net);

// Integral multiflow locking a laminar family of partial cuts (masks over
// the network's terminal list sorted by node index).
SolveReport lock(const std::vector<PartialCut>& family, const Network& net);

bool verify_locking(const Multiflow& f, const std::vector<PartialCut>& family,
                    const Network& net);

// Distance realized by an oriented-tree realization.
DirectedDistance realization_distance(const OrientedTreeRealization& real);

// Brute-force discrete location optimum over node maps into the tree;
// nullopt when |VG| * |VGamma| exceeds the budget.
std::optional<Rational> tree_location_optimum(const OrientedTreeRealization& real,
                                              const Network& net,
                                              long long max_product = 64);

}  // namespace dirflow
