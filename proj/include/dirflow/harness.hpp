#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dirflow/classify.hpp"
#include "dirflow/distances.hpp"
#include "dirflow/network.hpp"
#include "dirflow/solvers.hpp"

namespace dirflow {

enum class EulerianMode { None, Inner, Totally, ProperlyInner };
enum class WeightMode {
  RandomDistance,
  RandomMetric,
  TreeRealizable,
  IntervalRepresentable,
  CommodityGraph,
  TwoCommodity,
  AllOne,
};

struct InstanceSpec {
  uint64_t seed = 0;
  int terminal_count = 3;
  int inner_count = 2;
  int cycle_count = 3;
  int path_count = 2;
  long long capacity_bound = 3;
  bool integer_weights = false;  // restrict generated weights to integers
  EulerianMode eulerian_mode = EulerianMode::Inner;
  WeightMode weight_mode = WeightMode::RandomDistance;
};

struct Instance {
  Network net;
  DirectedDistance mu;
  // Filled for constructive weight modes.
  std::optional<OrientedTreeRealization> realization;
  std::optional<IntervalRepresentation> interval;
};

// Deterministic from the seed; the requested Eulerian and weight modes are
// established constructively and re-checkable by the predicate modules.
Instance generate(const InstanceSpec& spec);

// Independent exact optimum for tiny instances: its own path enumeration and
// a different pivot rule, kept apart from solve_path_lp.
Rational oracle_mfp(const DirectedDistance& mu, const Network& net,
                    int node_budget = 6);

struct ProbeItem {
  uint64_t seed = 0;
  Rational value;
  mpz_class value_den = 1;
  mpz_class max_lambda_den = 1;
  bool methods_agree = true;
};

struct ProbeReport {
  std::vector<ProbeItem> items;
  mpz_class max_value_den = 1;
  mpz_class max_lambda_den = 1;
  // Count of items whose lambda denominator exceeds k.
  int items_beyond_k = 0;
};

// Exact denominators of optimal values and optimal vertex multiflows over a
// seeded batch; tree-realizable batches are solved with the integral solver.
ProbeReport denominator_probe(const InstanceSpec& base, int count, long long k);

}  // namespace dirflow
