#pragma once

#include <string>
#include <vector>

#include "dirflow/rational.hpp"

namespace dirflow {

// Directed capacitated multigraph with a terminal subset. Immutable value
// type; solvers copy what they mutate.
struct Network {
  struct Edge {
    int tail = 0;
    int head = 0;
    long long cap = 0;
  };

  std::vector<std::string> nodes;
  std::vector<int> terminals;  // node indices, sorted
  std::vector<Edge> edges;

  int size() const { return (int)nodes.size(); }
  int node_index(const std::string& id) const;
  bool is_terminal(int v) const;
};

Network make_network(std::vector<std::string> nodes, std::vector<int> terminals,
                     std::vector<Network::Edge> edges);

struct EulerianStatus {
  bool inner = false;
  bool totally = false;
  bool properly_inner = false;
  std::vector<int> violating;  // nodes where out-capacity != in-capacity
};
EulerianStatus eulerian_status(const Network& net,
                               const std::vector<int>& proper_terminals = {});

struct MaxFlowResult {
  long long value = 0;
  std::vector<long long> flow;       // per edge of the network
  std::vector<char> source_side;     // residual reachability, per node
};
// Max A->B flow; A and B are disjoint node sets (either may be empty).
MaxFlowResult max_flow(const Network& net, const std::vector<int>& A,
                       const std::vector<int>& B);

struct MinCutResult {
  long long value = 0;
  std::vector<int> x;  // inclusion-minimal minimizer, sorted node indices
};
MinCutResult min_cut(const Network& net, const std::vector<int>& A,
                     const std::vector<int>& B);

// Capacity leaving node set X (given as membership flags).
long long cut_capacity(const Network& net, const std::vector<char>& in_x);

struct CirculationResult {
  std::vector<long long> circulation;  // per edge
  long long total_cost = 0;
};
// Integral min-cost circulation by negative-cycle canceling.
CirculationResult min_cost_circulation(const Network& net,
                                       const std::vector<long long>& cost);
// True when the residual graph of the circulation has no negative cycle.
bool circulation_is_optimal(const Network& net, const std::vector<long long>& cost,
                            const std::vector<long long>& circulation);

template <typename Value>
struct Decomposition {
  struct Item {
    std::vector<int> nodes;  // cycle: first node repeats implicitly
    Value multiplicity;
  };
  std::vector<Item> cycles;
  std::vector<Item> paths;  // node sequences from terminal to terminal
};
using FlowDecomposition = Decomposition<long long>;
using RationalDecomposition = Decomposition<Rational>;

// Decomposes the capacity function of an inner Eulerian network into cycles
// and S-paths; throws if the network is not inner Eulerian.
FlowDecomposition decompose_eulerian_capacity(const Network& net);

// Decomposes a rational edge flow conserving at inner nodes (or everywhere,
// in cycles-only mode) into paths and cycles with exact multiplicities.
RationalDecomposition decompose_flow(const std::vector<Rational>& flow,
                                     const Network& net, bool cycles_only = false);

}  // namespace dirflow
