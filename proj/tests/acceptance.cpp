// Acceptance suite: one numbered check per theorem-level guarantee, each
// printing a single pass/fail line. Everything is exact rational arithmetic;
// a criterion passes only with zero tolerance.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <algorithm>
#include <vector>

#include "dirflow/geometry.hpp"
#include "dirflow/harness.hpp"
#include "dirflow/json_io.hpp"
#include "dirflow/solvers.hpp"

using namespace dirflow;

namespace {

struct Check {
  int failures = 0;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      std::cout << "    FAIL: " << what << "\n";
    }
  }
};

InstanceSpec spec_of(uint64_t seed, EulerianMode em, WeightMode wm, int terminals,
                     int inners) {
  InstanceSpec spec;
  spec.seed = seed;
  spec.terminal_count = terminals;
  spec.inner_count = inners;
  spec.eulerian_mode = em;
  spec.weight_mode = wm;
  return spec;
}

// 1. Max-flow equals min-cut equals the exhaustive minimum over X.
bool criterion_1() {
  Check check;
  std::mt19937_64 rng(10001);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 4 + (int)(rng() % 7);  // |V| <= 10
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    std::vector<Network::Edge> edges;
    int m = 3 + (int)(rng() % (3 * n));
    for (int i = 0; i < m; ++i) {
      int a = (int)(rng() % n), b = (int)(rng() % n);
      if (a != b) edges.push_back({a, b, (long long)(rng() % 4)});
    }
    Network net = make_network(nodes, {0, 1}, edges);

    MinCutResult mc = min_cut(net, {0}, {1});
    MaxFlowResult mf = max_flow(net, {0}, {1});

    long long best = -1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (!(mask & 1) || (mask >> 1 & 1)) continue;
      std::vector<char> in_x(n, 0);
      for (int v = 0; v < n; ++v) in_x[v] = mask >> v & 1;
      long long cut = cut_capacity(net, in_x);
      if (best < 0 || cut < best) best = cut;
    }
    check.expect(mf.value == mc.value, "max-flow != min-cut");
    check.expect(mc.value == best, "min-cut != exhaustive minimum");
  }
  return check.failures == 0;
}

// 2. Path LP, dual LP, and the independent oracle agree exactly.
bool criterion_2() {
  Check check;
  for (uint64_t seed = 2000; seed < 2100; ++seed) {
    int terminals = 3 + (int)(seed % 2);        // |S| <= 4
    int inners = (int)(seed % 5);               // |V| <= 8
    Instance inst = generate(spec_of(seed, EulerianMode::None,
                                     WeightMode::RandomDistance, terminals,
                                     inners));
    SolveReport primal = solve_path_lp(inst.mu, inst.net);
    SolveReport dual = solve_lpd(inst.mu, inst.net);
    Rational reference = oracle_mfp(inst.mu, inst.net, 9);
    check.expect(primal.value == dual.value, "primal != dual");
    check.expect(primal.value == reference, "primal != oracle");
  }
  return check.failures == 0;
}

// 3. Free multiflows: dual optimum equals the one-vs-rest cut sum and the
// splitting-off solver attains it integrally.
bool criterion_3() {
  Check check;
  for (uint64_t seed = 3000; seed < 3050; ++seed) {
    int terminals = 3 + (int)(seed % 2);
    InstanceSpec spec = spec_of(seed, EulerianMode::Inner, WeightMode::AllOne,
                                terminals, 1 + (int)(seed % 2));
    spec.cycle_count = 3;
    spec.path_count = 2;
    spec.capacity_bound = 2;
    Instance inst = generate(spec);

    auto term_node = terminal_nodes(inst.mu, inst.net);
    Rational cut_sum = 0;
    for (int s = 0; s < inst.mu.size(); ++s) {
      std::vector<int> rest;
      for (int t = 0; t < inst.mu.size(); ++t)
        if (t != s) rest.push_back(term_node[t]);
      cut_sum += rat_ll(min_cut(inst.net, {term_node[s]}, rest).value);
    }

    SolveReport dual = solve_lpd(inst.mu, inst.net);
    check.expect(dual.value == cut_sum, "dual != one-vs-rest cut sum");

    RealizationResult real = oriented_tree_realization(inst.mu);
    check.expect(real.status == RealizationStatus::Found, "no star realization");
    if (real.status != RealizationStatus::Found) continue;
    SolveReport integral = solve_tree_integral(*real.realization, inst.net);
    check.expect(integral.value == cut_sum, "integral value != cut sum");
    bool all_integer = true;
    for (const auto& v : integral.multiflow->values)
      if (!is_integer(v)) all_integer = false;
    check.expect(all_integer, "multiflow not integral");
    check.expect(flow_value(inst.mu, inst.net, *integral.multiflow) == cut_sum,
                 "flow value mismatch");
  }
  return check.failures == 0;
}

// 4. Tree min-max: cut sum = dual optimum on properly inner Eulerian
// instances, with the brute-force location optimum agreeing when small.
bool criterion_4() {
  Check check;
  int located = 0;
  for (uint64_t seed = 4000; seed < 4050; ++seed) {
    int terminals = 3 + (int)(seed % 3);  // |S| <= 5
    InstanceSpec spec = spec_of(seed, EulerianMode::ProperlyInner,
                                WeightMode::TreeRealizable, terminals,
                                (int)(seed % 3));
    Instance inst = generate(spec);
    SolveReport tree = solve_tree(*inst.realization, inst.net);
    check.expect(tree.optimum_certified, "generated net lost the hypothesis");
    SolveReport dual = solve_lpd(inst.mu, inst.net);
    check.expect(tree.value == dual.value, "tree cut sum != dual optimum");
    long long product =
        (long long)inst.net.size() * inst.realization->tree.num_nodes;
    if (product <= 64 && tree.location_optimum) {
      ++located;
      check.expect(*tree.location_optimum == tree.value,
                   "location optimum != cut sum");
    }
  }
  check.expect(located >= 25, "too few location cross-checks");
  return check.failures == 0;
}

// 5. Interval weights admit integral optima on arbitrary networks.
bool criterion_5() {
  Check check;
  for (uint64_t seed = 5000; seed < 5050; ++seed) {
    Instance inst = generate(spec_of(seed, EulerianMode::None,
                                     WeightMode::IntervalRepresentable,
                                     3 + (int)(seed % 2), (int)(seed % 3)));
    SolveReport mcc = solve_interval_mcc(*inst.interval, inst.mu, inst.net);
    SolveReport dual = solve_lpd(inst.mu, inst.net);
    check.expect(mcc.value == dual.value, "mcc value != dual optimum");
    bool all_integer = true;
    for (const auto& v : mcc.multiflow->values)
      if (!is_integer(v)) all_integer = false;
    check.expect(all_integer, "mcc multiflow not integral");
  }
  return check.failures == 0;
}

// 6. Locking: full-cut families over inner Eulerian networks and partial-cut
// families over properly inner Eulerian networks.
bool criterion_6() {
  Check check;
  // Full cuts: random laminar chains (every cut has A u B = S).
  for (uint64_t seed = 6000; seed < 6015; ++seed) {
    InstanceSpec spec = spec_of(seed, EulerianMode::Inner, WeightMode::AllOne,
                                3 + (int)(seed % 2), 1 + (int)(seed % 2));
    Instance inst = generate(spec);
    const int n = (int)inst.net.terminals.size();
    std::mt19937_64 rng(seed);
    std::vector<PartialCut> family;
    uint32_t acc = 1u << (rng() % n);
    uint32_t full = (1u << n) - 1;
    while (acc != full) {
      family.push_back(PartialCut{acc, full ^ acc});
      uint32_t next = acc;
      for (int s = 0; s < n && next == acc; ++s)
        if (!(acc >> s & 1) && rng() % 2) next |= 1u << s;
      if (next == acc) break;
      acc = next;
    }
    if (family.empty()) family.push_back(PartialCut{1, full ^ 1u});
    SolveReport rep = lock(family, inst.net);
    check.expect(verify_locking(*rep.multiflow, family, inst.net),
                 "full-cut family not locked");
  }
  // Partial cuts from tree realizations over matching Eulerian networks.
  int partial_locked = 0;
  for (uint64_t seed = 6100; seed < 6130 && partial_locked < 15; ++seed) {
    InstanceSpec spec = spec_of(seed, EulerianMode::ProperlyInner,
                                WeightMode::TreeRealizable, 4, (int)(seed % 2));
    Instance inst = generate(spec);
    LaminarDecomposition dec = cut_decomposition(*inst.realization);
    if (dec.cuts.empty()) continue;
    try {
      SolveReport rep = lock(dec.cuts, inst.net);
      check.expect(verify_locking(*rep.multiflow, dec.cuts, inst.net),
                   "partial-cut family not locked");
      ++partial_locked;
    } catch (const HypothesisViolation&) {
      // The unit-weight family can demand balance at more terminals than the
      // generated realization did; skip those instances.
    }
  }
  check.expect(partial_locked >= 10, "too few partial-cut locking instances");
  return check.failures == 0;
}

// 7. Classification cross-consistency.
bool criterion_7() {
  Check check;
  // Exhaustive 0-1 weights up to isomorphism for |S| in {2, 3, 4}.
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) slots.emplace_back(x, y);
    std::vector<int> perm(n);
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto canon = [&](uint32_t mask) {
      uint32_t best = ~0u;
      for (const auto& p : perms) {
        uint32_t image = 0;
        for (size_t i = 0; i < slots.size(); ++i) {
          if (!(mask >> i & 1)) continue;
          auto [x, y] = slots[i];
          for (size_t j = 0; j < slots.size(); ++j)
            if (slots[j] == std::make_pair(p[x], p[y])) image |= 1u << j;
        }
        best = std::min(best, image);
      }
      return best;
    };

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    std::set<uint32_t> seen;
    for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      if (!seen.insert(canon(mask)).second) continue;
      if (canon(mask) != mask) continue;
      Digraph h;
      h.names = names;
      h.adj.assign(n, std::vector<char>(n, 0));
      for (size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) h.adj[slots[i].first][slots[i].second] = 1;
      DirectedDistance mu = commodity_to_distance(h);
      bool realizable =
          oriented_tree_realization(mu).status == RealizationStatus::Found;
      bool recognized = recognize_commodity_graph(h).succeeds();
      check.expect(realizable == recognized,
                   "realizability and recognition disagree at n=" +
                       std::to_string(n) + " mask=" + std::to_string(mask));
    }
  }

  // Random batch: no realization => a slim-tropical witness of dimension 2.
  std::mt19937_64 rng(7007);
  int none_seen = 0;
  for (int iter = 0; iter < 100; ++iter) {
    int n = 3 + (int)(rng() % 2);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    DirectedDistance mu = zero_distance(names);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) mu.at(i, j) = Rational((long)(rng() % 3));
    if (oriented_tree_realization(mu).status != RealizationStatus::None) continue;
    ++none_seen;
    WitnessResult w = dim_witness_search(mu, WitnessTarget::SlimTropical);
    check.expect(w.status == WitnessStatus::Found && w.dim >= 2,
                 "missing dimension witness for an unrealizable weight");
  }
  check.expect(none_seen >= 20, "random batch produced too few hard weights");
  return check.failures == 0;
}

// 8. The worked geometric fixtures.
bool criterion_8() {
  Check check;

  // All-one weight on three terminals: slimmed skeleton is a 3-leaf star and
  // the tight span contains a 2-face.
  DirectedDistance ones = all_one_distance({"s", "t", "u"});
  RealizationResult star = oriented_tree_realization(ones);
  check.expect(star.status == RealizationStatus::Found, "no star realization");
  if (star.status == RealizationStatus::Found) {
    const auto& tree = star.realization->tree;
    check.expect(tree.num_nodes == 4 && tree.edges.size() == 3,
                 "slim skeleton is not a 3-leaf star");
    std::vector<int> degree(tree.num_nodes, 0);
    for (const auto& e : tree.edges) {
      ++degree[e.tail];
      ++degree[e.head];
    }
    int leaves = 0, centers = 0;
    for (int d : degree) {
      if (d == 1) ++leaves;
      if (d == 3) ++centers;
    }
    check.expect(leaves == 3 && centers == 1, "star shape mismatch");
  }
  WitnessResult folder = dim_witness_search(ones, WitnessTarget::TightSpan);
  check.expect(folder.status == WitnessStatus::Found && folder.dim >= 2,
               "no 2-dimensional tight-span witness for the all-one weight");
  WitnessResult no_slim = dim_witness_search(ones, WitnessTarget::SlimTropical);
  check.expect(no_slim.status == WitnessStatus::NoneFound,
               "the all-one slimmed polytope should stay one-dimensional");

  // Two-commodity weight: both complexes contain a square.
  DirectedDistance two = zero_distance({"s1", "t1", "s2", "t2"});
  two.at(0, 1) = 1;
  two.at(2, 3) = 1;
  WitnessResult t_sq = dim_witness_search(two, WitnessTarget::TightSpan);
  check.expect(t_sq.status == WitnessStatus::Found && t_sq.dim >= 2,
               "no tight-span square for the two-commodity weight");
  WitnessResult q_sq = dim_witness_search(two, WitnessTarget::SlimTropical);
  check.expect(q_sq.status == WitnessStatus::Found && q_sq.dim >= 2,
               "no slimmed square for the two-commodity weight");

  // The worked extension tables: tight but not cyclically tight.
  DirectedDistance pair_weight = zero_distance({"s", "t"});
  pair_weight.at(0, 1) = pair_weight.at(1, 0) = 1;
  DirectedDistance table = make_distance(
      {"s", "t", "u", "v"},
      {{Rational(0), Rational(1), Rational(1), Rational(0)},
       {Rational(1), Rational(0), Rational(1), Rational(0)},
       {Rational(0), Rational(0), Rational(0), Rational(0)},
       {Rational(1), Rational(1), Rational(1), Rational(0)}});
  ExtensionStatus st = extension_status(table, pair_weight);
  check.expect(st.tight, "worked table should be tight");
  check.expect(!st.cyclically_tight, "worked table should not be cyclically tight");

  return check.failures == 0;
}

// 9. Fractionality probe: the two-commodity Eulerian batch exhibits a
// fractional basic optimum; the tree-realizable control batch stays integral.
bool criterion_9() {
  Check check;
  InstanceSpec two = spec_of(1, EulerianMode::Totally, WeightMode::TwoCommodity,
                             4, 1);
  two.cycle_count = 6;
  two.capacity_bound = 1;
  ProbeReport report = denominator_probe(two, 200, 1);
  check.expect(report.items_beyond_k >= 1,
               "no fractional basic multiflow in the Eulerian batch");
  check.expect(report.max_lambda_den >= 2, "max lambda denominator below 2");
  for (const auto& item : report.items)
    check.expect(item.methods_agree, "probe methods disagree");

  InstanceSpec control = spec_of(9000, EulerianMode::ProperlyInner,
                                 WeightMode::TreeRealizable, 4, 1);
  control.integer_weights = true;
  ProbeReport tree_report = denominator_probe(control, 200, 1);
  check.expect(tree_report.max_lambda_den == 1,
               "control batch produced a fractional multiflow");
  check.expect(tree_report.max_value_den == 1,
               "control batch produced a fractional value");
  for (const auto& item : tree_report.items)
    check.expect(item.methods_agree, "control probe methods disagree");
  return check.failures == 0;
}

// 10. The gamma family is extreme in both senses.
bool criterion_10() {
  Check check;
  for (int n : {1, 2}) {
    ExtremalityStatus st = extremality_status(gamma_metric(n));
    check.expect(st.extreme, "gamma_" + std::to_string(n) + " not extreme");
    check.expect(st.c_extreme,
                 "gamma_" + std::to_string(n) + " not cyclically extreme");
  }
  return check.failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<int, std::function<bool()>>> criteria{
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
      {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8},
      {9, criterion_9}, {10, criterion_10}};

  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (auto& [number, run] : criteria) {
    if (only != 0 && number != only) continue;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = run();
    } catch (const std::exception& e) {
      std::cout << "    EXCEPTION: " << e.what() << "\n";
    }
    auto seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::printf("criterion %2d: %s (%.2f s)\n", number, ok ? "PASS" : "FAIL",
                seconds);
    all_pass = all_pass && ok;
  }
  return all_pass ? 0 : 1;
}
