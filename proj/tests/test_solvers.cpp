#include <doctest.h>

#include <random>

#include "dirflow/harness.hpp"
#include "dirflow/solvers.hpp"
#include "fixtures.hpp"

using namespace dirflow;

namespace {

Network net_of(std::vector<std::string> nodes, std::vector<int> terminals,
               std::vector<Network::Edge> edges) {
  return make_network(std::move(nodes), std::move(terminals), std::move(edges));
}

Network single_commodity_path() {
  return net_of({"s", "x", "t"}, {0, 2}, {{0, 1, 1}, {1, 2, 1}});
}

DirectedDistance single_commodity_weight() {
  DirectedDistance mu = zero_distance({"s", "t"});
  mu.at(0, 1) = 1;
  return mu;
}

Network directed_triangle() {
  return net_of({"s", "t", "u"}, {0, 1, 2}, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
}

bool is_integral(const Multiflow& f) {
  for (const auto& v : f.values)
    if (!is_integer(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("flow value arithmetic and feasibility") {
  Network net = single_commodity_path();
  DirectedDistance mu = single_commodity_weight();

  Multiflow empty;
  CHECK(flow_value(mu, net, empty) == Rational(0));

  Multiflow one;
  one.paths = {{0, 1, 2}};
  one.values = {Rational(1)};
  CHECK(flow_value(mu, net, one) == Rational(1));

  DirectedDistance wide = zero_distance({"s", "t"});
  wide.at(0, 1) = 1;
  wide.at(1, 0) = 3;
  Network both = net_of({"s", "t"}, {0, 1}, {{0, 1, 1}, {1, 0, 1}});
  Multiflow halves;
  halves.paths = {{0, 1}, {1, 0}};
  halves.values = {Rational(1, 2), Rational(1, 2)};
  CHECK(flow_value(wide, both, halves) == Rational(2));

  Multiflow too_much;
  too_much.paths = {{0, 1, 2}, {0, 1, 2}};
  too_much.values = {Rational(1), Rational(1)};
  CHECK(feasibility_violation(too_much, net).has_value());
  CHECK_THROWS(flow_value(mu, net, too_much));
}

TEST_CASE("dual LP on the single-commodity path") {
  SolveReport rep = solve_lpd(single_commodity_weight(), single_commodity_path());
  CHECK(rep.value == Rational(1));
  REQUIRE(rep.dual_metric.has_value());
  CHECK(is_metric(*rep.dual_metric));
  int s = rep.dual_metric->index_of("s"), t = rep.dual_metric->index_of("t");
  CHECK(rep.dual_metric->at(s, t) >= Rational(1));
}

TEST_CASE("dual LP of a zero-capacity network") {
  Network net = net_of({"s", "t"}, {0, 1}, {{0, 1, 0}});
  CHECK(solve_lpd(single_commodity_weight(), net).value == Rational(0));
}

TEST_CASE("dual LP reproduces the free-multiflow cut sum on the triangle") {
  Network net = directed_triangle();
  DirectedDistance mu = all_one_distance({"s", "t", "u"});
  Rational cut_sum = 0;
  for (int s = 0; s < 3; ++s) {
    std::vector<int> rest;
    for (int t = 0; t < 3; ++t)
      if (t != s) rest.push_back(t);
    cut_sum += rat_ll(min_cut(net, {s}, rest).value);
  }
  CHECK(cut_sum == Rational(3));
  CHECK(solve_lpd(mu, net).value == cut_sum);
}

TEST_CASE("path LP matches the dual and returns a feasible multiflow") {
  Network net = single_commodity_path();
  DirectedDistance mu = single_commodity_weight();
  SolveReport rep = solve_path_lp(mu, net);
  CHECK(rep.value == Rational(1));
  REQUIRE(rep.multiflow.has_value());
  CHECK(flow_value(mu, net, *rep.multiflow) == rep.value);

  CHECK(solve_path_lp(zero_distance({"s", "t"}), net).value == Rational(0));

  // Two commodities forced through one middle edge.
  Network shared = net_of({"s1", "t1", "s2", "t2", "a", "b"}, {0, 1, 2, 3},
                          {{0, 4, 1}, {2, 4, 1}, {4, 5, 1}, {5, 1, 1}, {5, 3, 1}});
  DirectedDistance two = fixtures::two_commodity_weight();
  SolveReport primal = solve_path_lp(two, shared);
  SolveReport dual = solve_lpd(two, shared);
  CHECK(primal.value == Rational(1));
  CHECK(primal.value == dual.value);
}

TEST_CASE("path LP respects its node budget") {
  std::vector<std::string> nodes;
  for (int i = 0; i < 11; ++i) nodes.push_back("n" + std::to_string(i));
  nodes[0] = "s";
  nodes[1] = "t";
  Network net = net_of(nodes, {0, 1}, {{0, 1, 1}});
  CHECK_THROWS_AS(solve_path_lp(single_commodity_weight(), net), BudgetExceeded);
}

TEST_CASE("strong duality on random small instances") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.terminal_count = 3;
    spec.inner_count = 2;
    spec.eulerian_mode = EulerianMode::None;
    spec.weight_mode = WeightMode::RandomDistance;
    Instance inst = generate(spec);
    SolveReport primal = solve_path_lp(inst.mu, inst.net);
    SolveReport dual = solve_lpd(inst.mu, inst.net);
    CHECK(primal.value == dual.value);
    if (primal.multiflow)
      CHECK(flow_value(inst.mu, inst.net, *primal.multiflow) == primal.value);
  }
}

TEST_CASE("tree solver on a single-edge realization") {
  OrientedTreeRealization real;
  real.tree.num_nodes = 2;
  real.tree.edges = {{0, 1}};
  real.tree.alpha = {Rational(1)};
  real.terminals = {"s", "t"};
  real.subtrees = {{0}, {1}};

  SolveReport rep = solve_tree(real, single_commodity_path());
  CHECK(rep.value == Rational(1));
  CHECK(rep.optimum_certified);
  REQUIRE(rep.location_optimum.has_value());
  CHECK(*rep.location_optimum == rep.value);
  REQUIRE(rep.tree_cuts.size() == 1);
  CHECK(rep.tree_cuts[0].cut_value == 1);
}

TEST_CASE("tree solver reproduces the free-multiflow optimum on the triangle") {
  DirectedDistance mu = all_one_distance({"s", "t", "u"});
  RealizationResult r = oriented_tree_realization(mu);
  REQUIRE(r.status == RealizationStatus::Found);
  Network net = directed_triangle();
  SolveReport rep = solve_tree(*r.realization, net);
  CHECK(rep.value == Rational(3));
  CHECK(rep.optimum_certified);
  CHECK(rep.value == solve_lpd(mu, net).value);
}

TEST_CASE("tree solver flags uncertified instances") {
  // Bent subtree forces the Eulerian condition at t, which fails here.
  OrientedTreeRealization bent;
  bent.tree.num_nodes = 3;
  bent.tree.edges = {{0, 1}, {2, 1}};
  bent.tree.alpha = {Rational(1), Rational(1)};
  bent.terminals = {"s", "t", "u"};
  bent.subtrees = {{0}, {0, 1, 2}, {2}};

  Network skew = net_of({"s", "t", "u"}, {0, 1, 2}, {{0, 1, 1}, {2, 1, 1}});
  SolveReport rep = solve_tree(bent, skew);
  CHECK_FALSE(rep.optimum_certified);
  CHECK_THROWS_AS(solve_tree_integral(bent, skew), HypothesisViolation);
}

TEST_CASE("splitting-off on the single-commodity path") {
  OrientedTreeRealization real;
  real.tree.num_nodes = 2;
  real.tree.edges = {{0, 1}};
  real.tree.alpha = {Rational(1)};
  real.terminals = {"s", "t"};
  real.subtrees = {{0}, {1}};

  SolveReport rep = solve_tree_integral(real, single_commodity_path());
  CHECK(rep.value == Rational(1));
  REQUIRE(rep.multiflow.has_value());
  CHECK(is_integral(*rep.multiflow));
  REQUIRE(rep.multiflow->paths.size() == 1);
  CHECK(rep.multiflow->paths[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("splitting-off on the free-multiflow triangle") {
  DirectedDistance mu = all_one_distance({"s", "t", "u"});
  RealizationResult r = oriented_tree_realization(mu);
  REQUIRE(r.status == RealizationStatus::Found);
  Network net = directed_triangle();
  SolveReport rep = solve_tree_integral(*r.realization, net);
  CHECK(rep.value == Rational(3));
  REQUIRE(rep.multiflow.has_value());
  CHECK(is_integral(*rep.multiflow));
  CHECK(flow_value(mu, net, *rep.multiflow) == Rational(3));
}

TEST_CASE("splitting-off across an inner node with mixed commodities") {
  // Two unit paths share the middle node; the split must keep both.
  Network net = net_of({"s", "t", "u", "x"}, {0, 1, 2},
                       {{0, 3, 1}, {3, 1, 1}, {1, 3, 1}, {3, 2, 1}});
  DirectedDistance mu = zero_distance({"s", "t", "u"});
  mu.at(0, 1) = 1;  // s -> t
  mu.at(1, 2) = 1;  // t -> u
  mu.at(0, 2) = 2;  // chain: s -> u through both cuts
  RealizationResult r = oriented_tree_realization(mu);
  REQUIRE(r.status == RealizationStatus::Found);
  SolveReport rep = solve_tree_integral(*r.realization, net);
  CHECK(rep.value == Rational(2));
  CHECK(is_integral(*rep.multiflow));
  CHECK(flow_value(mu, net, *rep.multiflow) == Rational(2));
  CHECK(rep.value == solve_lpd(mu, net).value);
}

TEST_CASE("interval reduction on the single-commodity path") {
  DirectedDistance mu = single_commodity_weight();
  IntervalResult rep = interval_representation(mu);
  REQUIRE(rep.rep.has_value());
  SolveReport sol = solve_interval_mcc(*rep.rep, mu, single_commodity_path());
  CHECK(sol.value == Rational(1));
  REQUIRE(sol.multiflow.has_value());
  CHECK(is_integral(*sol.multiflow));
}

TEST_CASE("interval reduction handles the zero weight") {
  DirectedDistance mu = zero_distance({"s", "t"});
  IntervalResult rep = interval_representation(mu);
  REQUIRE(rep.rep.has_value());
  SolveReport sol = solve_interval_mcc(*rep.rep, mu, single_commodity_path());
  CHECK(sol.value == Rational(0));
  CHECK(sol.multiflow->paths.empty());
}

TEST_CASE("interval reduction equals the LP dual on non-Eulerian instances") {
  for (uint64_t seed = 100; seed < 112; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.terminal_count = 3;
    spec.inner_count = 2;
    spec.eulerian_mode = EulerianMode::None;
    spec.weight_mode = WeightMode::IntervalRepresentable;
    Instance inst = generate(spec);
    REQUIRE(inst.interval.has_value());
    SolveReport mcc = solve_interval_mcc(*inst.interval, inst.mu, inst.net);
    SolveReport dual = solve_lpd(inst.mu, inst.net);
    CHECK(mcc.value == dual.value);
    CHECK(is_integral(*mcc.multiflow));
    CHECK(flow_value(inst.mu, inst.net, *mcc.multiflow) == mcc.value);
  }
}

TEST_CASE("locking a single cut reduces to max flow") {
  Network net = single_commodity_path();
  std::vector<PartialCut> family{PartialCut{0b01, 0b10}};
  SolveReport rep = lock(family, net);
  CHECK(rep.value == Rational(1));
  CHECK(rep.method == SolveMethod::Locking);
  CHECK(verify_locking(*rep.multiflow, family, net));
}

TEST_CASE("locking a nested chain over an inner Eulerian network") {
  // Terminals s,t,u and an Eulerian middle.
  Network net = net_of({"s", "t", "u", "x"}, {0, 1, 2},
                       {{0, 3, 1}, {3, 1, 1}, {1, 3, 1}, {3, 2, 1}});
  REQUIRE(eulerian_status(net).inner);
  std::vector<PartialCut> family{PartialCut{0b001, 0b110}, PartialCut{0b011, 0b100}};
  SolveReport rep = lock(family, net);
  REQUIRE(rep.multiflow.has_value());
  CHECK(is_integral(*rep.multiflow));
  CHECK(verify_locking(*rep.multiflow, family, net));
}

TEST_CASE("locking the one-vs-rest family matches the free multiflow") {
  Network net = directed_triangle();
  std::vector<PartialCut> family{PartialCut{0b001, 0b110}, PartialCut{0b010, 0b101},
                                 PartialCut{0b100, 0b011}};
  SolveReport rep = lock(family, net);
  CHECK(rep.value == Rational(3));
  CHECK(verify_locking(*rep.multiflow, family, net));
}

TEST_CASE("verify_locking rejects slack flows") {
  Network net = single_commodity_path();
  std::vector<PartialCut> family{PartialCut{0b01, 0b10}};
  Multiflow empty;
  CHECK_FALSE(verify_locking(empty, family, net));

  Multiflow infeasible;
  infeasible.paths = {{0, 1, 2}, {0, 1, 2}};
  infeasible.values = {Rational(1), Rational(1)};
  CHECK_THROWS(verify_locking(infeasible, family, net));
}

TEST_CASE("lock rejects non-laminar families") {
  Network net = directed_triangle();
  std::vector<PartialCut> family{PartialCut{0b001, 0b010}, PartialCut{0b001, 0b100}};
  CHECK_THROWS(lock(family, net));
}

TEST_CASE("tree solver agrees with the dual on generated instances") {
  int solved = 0;
  for (uint64_t seed = 300; seed < 330 && solved < 8; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.terminal_count = 4;
    spec.inner_count = 2;
    spec.eulerian_mode = EulerianMode::ProperlyInner;
    spec.weight_mode = WeightMode::TreeRealizable;
    Instance inst = generate(spec);
    REQUIRE(inst.realization.has_value());
    SolveReport tree = solve_tree(*inst.realization, inst.net);
    if (!tree.optimum_certified) continue;
    ++solved;
    SolveReport dual = solve_lpd(inst.mu, inst.net);
    CHECK(tree.value == dual.value);
    SolveReport integral = solve_tree_integral(*inst.realization, inst.net);
    CHECK(integral.value == dual.value);
    CHECK(is_integral(*integral.multiflow));
    CHECK(flow_value(inst.mu, inst.net, *integral.multiflow) == integral.value);
  }
  CHECK(solved >= 5);
}

TEST_CASE("weak duality against perturbed dual metrics") {
  for (uint64_t seed = 700; seed < 706; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.terminal_count = 3;
    spec.inner_count = 2;
    spec.eulerian_mode = EulerianMode::None;
    spec.weight_mode = WeightMode::RandomDistance;
    Instance inst = generate(spec);
    SolveReport primal = solve_path_lp(inst.mu, inst.net);
    SolveReport dual = solve_lpd(inst.mu, inst.net);
    REQUIRE(dual.dual_metric.has_value());

    // Any feasible dual metric bounds every feasible flow; shifting the
    // optimal metric up uniformly keeps it feasible.
    DirectedDistance loose = *dual.dual_metric;
    for (int i = 0; i < loose.size(); ++i)
      for (int j = 0; j < loose.size(); ++j)
        if (i != j) loose.at(i, j) += 1;
    Rational objective = 0;
    for (const auto& e : inst.net.edges)
      if (e.tail != e.head)
        objective += rat_ll(e.cap) * loose.at(e.tail, e.head);
    CHECK(primal.value <= objective);
    CHECK(primal.value == dual.value);
  }
}
