#include <doctest.h>

#include "dirflow/harness.hpp"
#include "dirflow/json_io.hpp"

using namespace dirflow;

namespace {

InstanceSpec spec_of(uint64_t seed, EulerianMode em, WeightMode wm,
                     int terminals = 3, int inners = 2) {
  InstanceSpec spec;
  spec.seed = seed;
  spec.terminal_count = terminals;
  spec.inner_count = inners;
  spec.eulerian_mode = em;
  spec.weight_mode = wm;
  return spec;
}

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
  InstanceSpec spec = spec_of(42, EulerianMode::Inner, WeightMode::RandomDistance);
  Instance a = generate(spec), b = generate(spec);
  CHECK(a.mu == b.mu);
  CHECK(a.net.nodes == b.net.nodes);
  CHECK(a.net.terminals == b.net.terminals);
  REQUIRE(a.net.edges.size() == b.net.edges.size());
  for (size_t i = 0; i < a.net.edges.size(); ++i) {
    CHECK(a.net.edges[i].tail == b.net.edges[i].tail);
    CHECK(a.net.edges[i].head == b.net.edges[i].head);
    CHECK(a.net.edges[i].cap == b.net.edges[i].cap);
  }
}

TEST_CASE("generator honors the requested Eulerian mode") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Instance tot = generate(spec_of(seed, EulerianMode::Totally,
                                    WeightMode::RandomDistance));
    CHECK(eulerian_status(tot.net).totally);

    Instance inn = generate(spec_of(seed, EulerianMode::Inner,
                                    WeightMode::RandomDistance));
    CHECK(eulerian_status(inn.net).inner);

    Instance prop = generate(spec_of(seed, EulerianMode::ProperlyInner,
                                     WeightMode::TreeRealizable, 4));
    REQUIRE(prop.realization.has_value());
    ProperTerminals proper = proper_terminals(prop.mu, prop.realization);
    std::vector<int> proper_nodes;
    for (int s : proper.terminals)
      proper_nodes.push_back(prop.net.node_index(prop.mu.elements[s]));
    CHECK(eulerian_status(prop.net, proper_nodes).properly_inner);
  }
}

TEST_CASE("generator honors the requested weight mode") {
  for (uint64_t seed = 20; seed < 26; ++seed) {
    Instance metric = generate(spec_of(seed, EulerianMode::None,
                                       WeightMode::RandomMetric));
    CHECK(is_metric(metric.mu));

    Instance tree = generate(spec_of(seed, EulerianMode::None,
                                     WeightMode::TreeRealizable));
    REQUIRE(tree.realization.has_value());
    CHECK(validate_realization(*tree.realization, tree.mu));
    CHECK(oriented_tree_realization(tree.mu).status == RealizationStatus::Found);

    Instance interval = generate(spec_of(seed, EulerianMode::None,
                                         WeightMode::IntervalRepresentable));
    REQUIRE(interval.interval.has_value());
    CHECK(validate_interval(*interval.interval, interval.mu));

    Instance comm = generate(spec_of(seed, EulerianMode::None,
                                     WeightMode::CommodityGraph));
    for (int i = 0; i < comm.mu.size(); ++i)
      for (int j = 0; j < comm.mu.size(); ++j)
        CHECK((comm.mu.at(i, j) == 0 || comm.mu.at(i, j) == 1));
  }

  Instance two = generate(spec_of(1, EulerianMode::Totally,
                                  WeightMode::TwoCommodity));
  CHECK(two.mu.elements == std::vector<std::string>{"s1", "t1", "s2", "t2"});
  CHECK(two.mu.at(0, 1) == Rational(1));
  CHECK(two.mu.at(2, 3) == Rational(1));
  CHECK(two.mu.at(1, 0) == Rational(0));

  Instance ones = generate(spec_of(2, EulerianMode::Inner, WeightMode::AllOne));
  CHECK(ones.mu == all_one_distance(ones.mu.elements));
}

TEST_CASE("oracle on fixed instances") {
  Network path = make_network({"s", "x", "t"}, {0, 2}, {{0, 1, 1}, {1, 2, 1}});
  DirectedDistance mu = zero_distance({"s", "t"});
  mu.at(0, 1) = 1;
  CHECK(oracle_mfp(mu, path) == Rational(1));

  Network tri = make_network({"s", "t", "u"}, {0, 1, 2},
                             {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK(oracle_mfp(all_one_distance({"s", "t", "u"}), tri) == Rational(3));
}

TEST_CASE("oracle agrees with both solvers across a seeded batch") {
  for (uint64_t seed = 50; seed < 62; ++seed) {
    Instance inst = generate(spec_of(seed, EulerianMode::None,
                                     WeightMode::RandomDistance, 3, 2));
    Rational reference = oracle_mfp(inst.mu, inst.net);
    CHECK(solve_path_lp(inst.mu, inst.net).value == reference);
    CHECK(solve_lpd(inst.mu, inst.net).value == reference);
  }
}

TEST_CASE("denominator probe on constructive batches") {
  InstanceSpec tree = spec_of(900, EulerianMode::ProperlyInner,
                              WeightMode::TreeRealizable, 4);
  tree.integer_weights = true;
  ProbeReport report = denominator_probe(tree, 8, 1);
  CHECK(report.items.size() == 8);
  CHECK(report.max_lambda_den == 1);
  CHECK(report.max_value_den == 1);
  CHECK(report.items_beyond_k == 0);
  for (const auto& item : report.items) CHECK(item.methods_agree);

  InstanceSpec interval = spec_of(950, EulerianMode::None,
                                  WeightMode::IntervalRepresentable, 3);
  ProbeReport ir = denominator_probe(interval, 8, 1);
  CHECK(ir.max_lambda_den == 1);
  for (const auto& item : ir.items) CHECK(item.methods_agree);
}

TEST_CASE("json round trips") {
  Instance inst = generate(spec_of(7, EulerianMode::Inner,
                                   WeightMode::TreeRealizable, 4));
  DirectedDistance mu2 = distance_from_json(distance_to_json(inst.mu));
  CHECK(mu2 == inst.mu);

  Network net2 = network_from_json(network_to_json(inst.net));
  CHECK(net2.nodes == inst.net.nodes);
  CHECK(net2.terminals == inst.net.terminals);
  REQUIRE(net2.edges.size() == inst.net.edges.size());
  for (size_t i = 0; i < net2.edges.size(); ++i) {
    CHECK(net2.edges[i].tail == inst.net.edges[i].tail);
    CHECK(net2.edges[i].head == inst.net.edges[i].head);
    CHECK(net2.edges[i].cap == inst.net.edges[i].cap);
  }

  REQUIRE(inst.realization.has_value());
  OrientedTreeRealization real2 =
      realization_from_json(realization_to_json(*inst.realization));
  CHECK(validate_realization(real2, inst.mu));

  Rational q(-7, 3);
  CHECK(rational_from_json(rational_to_json(q)) == q);
  CHECK(rational_from_json(json::parse("5")) == Rational(5));
  CHECK(rational_from_json(json::parse("[3, 6]")) == Rational(1, 2));
}
