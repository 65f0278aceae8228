#include "dirflow/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "dirflow/simplex.hpp"

namespace dirflow {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  // Inclusive bounds; modulo bias is irrelevant here.
  long long next(long long lo, long long hi) {
    return lo + (long long)(gen() % (uint64_t)(hi - lo + 1));
  }
};

std::vector<std::string> terminal_names(int count, WeightMode mode) {
  if (mode == WeightMode::TwoCommodity) return {"s1", "t1", "s2", "t2"};
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

DirectedDistance random_distance(Rng& rng, const std::vector<std::string>& names,
                                 bool integers) {
  DirectedDistance d = zero_distance(names);
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      if (i != j) d.at(i, j) = integers ? Rational((long)rng.next(0, 3))
                                        : Rational((long)rng.next(0, 6), 2);
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) d.at(i, j).canonicalize();
  return d;
}

DirectedDistance metric_closure(DirectedDistance d) {
  const int n = d.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d.at(i, j) = std::min(d.at(i, j), Rational(d.at(i, k) + d.at(k, j)));
  return d;
}

OrientedTreeRealization random_realization(Rng& rng,
                                           const std::vector<std::string>& names,
                                           bool integers) {
  const int n = (int)names.size();
  OrientedTreeRealization real;
  real.terminals = names;
  int extra = (int)rng.next(0, 2);
  int num_nodes = std::max(2, n + extra - (int)rng.next(0, n - 1));
  real.tree.num_nodes = num_nodes;
  for (int v = 1; v < num_nodes; ++v) {
    int parent = (int)rng.next(0, v - 1);
    bool toward_parent = rng.next(0, 1) == 0;
    if (toward_parent)
      real.tree.edges.push_back({v, parent});
    else
      real.tree.edges.push_back({parent, v});
    real.tree.alpha.push_back(integers ? Rational((long)rng.next(0, 2))
                                       : Rational((long)rng.next(0, 4), 2));
  }
  for (auto& a : real.tree.alpha) a.canonicalize();

  std::vector<std::vector<int>> adjacent(num_nodes);
  for (const auto& e : real.tree.edges) {
    adjacent[e.tail].push_back(e.head);
    adjacent[e.head].push_back(e.tail);
  }
  for (int s = 0; s < n; ++s) {
    std::vector<int> grown{(int)rng.next(0, num_nodes - 1)};
    int target = (int)rng.next(1, std::max(1, num_nodes / 2));
    while ((int)grown.size() < target) {
      std::vector<int> frontier;
      for (int v : grown)
        for (int w : adjacent[v])
          if (std::find(grown.begin(), grown.end(), w) == grown.end())
            frontier.push_back(w);
      if (frontier.empty()) break;
      grown.push_back(frontier[rng.next(0, (long long)frontier.size() - 1)]);
    }
    std::sort(grown.begin(), grown.end());
    real.subtrees.push_back(grown);
  }
  return real;
}

DirectedDistance interval_to_distance(const IntervalRepresentation& rep,
                                      const std::vector<std::string>& names) {
  DirectedDistance d = zero_distance(names);
  for (int s = 0; s < d.size(); ++s)
    for (int t = 0; t < d.size(); ++t) {
      if (s == t) continue;
      Rational v = rep.a[t] - rep.b[s];
      d.at(s, t) = v > 0 ? v : Rational(0);
    }
  return d;
}

}  // namespace

Instance generate(const InstanceSpec& spec) {
  Rng rng(spec.seed);

  const int n = spec.weight_mode == WeightMode::TwoCommodity ? 4
                                                             : spec.terminal_count;
  if (n < 2) throw std::invalid_argument("need at least two terminals");
  std::vector<std::string> term_names = terminal_names(n, spec.weight_mode);

  DirectedDistance mu = zero_distance(term_names);
  std::optional<OrientedTreeRealization> realization;
  std::optional<IntervalRepresentation> interval;
  switch (spec.weight_mode) {
    case WeightMode::RandomDistance:
      mu = random_distance(rng, term_names, spec.integer_weights);
      break;
    case WeightMode::RandomMetric:
      mu = metric_closure(random_distance(rng, term_names, spec.integer_weights));
      break;
    case WeightMode::TreeRealizable: {
      OrientedTreeRealization real =
          random_realization(rng, term_names, spec.integer_weights);
      realization = real;
      mu = realization_distance(real);
      break;
    }
    case WeightMode::IntervalRepresentable: {
      IntervalRepresentation rep;
      for (int s = 0; s < n; ++s) {
        Rational a = spec.integer_weights ? Rational((long)rng.next(0, 4))
                                          : Rational((long)rng.next(0, 8), 2);
        Rational len = spec.integer_weights ? Rational((long)rng.next(0, 2))
                                            : Rational((long)rng.next(0, 4), 2);
        a.canonicalize();
        len.canonicalize();
        rep.a.push_back(a);
        rep.b.push_back(a + len);
      }
      interval = rep;
      mu = interval_to_distance(rep, term_names);
      break;
    }
    case WeightMode::CommodityGraph: {
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (s != t && rng.next(0, 1)) mu.at(s, t) = 1;
      break;
    }
    case WeightMode::TwoCommodity:
      mu.at(0, 1) = 1;  // s1 -> t1
      mu.at(2, 3) = 1;  // s2 -> t2
      break;
    case WeightMode::AllOne:
      mu = all_one_distance(term_names);
      break;
  }

  // Nodes: terminals first, then inner nodes.
  std::vector<std::string> nodes = term_names;
  for (int i = 0; i < spec.inner_count; ++i) nodes.push_back("x" + std::to_string(i));
  const int num_nodes = (int)nodes.size();
  std::vector<int> terminals(n);
  for (int i = 0; i < n; ++i) terminals[i] = i;

  std::vector<Network::Edge> edges;
  auto add_walk = [&](const std::vector<int>& walk, long long cap, bool close) {
    for (size_t i = 0; i + 1 < walk.size(); ++i)
      if (walk[i] != walk[i + 1]) edges.push_back({walk[i], walk[i + 1], cap});
    if (close && walk.back() != walk.front())
      edges.push_back({walk.back(), walk.front(), cap});
  };
  auto random_walk = [&](int from, int to, int min_len, int max_len) {
    std::vector<int> walk{from};
    int len = (int)rng.next(min_len, max_len);
    for (int i = 0; i < len; ++i) walk.push_back((int)rng.next(0, num_nodes - 1));
    if (to >= 0) walk.push_back(to);
    return walk;
  };

  switch (spec.eulerian_mode) {
    case EulerianMode::None:
      for (int i = 0; i < spec.cycle_count + spec.path_count; ++i) {
        int a = (int)rng.next(0, num_nodes - 1);
        int b = (int)rng.next(0, num_nodes - 1);
        if (a != b) edges.push_back({a, b, rng.next(1, spec.capacity_bound)});
      }
      for (int i = 0; i < spec.path_count; ++i) {
        int s = (int)rng.next(0, n - 1), t = (int)rng.next(0, n - 1);
        if (s == t) t = (t + 1) % n;
        add_walk(random_walk(s, t, 0, 2), rng.next(1, spec.capacity_bound), false);
      }
      break;
    case EulerianMode::Totally:
      for (int i = 0; i < spec.cycle_count; ++i)
        add_walk(random_walk((int)rng.next(0, num_nodes - 1), -1, 1, 5),
                 rng.next(1, spec.capacity_bound), true);
      break;
    case EulerianMode::Inner:
    case EulerianMode::ProperlyInner: {
      std::vector<int> endpoint_pool = terminals;
      if (spec.eulerian_mode == EulerianMode::ProperlyInner) {
        ProperTerminals proper = proper_terminals(mu, realization);
        endpoint_pool.clear();
        for (int s : proper.terminals) endpoint_pool.push_back(terminals[s]);
      }
      for (int i = 0; i < spec.cycle_count; ++i)
        add_walk(random_walk((int)rng.next(0, num_nodes - 1), -1, 1, 3),
                 rng.next(1, spec.capacity_bound), true);
      if (!endpoint_pool.empty())
        for (int i = 0; i < spec.path_count; ++i) {
          int s = endpoint_pool[rng.next(0, (long long)endpoint_pool.size() - 1)];
          int t = endpoint_pool[rng.next(0, (long long)endpoint_pool.size() - 1)];
          add_walk(random_walk(s, t, 0, 2), rng.next(1, spec.capacity_bound),
                   false);
        }
      break;
    }
  }

  Instance inst{make_network(nodes, terminals, edges), std::move(mu), realization,
                interval};
  return inst;
}

Rational oracle_mfp(const DirectedDistance& mu, const Network& net,
                    int node_budget) {
  const int n = net.size();
  if (n > node_budget) throw BudgetExceeded("oracle limited to tiny instances");

  std::vector<int> mu_of(n, -1);
  for (int t : net.terminals)
    for (int i = 0; i < mu.size(); ++i)
      if (mu.elements[i] == net.nodes[t]) mu_of[t] = i;

  std::map<std::pair<int, int>, long long> cap;
  for (const auto& e : net.edges)
    if (e.tail != e.head && e.cap > 0) cap[{e.tail, e.head}] += e.cap;

  // Iterative stack enumeration, highest node index first.
  std::vector<std::vector<int>> paths;
  std::vector<int> walk;
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int v) -> void {
    walk.push_back(v);
    used[v] = 1;
    if (walk.size() >= 2 && mu_of[v] >= 0 &&
        mu.at(mu_of[walk.front()], mu_of[v]) > 0)
      paths.push_back(walk);
    for (int w = n - 1; w >= 0; --w)
      if (!used[w] && cap.count({v, w})) self(self, w);
    used[v] = 0;
    walk.pop_back();
  };
  for (int i = (int)net.terminals.size() - 1; i >= 0; --i)
    extend(extend, net.terminals[i]);

  LpProblem lp;
  lp.num_vars = (int)paths.size();
  lp.maximize = true;
  lp.objective.reserve(paths.size());
  for (const auto& p : paths)
    lp.objective.push_back(mu.at(mu_of[p.front()], mu_of[p.back()]));

  std::map<std::pair<int, int>, LpConstraint> rows;
  for (int p = 0; p < lp.num_vars; ++p)
    for (size_t i = 0; i + 1 < paths[p].size(); ++i) {
      auto key = std::make_pair(paths[p][i], paths[p][i + 1]);
      auto [it, fresh] = rows.try_emplace(key);
      if (fresh) {
        it->second.coeffs.assign((size_t)lp.num_vars, Rational(0));
        it->second.rel = Relation::LE;
        it->second.rhs = rat_ll(cap.at(key));
      }
      it->second.coeffs[p] += 1;
    }
  for (auto& [key, row] : rows) lp.rows.push_back(std::move(row));

  LpSolution sol = solve_lp(lp, PivotRule::DantzigBland);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("oracle LP must be solvable");
  return sol.objective;
}

ProbeReport denominator_probe(const InstanceSpec& base, int count, long long k) {
  ProbeReport report;
  for (int i = 0; i < count; ++i) {
    InstanceSpec spec = base;
    spec.seed = base.seed + (uint64_t)i;
    Instance inst = generate(spec);

    ProbeItem item;
    item.seed = spec.seed;
    std::optional<SolveReport> solved;
    if (inst.interval)
      solved = solve_interval_mcc(*inst.interval, inst.mu, inst.net);
    else if (inst.realization)
      solved = solve_tree_integral(*inst.realization, inst.net);
    else
      solved = solve_path_lp(inst.mu, inst.net);
    item.value = solved->value;
    item.value_den = solved->value.get_den();
    if (solved->multiflow)
      for (const auto& lambda : solved->multiflow->values)
        item.max_lambda_den = std::max(item.max_lambda_den,
                                       mpz_class(lambda.get_den()));

    SolveReport dual = solve_lpd(inst.mu, inst.net);
    item.methods_agree = dual.value == item.value;

    report.max_value_den = std::max(report.max_value_den, item.value_den);
    report.max_lambda_den = std::max(report.max_lambda_den, item.max_lambda_den);
    if (item.max_lambda_den > mpz_class((long)k)) ++report.items_beyond_k;
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace dirflow
