#include "dirflow/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dirflow/simplex.hpp"

namespace dirflow {

std::vector<int> terminal_nodes(const DirectedDistance& mu, const Network& net) {
  std::vector<int> nodes(mu.size(), -1);
  if ((int)net.terminals.size() != mu.size())
    throw std::invalid_argument("terminal count does not match the weight");
  for (int t : net.terminals) {
    bool matched = false;
    for (int i = 0; i < mu.size(); ++i)
      if (mu.elements[i] == net.nodes[t]) {
        nodes[i] = t;
        matched = true;
        break;
      }
    if (!matched)
      throw std::invalid_argument("terminal " + net.nodes[t] +
                                  " missing from the weight");
  }
  return nodes;
}

namespace {

// Aggregated pair capacities; self-loops carry no path and are ignored.
std::map<std::pair<int, int>, long long> pair_capacities(const Network& net) {
  std::map<std::pair<int, int>, long long> cap;
  for (const auto& e : net.edges)
    if (e.tail != e.head && e.cap > 0) cap[{e.tail, e.head}] += e.cap;
  return cap;
}

// mu index per node, or -1.
std::vector<int> mu_index_of_node(const DirectedDistance& mu, const Network& net) {
  std::vector<int> idx(net.size(), -1);
  auto nodes = terminal_nodes(mu, net);
  for (int i = 0; i < mu.size(); ++i) idx[nodes[i]] = i;
  return idx;
}

}  // namespace

std::optional<std::pair<int, int>> feasibility_violation(const Multiflow& f,
                                                         const Network& net) {
  auto cap = pair_capacities(net);
  std::map<std::pair<int, int>, Rational> used;
  for (size_t p = 0; p < f.paths.size(); ++p)
    for (size_t i = 0; i + 1 < f.paths[p].size(); ++i)
      used[{f.paths[p][i], f.paths[p][i + 1]}] += f.values[p];
  for (const auto& [pair, amount] : used) {
    auto it = cap.find(pair);
    long long limit = it == cap.end() ? 0 : it->second;
    if (amount > rat_ll(limit)) return pair;
  }
  return std::nullopt;
}

Rational flow_value(const DirectedDistance& mu, const Network& net,
                    const Multiflow& f) {
  if (auto bad = feasibility_violation(f, net))
    throw std::invalid_argument("multiflow exceeds capacity on " +
                                net.nodes[bad->first] + "->" +
                                net.nodes[bad->second]);
  auto idx = mu_index_of_node(mu, net);
  Rational total = 0;
  for (size_t p = 0; p < f.paths.size(); ++p) {
    const auto& path = f.paths[p];
    if (path.size() < 2) throw std::invalid_argument("degenerate path");
    int s = idx[path.front()], t = idx[path.back()];
    if (s < 0 || t < 0 || s == t)
      throw std::invalid_argument("path must join distinct terminals");
    total += f.values[p] * mu.at(s, t);
  }
  return total;
}

SolveReport solve_lpd(const DirectedDistance& mu, const Network& net) {
  const int n = net.size();
  auto term_mu = mu_index_of_node(mu, net);

  std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
  int nv = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) var[x][y] = nv++;

  LpProblem lp;
  lp.num_vars = nv;
  lp.objective.assign(nv, Rational(0));
  for (const auto& e : net.edges)
    if (e.tail != e.head) lp.objective[var[e.tail][e.head]] += rat_ll(e.cap);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || term_mu[x] < 0 || term_mu[y] < 0) continue;
      const Rational& bound = mu.at(term_mu[x], term_mu[y]);
      if (bound <= 0) continue;
      LpConstraint row;
      row.coeffs.assign(nv, Rational(0));
      row.coeffs[var[x][y]] = 1;
      row.rel = Relation::GE;
      row.rhs = bound;
      lp.rows.push_back(std::move(row));
    }

  // Row generation over the triangle inequalities.
  std::set<std::tuple<int, int, int>> added;
  LpSolution sol;
  for (;;) {
    sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("dual LP must be solvable");
    bool violated = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (x == y || y == z || x == z) continue;
          if (added.count({x, y, z})) continue;
          if (sol.x[var[x][y]] + sol.x[var[y][z]] >= sol.x[var[x][z]]) continue;
          LpConstraint row;
          row.coeffs.assign(nv, Rational(0));
          row.coeffs[var[x][y]] += 1;
          row.coeffs[var[y][z]] += 1;
          row.coeffs[var[x][z]] -= 1;
          row.rel = Relation::GE;
          row.rhs = 0;
          lp.rows.push_back(std::move(row));
          added.insert({x, y, z});
          violated = true;
        }
    if (!violated) break;
  }

  SolveReport rep;
  rep.value = sol.objective;
  rep.method = SolveMethod::Lp;
  DirectedDistance d = zero_distance(net.nodes);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) d.at(x, y) = sol.x[var[x][y]];
  rep.dual_metric = std::move(d);
  return rep;
}

SolveReport solve_path_lp(const DirectedDistance& mu, const Network& net,
                          int node_budget, int max_paths) {
  const int n = net.size();
  if (n > node_budget)
    throw BudgetExceeded("path enumeration limited to " +
                         std::to_string(node_budget) + " nodes");
  auto idx = mu_index_of_node(mu, net);
  auto cap = pair_capacities(net);

  std::vector<std::vector<int>> adj(n);
  for (const auto& [pair, c] : cap) adj[pair.first].push_back(pair.second);

  // All simple paths between distinct terminals (terminals may be interior).
  std::vector<std::vector<int>> paths;
  std::vector<int> walk;
  std::vector<char> on_walk(n, 0);
  auto dfs = [&](auto&& self, int v) -> void {
    if ((int)paths.size() > max_paths)
      throw BudgetExceeded("too many simple paths");
    walk.push_back(v);
    on_walk[v] = 1;
    if (walk.size() >= 2 && idx[v] >= 0) paths.push_back(walk);
    for (int w : adj[v])
      if (!on_walk[w]) self(self, w);
    on_walk[v] = 0;
    walk.pop_back();
  };
  for (int t : net.terminals) dfs(dfs, t);

  // Keep value-carrying paths only.
  std::vector<std::vector<int>> used;
  std::vector<Rational> weight;
  for (auto& p : paths) {
    const Rational& w = mu.at(idx[p.front()], idx[p.back()]);
    if (w > 0) {
      used.push_back(std::move(p));
      weight.push_back(w);
    }
  }

  LpProblem lp;
  lp.num_vars = (int)used.size();
  lp.maximize = true;
  lp.objective = weight;
  std::map<std::pair<int, int>, std::vector<int>> pair_paths;
  for (int p = 0; p < (int)used.size(); ++p)
    for (size_t i = 0; i + 1 < used[p].size(); ++i)
      pair_paths[{used[p][i], used[p][i + 1]}].push_back(p);
  for (const auto& [pair, list] : pair_paths) {
    LpConstraint row;
    row.coeffs.assign(lp.num_vars, Rational(0));
    for (int p : list) row.coeffs[p] += 1;
    row.rel = Relation::LE;
    row.rhs = rat_ll(cap.at(pair));
    lp.rows.push_back(std::move(row));
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("path LP must be solvable");

  SolveReport rep;
  rep.value = sol.objective;
  rep.method = SolveMethod::Lp;
  Multiflow f;
  for (int p = 0; p < lp.num_vars; ++p)
    if (sol.x[p] > 0) {
      f.paths.push_back(used[p]);
      f.values.push_back(sol.x[p]);
    }
  rep.multiflow = std::move(f);
  return rep;
}

DirectedDistance realization_distance(const OrientedTreeRealization& real) {
  const int n = (int)real.terminals.size();
  DirectedDistance mu = zero_distance(real.terminals);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) mu.at(s, t) = subtree_distance(real, s, t);
  return mu;
}

namespace {

struct TreeCutContext {
  DirectedDistance mu;
  LaminarDecomposition dec;
  std::vector<int> term_node;  // mu index -> network node
  bool certified = false;      // Eulerian hypothesis holds
};

TreeCutContext prepare_tree_solve(const OrientedTreeRealization& real,
                                  const Network& net) {
  TreeCutContext ctx{realization_distance(real), cut_decomposition(real), {}, false};
  if (!validate_realization(real, ctx.mu))
    throw std::invalid_argument("invalid oriented-tree realization");
  ctx.term_node = terminal_nodes(ctx.mu, net);
  ProperTerminals proper = proper_terminals(ctx.mu, real);
  std::vector<int> proper_nodes;
  for (int s : proper.terminals) proper_nodes.push_back(ctx.term_node[s]);
  ctx.certified = eulerian_status(net, proper_nodes).properly_inner;
  return ctx;
}

Rational cut_sum_value(const TreeCutContext& ctx, const Network& net,
                       std::vector<EdgeCutCertificate>* certs) {
  Rational total = 0;
  for (size_t i = 0; i < ctx.dec.cuts.size(); ++i) {
    std::vector<int> a_nodes, b_nodes;
    for (int s = 0; s < ctx.mu.size(); ++s) {
      if (ctx.dec.cuts[i].a >> s & 1) a_nodes.push_back(ctx.term_node[s]);
      if (ctx.dec.cuts[i].b >> s & 1) b_nodes.push_back(ctx.term_node[s]);
    }
    MinCutResult mc = min_cut(net, a_nodes, b_nodes);
    total += ctx.dec.weights[i] * rat_ll(mc.value);
    if (certs)
      certs->push_back({ctx.dec.cuts[i], ctx.dec.weights[i], mc.value, mc.x});
  }
  return total;
}

}  // namespace

std::optional<Rational> tree_location_optimum(const OrientedTreeRealization& real,
                                              const Network& net,
                                              long long max_product) {
  const int vg = net.size();
  const int vt = real.tree.num_nodes;
  if ((long long)vg * vt > max_product) return std::nullopt;

  DirectedDistance mu = realization_distance(real);
  auto idx = mu_index_of_node(mu, net);

  std::vector<std::vector<Rational>> dt(vt, std::vector<Rational>(vt));
  for (int u = 0; u < vt; ++u)
    for (int v = 0; v < vt; ++v) dt[u][v] = tree_distance(real.tree, u, v);

  std::vector<std::vector<int>> choices(vg);
  long long assignments = 1;
  for (int v = 0; v < vg; ++v) {
    if (idx[v] >= 0)
      choices[v] = real.subtrees[idx[v]];
    else {
      choices[v].resize(vt);
      for (int u = 0; u < vt; ++u) choices[v][u] = u;
    }
    assignments *= (long long)choices[v].size();
    if (assignments > (1ll << 22)) return std::nullopt;
  }

  std::vector<int> pick(vg, 0);
  std::optional<Rational> best;
  for (;;) {
    Rational total = 0;
    for (const auto& e : net.edges)
      if (e.cap > 0)
        total += rat_ll(e.cap) * dt[choices[e.tail][pick[e.tail]]]
                                   [choices[e.head][pick[e.head]]];
    if (!best || total < *best) best = total;
    int v = 0;
    while (v < vg && ++pick[v] == (int)choices[v].size()) pick[v++] = 0;
    if (v == vg) break;
  }
  return best;
}

SolveReport solve_tree(const OrientedTreeRealization& real, const Network& net) {
  TreeCutContext ctx = prepare_tree_solve(real, net);
  SolveReport rep;
  rep.method = SolveMethod::Tree;
  rep.value = cut_sum_value(ctx, net, &rep.tree_cuts);
  rep.optimum_certified = ctx.certified;
  rep.location_optimum = tree_location_optimum(real, net);
  if (ctx.certified && rep.location_optimum &&
      *rep.location_optimum != rep.value)
    throw std::logic_error("tree min-max: location optimum disagrees with the "
                           "cut sum on a certified instance");
  return rep;
}

namespace {

// Unit-capacity edge with the original-network walk it stands for.
struct UnitEdge {
  int tail;
  int head;
  std::vector<int> walk;  // node sequence tail..head in the original network
};

Rational unit_cut_sum(const TreeCutContext& ctx, const Network& base,
                      const std::vector<UnitEdge>& edges) {
  Network cur;
  cur.nodes = base.nodes;
  cur.terminals = base.terminals;
  for (const auto& e : edges) cur.edges.push_back({e.tail, e.head, 1});
  return cut_sum_value(ctx, cur, nullptr);
}

std::vector<int> strip_cycles(const std::vector<int>& walk) {
  std::vector<int> out;
  for (int v : walk) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end())
      out.erase(it + 1, out.end());
    else
      out.push_back(v);
  }
  return out;
}

}  // namespace

SolveReport solve_tree_integral(const OrientedTreeRealization& real,
                                const Network& net) {
  TreeCutContext ctx = prepare_tree_solve(real, net);
  if (!ctx.certified)
    throw HypothesisViolation(
        "network is not properly inner Eulerian relative to the realization");

  const Rational target = cut_sum_value(ctx, net, nullptr);

  std::vector<UnitEdge> edges;
  for (const auto& e : net.edges) {
    if (e.tail == e.head) continue;
    for (long long k = 0; k < e.cap; ++k)
      edges.push_back({e.tail, e.head, {e.tail, e.head}});
  }

  auto sort_edges = [&]() {
    std::stable_sort(edges.begin(), edges.end(),
                     [](const UnitEdge& a, const UnitEdge& b) {
                       return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
                     });
  };
  sort_edges();

  for (;;) {
    bool accepted = false;
    for (size_t i = 0; i < edges.size() && !accepted; ++i)
      for (size_t j = 0; j < edges.size() && !accepted; ++j) {
        if (i == j || edges[i].head != edges[j].tail) continue;
        std::vector<UnitEdge> next;
        next.reserve(edges.size());
        for (size_t k = 0; k < edges.size(); ++k)
          if (k != i && k != j) next.push_back(edges[k]);
        if (edges[i].tail != edges[j].head) {
          UnitEdge merged;
          merged.tail = edges[i].tail;
          merged.head = edges[j].head;
          merged.walk = edges[i].walk;
          merged.walk.insert(merged.walk.end(), edges[j].walk.begin() + 1,
                             edges[j].walk.end());
          next.push_back(std::move(merged));
        }
        if (unit_cut_sum(ctx, net, next) == target) {
          edges = std::move(next);
          sort_edges();
          accepted = true;
        }
      }
    if (!accepted) break;
  }

  auto node_mu = mu_index_of_node(ctx.mu, net);
  Multiflow f;
  Rational extracted = 0;
  std::map<std::vector<int>, Rational> merged_paths;
  for (const auto& e : edges) {
    int s = node_mu[e.tail], t = node_mu[e.head];
    if (s < 0 || t < 0) continue;
    const Rational& w = ctx.mu.at(s, t);
    if (w <= 0) continue;
    extracted += w;
    merged_paths[strip_cycles(e.walk)] += 1;
  }
  if (extracted != target)
    throw std::logic_error(
        "splitting-off terminated below the min-cut sum despite the Eulerian "
        "hypothesis");
  for (auto& [path, lambda] : merged_paths) {
    f.paths.push_back(path);
    f.values.push_back(lambda);
  }

  SolveReport rep;
  rep.value = target;
  rep.method = SolveMethod::Tree;
  rep.multiflow = std::move(f);
  cut_sum_value(ctx, net, &rep.tree_cuts);
  if (auto bad = feasibility_violation(*rep.multiflow, net))
    throw std::logic_error("splitting-off produced an infeasible multiflow");
  return rep;
}

SolveReport solve_interval_mcc(const IntervalRepresentation& rep_in,
                               const DirectedDistance& mu, const Network& net) {
  if (!validate_interval(rep_in, mu))
    throw std::invalid_argument("interval representation does not match mu");
  auto term_node = terminal_nodes(mu, net);
  auto node_mu = mu_index_of_node(mu, net);

  long long cap_sum = 0;
  for (const auto& e : net.edges) cap_sum += e.cap;

  std::vector<Rational> all_mu;
  for (int s = 0; s < mu.size(); ++s)
    for (int t = 0; t < mu.size(); ++t) all_mu.push_back(mu.at(s, t));
  mpz_class scale_z = denominator_lcm(all_mu);
  if (!scale_z.fits_slong_p())
    throw std::invalid_argument("weight denominators too large");
  long long scale = scale_z.get_si();

  Network aug;
  aug.nodes = net.nodes;
  aug.terminals = net.terminals;
  std::vector<long long> cost;
  for (const auto& e : net.edges) {
    aug.edges.push_back(e);
    cost.push_back(0);
  }
  struct TerminalEdge {
    int edge_index;
    int s, t;  // mu indices: commodity (s, t), edge runs t -> s
  };
  std::vector<TerminalEdge> terminal_edges;
  for (int s = 0; s < mu.size(); ++s)
    for (int t = 0; t < mu.size(); ++t) {
      if (s == t || mu.at(s, t) <= 0) continue;
      terminal_edges.push_back({(int)aug.edges.size(), s, t});
      aug.edges.push_back({term_node[t], term_node[s], cap_sum});
      Rational scaled = mu.at(s, t) * rat_ll(scale);
      cost.push_back(-(long long)scaled.get_num().get_si());
    }

  CirculationResult mcc = min_cost_circulation(aug, cost);
  if (!circulation_is_optimal(aug, cost, mcc.circulation))
    throw std::logic_error("circulation reported without optimality");

  // Edge-level cycle extraction of the circulation.
  std::vector<long long> rem = mcc.circulation;
  std::vector<std::vector<int>> cycles;  // edge index sequences
  std::vector<long long> mult;
  const int n = aug.size();
  std::vector<std::vector<int>> out_edges(n);
  for (int i = 0; i < (int)aug.edges.size(); ++i)
    out_edges[aug.edges[i].tail].push_back(i);
  for (;;) {
    int start = -1;
    for (int i = 0; i < (int)aug.edges.size() && start < 0; ++i)
      if (rem[i] > 0) start = aug.edges[i].tail;
    if (start < 0) break;
    std::vector<int> stack_nodes{start}, stack_edges;
    std::vector<int> pos(n, -1);
    pos[start] = 0;
    for (;;) {
      int v = stack_nodes.back();
      int chosen = -1;
      for (int i : out_edges[v])
        if (rem[i] > 0) {
          chosen = i;
          break;
        }
      if (chosen < 0) throw std::logic_error("circulation walk stuck");
      int w = aug.edges[chosen].head;
      if (pos[w] >= 0) {
        std::vector<int> cyc(stack_edges.begin() + pos[w], stack_edges.end());
        cyc.push_back(chosen);
        long long m = rem[cyc[0]];
        for (int e : cyc) m = std::min(m, rem[e]);
        for (int e : cyc) rem[e] -= m;
        cycles.push_back(cyc);
        mult.push_back(m);
        break;
      }
      stack_nodes.push_back(w);
      stack_edges.push_back(chosen);
      pos[w] = (int)stack_nodes.size() - 1;
    }
  }

  std::vector<char> is_terminal_edge(aug.edges.size(), 0);
  std::vector<int> commodity_s(aug.edges.size(), -1), commodity_t(aug.edges.size(), -1);
  for (const auto& te : terminal_edges) {
    is_terminal_edge[te.edge_index] = 1;
    commodity_s[te.edge_index] = te.s;
    commodity_t[te.edge_index] = te.t;
  }

  std::map<std::vector<int>, Rational> merged_paths;
  Rational total_value = 0;
  for (size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    int first_term = -1;
    for (size_t i = 0; i < cyc.size(); ++i)
      if (is_terminal_edge[cyc[i]]) {
        first_term = (int)i;
        break;
      }
    if (first_term < 0) continue;

    Rational cycle_paths_value = 0;
    Rational cycle_edge_value = 0;
    std::vector<int> term_pos;
    for (size_t i = 0; i < cyc.size(); ++i)
      if (is_terminal_edge[cyc[i]]) {
        term_pos.push_back((int)i);
        cycle_edge_value += mu.at(commodity_s[cyc[i]], commodity_t[cyc[i]]);
      }
    // Segments run between consecutive terminal edges, wrapping around.
    for (size_t j = 0; j < term_pos.size(); ++j) {
      int from = term_pos[j];
      int to = term_pos[(j + 1) % term_pos.size()];
      std::vector<int> segment;
      for (int k = (from + 1) % (int)cyc.size(); k != to;
           k = (k + 1) % (int)cyc.size()) {
        int e = cyc[k];
        if (segment.empty()) segment.push_back(aug.edges[e].tail);
        segment.push_back(aug.edges[e].head);
      }
      if (segment.size() >= 2 && segment.front() != segment.back()) {
        int ps = node_mu[segment.front()], pt = node_mu[segment.back()];
        const Rational& w = mu.at(ps, pt);
        if (w > 0) {
          cycle_paths_value += w;
          merged_paths[strip_cycles(segment)] += rat_ll(mult[c]);
        }
      }
    }
    (void)first_term;

    // Cycle inequality: path values cover the terminal-edge gain.
    if (cycle_paths_value < cycle_edge_value)
      throw std::logic_error("circulation cycle cannot be converted to paths");
    total_value += rat_ll(mult[c]) * cycle_paths_value;
  }

  Rational expected = rat_ll(-mcc.total_cost) / rat_ll(scale);
  if (total_value != expected)
    throw std::logic_error("extracted multiflow misses the circulation value");

  Multiflow f;
  for (auto& [path, lambda] : merged_paths) {
    f.paths.push_back(path);
    f.values.push_back(lambda);
  }
  SolveReport out;
  out.value = total_value;
  out.method = SolveMethod::Mcc;
  out.multiflow = std::move(f);
  if (auto bad = feasibility_violation(*out.multiflow, net))
    throw std::logic_error("circulation reduction produced an infeasible flow");
  return out;
}

SolveReport lock(const std::vector<PartialCut>& family, const Network& net) {
  std::vector<std::string> ground;
  for (int t : net.terminals) ground.push_back(net.nodes[t]);
  const int n = (int)ground.size();

  std::set<std::pair<uint32_t, uint32_t>> dedup;
  LaminarDecomposition dec;
  for (const auto& cut : family) {
    if (!cut.valid(n)) throw std::invalid_argument("cut is not over the terminals");
    if (cut.a == 0 || cut.b == 0)
      throw std::invalid_argument("cut sides must be nonempty");
    if (dedup.insert({cut.a, cut.b}).second) {
      dec.cuts.push_back(cut);
      dec.weights.push_back(Rational(1));
    }
  }
  for (size_t i = 0; i < dec.cuts.size(); ++i)
    for (size_t j = i + 1; j < dec.cuts.size(); ++j)
      if (!cuts_laminar(dec.cuts[i], dec.cuts[j]))
        throw std::invalid_argument("family is not laminar");

  OrientedTreeRealization real = realization_from_decomposition(dec, ground);
  SolveReport rep = solve_tree_integral(real, net);
  rep.method = SolveMethod::Locking;
  return rep;
}

bool verify_locking(const Multiflow& f, const std::vector<PartialCut>& family,
                    const Network& net) {
  if (feasibility_violation(f, net)) throw std::invalid_argument("infeasible flow");
  std::vector<int> terms = net.terminals;
  for (const auto& cut : family) {
    std::vector<int> a_nodes, b_nodes;
    for (size_t s = 0; s < terms.size(); ++s) {
      if (cut.a >> s & 1) a_nodes.push_back(terms[s]);
      if (cut.b >> s & 1) b_nodes.push_back(terms[s]);
    }
    Rational routed = 0;
    for (size_t p = 0; p < f.paths.size(); ++p) {
      int s = f.paths[p].front(), t = f.paths[p].back();
      bool from_a = std::find(a_nodes.begin(), a_nodes.end(), s) != a_nodes.end();
      bool to_b = std::find(b_nodes.begin(), b_nodes.end(), t) != b_nodes.end();
      if (from_a && to_b) routed += f.values[p];
    }
    if (routed != rat_ll(min_cut(net, a_nodes, b_nodes).value)) return false;
  }
  return true;
}

}  // namespace dirflow
