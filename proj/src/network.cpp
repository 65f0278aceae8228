#include "dirflow/network.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace dirflow {

int Network::node_index(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (nodes[i] == id) return i;
  throw std::invalid_argument("unknown node: " + id);
}

bool Network::is_terminal(int v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

Network make_network(std::vector<std::string> nodes, std::vector<int> terminals,
                     std::vector<Network::Edge> edges) {
  const int n = (int)nodes.size();
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  for (int t : terminals)
    if (t < 0 || t >= n) throw std::invalid_argument("terminal out of range");
  for (const auto& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.cap < 0) throw std::invalid_argument("negative capacity");
  }
  return Network{std::move(nodes), std::move(terminals), std::move(edges)};
}

EulerianStatus eulerian_status(const Network& net,
                               const std::vector<int>& proper_terminals) {
  const int n = net.size();
  std::vector<long long> balance(n, 0);
  for (const auto& e : net.edges) {
    balance[e.tail] += e.cap;
    balance[e.head] -= e.cap;
  }
  EulerianStatus st;
  st.inner = st.totally = st.properly_inner = true;
  for (int v = 0; v < n; ++v) {
    if (balance[v] == 0) continue;
    st.totally = false;
    if (!net.is_terminal(v)) {
      st.inner = false;
      st.violating.push_back(v);
    }
    bool proper = std::find(proper_terminals.begin(), proper_terminals.end(), v) !=
                  proper_terminals.end();
    if (!proper) st.properly_inner = false;
  }
  return st;
}

namespace {

// Dinic on an explicit residual arc list.
struct Dinic {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, it;

  explicit Dinic(int n) : g(n), level(n), it(n) {}

  void add_edge(int u, int v, long long cap) {
    g[u].push_back({v, cap, (int)g[v].size()});
    g[v].push_back({u, 0, (int)g[u].size() - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::deque<int> q{s};
    level[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& a : g[v])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push_back(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = it[v]; i < (int)g[v].size(); ++i) {
      Arc& a = g[v][i];
      if (a.cap <= 0 || level[a.to] != level[v] + 1) continue;
      long long d = dfs(a.to, t, std::min(f, a.cap));
      if (d > 0) {
        a.cap -= d;
        g[a.to][a.rev].cap += d;
        return d;
      }
    }
    return 0;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max()))
        total += f;
    }
    return total;
  }

  std::vector<char> reachable(int s) {
    std::vector<char> seen(g.size(), 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& a : g[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push_back(a.to);
        }
    }
    return seen;
  }
};

}  // namespace

MaxFlowResult max_flow(const Network& net, const std::vector<int>& A,
                       const std::vector<int>& B) {
  const int n = net.size();
  for (int a : A)
    for (int b : B)
      if (a == b) throw std::invalid_argument("overlapping source and sink sets");

  long long inf = 1;
  for (const auto& e : net.edges) inf += e.cap;

  Dinic din(n + 2);
  const int s = n, t = n + 1;
  std::vector<int> edge_arc(net.edges.size());
  for (size_t i = 0; i < net.edges.size(); ++i) {
    edge_arc[i] = (int)din.g[net.edges[i].tail].size();
    din.add_edge(net.edges[i].tail, net.edges[i].head, net.edges[i].cap);
  }
  for (int a : A) din.add_edge(s, a, inf);
  for (int b : B) din.add_edge(b, t, inf);

  MaxFlowResult res;
  res.value = din.run(s, t);
  res.flow.resize(net.edges.size());
  for (size_t i = 0; i < net.edges.size(); ++i) {
    const auto& arc = din.g[net.edges[i].tail][edge_arc[i]];
    res.flow[i] = net.edges[i].cap - arc.cap;
  }
  auto seen = din.reachable(s);
  res.source_side.assign(seen.begin(), seen.begin() + n);
  return res;
}

long long cut_capacity(const Network& net, const std::vector<char>& in_x) {
  long long total = 0;
  for (const auto& e : net.edges)
    if (in_x[e.tail] && !in_x[e.head]) total += e.cap;
  return total;
}

MinCutResult min_cut(const Network& net, const std::vector<int>& A,
                     const std::vector<int>& B) {
  MaxFlowResult mf = max_flow(net, A, B);
  MinCutResult res;
  res.value = mf.value;
  for (int v = 0; v < net.size(); ++v)
    if (mf.source_side[v]) res.x.push_back(v);
  return res;
}

namespace {

struct ResidualArc {
  int tail;
  int head;
  long long cost;
  int edge;       // underlying edge index
  bool forward;
};

// Exact-length Bellman layers: dist_k[v] = min cost walk of exactly k arcs
// (every node is a source). A negative cycle exists iff some node satisfies
// dist_n[v] < min_{k<n} dist_k[v]; the n-arc walk to such v then contains a
// node repeat whose enclosed cycle is negative.
std::vector<int> find_negative_cycle(int n, const std::vector<ResidualArc>& arcs) {
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<std::vector<long long>> dist(n + 1, std::vector<long long>(n, inf));
  std::vector<std::vector<int>> pred(n + 1, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) dist[0][v] = 0;
  for (int k = 1; k <= n; ++k)
    for (int a = 0; a < (int)arcs.size(); ++a) {
      const auto& arc = arcs[a];
      if (dist[k - 1][arc.tail] == inf) continue;
      long long cand = dist[k - 1][arc.tail] + arc.cost;
      if (cand < dist[k][arc.head]) {
        dist[k][arc.head] = cand;
        pred[k][arc.head] = a;
      }
    }

  for (int v = 0; v < n; ++v) {
    long long best = inf;
    for (int k = 0; k < n; ++k) best = std::min(best, dist[k][v]);
    if (dist[n][v] >= best) continue;

    // Backtrack the n-arc walk and cut out a cycle at the first repeat.
    std::vector<int> walk_nodes(n + 1), walk_arcs(n);
    walk_nodes[n] = v;
    for (int k = n; k >= 1; --k) {
      walk_arcs[k - 1] = pred[k][walk_nodes[k]];
      walk_nodes[k - 1] = arcs[walk_arcs[k - 1]].tail;
    }
    // The first repeat bounds a simple cycle; if it were nonnegative,
    // deleting it would beat dist_{n-len}[v], contradicting minimality.
    std::vector<int> seen_at(n, -1);
    for (int k = 0; k <= n; ++k) {
      int u = walk_nodes[k];
      if (seen_at[u] >= 0) {
        std::vector<int> cycle(walk_arcs.begin() + seen_at[u],
                               walk_arcs.begin() + k);
        long long total = 0;
        for (int a : cycle) total += arcs[a].cost;
        if (total >= 0)
          throw std::logic_error("negative-cycle extraction failed");
        return cycle;
      }
      seen_at[u] = k;
    }
  }
  return {};
}

std::vector<ResidualArc> residual_arcs(const Network& net,
                                       const std::vector<long long>& cost,
                                       const std::vector<long long>& f) {
  std::vector<ResidualArc> arcs;
  for (size_t i = 0; i < net.edges.size(); ++i) {
    if (net.edges[i].cap - f[i] > 0)
      arcs.push_back({net.edges[i].tail, net.edges[i].head, cost[i], (int)i, true});
    if (f[i] > 0)
      arcs.push_back({net.edges[i].head, net.edges[i].tail, -cost[i], (int)i, false});
  }
  return arcs;
}

}  // namespace

CirculationResult min_cost_circulation(const Network& net,
                                       const std::vector<long long>& cost) {
  const int m = (int)net.edges.size();
  if ((int)cost.size() != m) throw std::invalid_argument("cost size mismatch");

  std::vector<long long> f(m, 0);
  for (;;) {
    auto arcs = residual_arcs(net, cost, f);
    auto cycle = find_negative_cycle(net.size(), arcs);
    if (cycle.empty()) break;
    long long push = std::numeric_limits<long long>::max();
    for (int a : cycle) {
      const auto& arc = arcs[a];
      long long cap = arc.forward ? net.edges[arc.edge].cap - f[arc.edge]
                                  : f[arc.edge];
      push = std::min(push, cap);
    }
    for (int a : cycle) {
      const auto& arc = arcs[a];
      f[arc.edge] += arc.forward ? push : -push;
    }
  }

  CirculationResult res;
  res.circulation = f;
  res.total_cost = 0;
  for (int i = 0; i < m; ++i) res.total_cost += cost[i] * f[i];
  return res;
}

bool circulation_is_optimal(const Network& net, const std::vector<long long>& cost,
                            const std::vector<long long>& circulation) {
  auto arcs = residual_arcs(net, cost, circulation);
  return find_negative_cycle(net.size(), arcs).empty();
}

namespace {

// Shared walk-extraction core. Value is long long or Rational.
template <typename Value>
Decomposition<Value> extract_all(const Network& net, std::vector<Value> rem,
                                 bool paths_allowed) {
  const int n = net.size();
  const int m = (int)net.edges.size();
  Decomposition<Value> out;

  std::vector<std::vector<int>> out_edges(n);
  for (int i = 0; i < m; ++i) out_edges[net.edges[i].tail].push_back(i);

  auto net_out = [&](int v) {
    Value s = Value(0);
    for (int i : out_edges[v]) s = s + rem[i];
    return s;
  };
  auto net_in = [&](int v) {
    Value s = Value(0);
    for (int i = 0; i < m; ++i)
      if (net.edges[i].head == v) s = s + rem[i];
    return s;
  };

  auto pick_out = [&](int v) -> int {
    for (int i : out_edges[v])
      if (rem[i] > Value(0)) return i;
    return -1;
  };

  auto extract_from = [&](int start, bool stop_at_terminals) {
    // Walk until a node repeats (pop a cycle) or a terminal stops a path.
    std::vector<int> stack_nodes{start};
    std::vector<int> stack_edges;
    std::vector<int> pos(n, -1);
    pos[start] = 0;
    for (;;) {
      int v = stack_nodes.back();
      if (stop_at_terminals && (int)stack_edges.size() > 0 && net.is_terminal(v)) {
        Value mult = rem[stack_edges[0]];
        for (int e : stack_edges) mult = std::min(mult, rem[e]);
        for (int e : stack_edges) rem[e] = rem[e] - mult;
        out.paths.push_back({stack_nodes, mult});
        return;
      }
      int e = pick_out(v);
      if (e < 0)
        throw std::logic_error("walk stuck; conservation was checked, so this "
                               "indicates an internal error");
      int w = net.edges[e].head;
      if (pos[w] >= 0) {
        // Close the cycle w ... v -> w.
        std::vector<int> cyc_nodes(stack_nodes.begin() + pos[w], stack_nodes.end());
        std::vector<int> cyc_edges(stack_edges.begin() + pos[w], stack_edges.end());
        cyc_edges.push_back(e);
        Value mult = rem[cyc_edges[0]];
        for (int ce : cyc_edges) mult = std::min(mult, rem[ce]);
        for (int ce : cyc_edges) rem[ce] = rem[ce] - mult;
        out.cycles.push_back({cyc_nodes, mult});
        return;
      }
      stack_nodes.push_back(w);
      stack_edges.push_back(e);
      pos[w] = (int)stack_nodes.size() - 1;
    }
  };

  for (;;) {
    int start = -1;
    if (paths_allowed) {
      for (int t : net.terminals)
        if (net_out(t) > net_in(t)) {
          start = t;
          break;
        }
    }
    if (start >= 0) {
      extract_from(start, true);
      continue;
    }
    int live = -1;
    for (int i = 0; i < m && live < 0; ++i)
      if (rem[i] > Value(0)) live = net.edges[i].tail;
    if (live < 0) break;
    extract_from(live, false);
  }
  return out;
}

}  // namespace

FlowDecomposition decompose_eulerian_capacity(const Network& net) {
  EulerianStatus st = eulerian_status(net);
  if (!st.inner)
    throw std::invalid_argument("network is not inner Eulerian");
  std::vector<long long> rem;
  rem.reserve(net.edges.size());
  for (const auto& e : net.edges) rem.push_back(e.cap);
  return extract_all<long long>(net, std::move(rem), true);
}

RationalDecomposition decompose_flow(const std::vector<Rational>& flow,
                                     const Network& net, bool cycles_only) {
  const int n = net.size();
  const int m = (int)net.edges.size();
  if ((int)flow.size() != m) throw std::invalid_argument("flow size mismatch");
  for (int i = 0; i < m; ++i)
    if (flow[i] < 0) throw std::invalid_argument("negative flow entry");

  std::vector<Rational> balance(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    balance[net.edges[i].tail] += flow[i];
    balance[net.edges[i].head] -= flow[i];
  }
  for (int v = 0; v < n; ++v) {
    bool must_conserve = cycles_only || !net.is_terminal(v);
    if (must_conserve && balance[v] != 0)
      throw std::invalid_argument("flow conservation violated at node " +
                                  net.nodes[v]);
  }
  return extract_all<Rational>(net, flow, !cycles_only);
}

}  // namespace dirflow
