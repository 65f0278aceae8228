#include "dirflow/classify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "dirflow/simplex.hpp"

namespace dirflow {

namespace {

// Difference-constraint arc x - y <= w encoded as y -> x with weight w.
struct DiffArc {
  int from;
  int to;
  Rational weight;
  std::string label;
};

// Exact-layer negative cycle detection (every node is a source).
std::vector<int> negative_cycle_arcs(int n, const std::vector<DiffArc>& arcs) {
  std::vector<std::vector<std::optional<Rational>>> dist(
      n + 1, std::vector<std::optional<Rational>>(n));
  std::vector<std::vector<int>> pred(n + 1, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) dist[0][v] = Rational(0);
  for (int k = 1; k <= n; ++k)
    for (int a = 0; a < (int)arcs.size(); ++a) {
      const auto& arc = arcs[a];
      if (!dist[k - 1][arc.from]) continue;
      Rational cand = *dist[k - 1][arc.from] + arc.weight;
      if (!dist[k][arc.to] || cand < *dist[k][arc.to]) {
        dist[k][arc.to] = cand;
        pred[k][arc.to] = a;
      }
    }
  for (int v = 0; v < n; ++v) {
    std::optional<Rational> best;
    for (int k = 0; k < n; ++k)
      if (dist[k][v] && (!best || *dist[k][v] < *best)) best = dist[k][v];
    if (!dist[n][v] || !best || *dist[n][v] >= *best) continue;
    std::vector<int> walk_nodes(n + 1), walk_arcs(n);
    walk_nodes[n] = v;
    for (int k = n; k >= 1; --k) {
      walk_arcs[k - 1] = pred[k][walk_nodes[k]];
      walk_nodes[k - 1] = arcs[walk_arcs[k - 1]].from;
    }
    std::vector<int> seen_at(n, -1);
    for (int k = 0; k <= n; ++k) {
      int u = walk_nodes[k];
      if (seen_at[u] >= 0)
        return std::vector<int>(walk_arcs.begin() + seen_at[u],
                                walk_arcs.begin() + k);
      seen_at[u] = k;
    }
  }
  return {};
}

}  // namespace

IntervalResult interval_representation(const DirectedDistance& mu) {
  const int n = mu.size();
  // Variables a_0..n-1, b_0..n-1 (b index offset n).
  std::vector<DiffArc> arcs;
  auto add = [&](int y, int x, Rational w, std::string label) {
    arcs.push_back({y, x, std::move(w), std::move(label)});
  };
  for (int s = 0; s < n; ++s) {
    // a_s - b_s <= 0
    add(n + s, s, Rational(0), "a(" + mu.elements[s] + ") <= b(" + mu.elements[s] + ")");
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const Rational& m = mu.at(s, t);
      if (m > 0) {
        add(n + s, t, m,
            "a(" + mu.elements[t] + ") - b(" + mu.elements[s] + ") <= mu");
        add(t, n + s, -m,
            "b(" + mu.elements[s] + ") - a(" + mu.elements[t] + ") <= -mu");
      } else {
        add(n + s, t, Rational(0),
            "a(" + mu.elements[t] + ") <= b(" + mu.elements[s] + ")");
      }
    }
  }

  IntervalResult out;
  auto cyc = negative_cycle_arcs(2 * n, arcs);
  if (!cyc.empty()) {
    for (int a : cyc) out.negative_cycle.push_back(arcs[a].label);
    return out;
  }

  // Bellman-Ford to convergence (no negative cycle, so at most 2n passes).
  std::vector<Rational> dist(2 * n, Rational(0));
  for (int pass = 0; pass < 2 * n; ++pass) {
    bool changed = false;
    for (const auto& arc : arcs)
      if (dist[arc.from] + arc.weight < dist[arc.to]) {
        dist[arc.to] = dist[arc.from] + arc.weight;
        changed = true;
      }
    if (!changed) break;
  }

  IntervalRepresentation rep;
  rep.a.assign(dist.begin(), dist.begin() + n);
  rep.b.assign(dist.begin() + n, dist.end());
  if (!validate_interval(rep, mu))
    throw std::logic_error("interval system solved but validation failed");
  out.rep = std::move(rep);
  return out;
}

bool validate_interval(const IntervalRepresentation& rep,
                       const DirectedDistance& mu) {
  const int n = mu.size();
  if ((int)rep.a.size() != n || (int)rep.b.size() != n) return false;
  for (int s = 0; s < n; ++s)
    if (rep.a[s] > rep.b[s]) return false;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Rational v = rep.a[t] - rep.b[s];
      if (v < 0) v = 0;
      if (v != mu.at(s, t)) return false;
    }
  return true;
}

Rational tree_distance(const OrientedTree& tree, int u, int v) {
  const int n = tree.num_nodes;
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("unknown tree node");
  if (u == v) return Rational(0);
  // BFS over the underlying tree recording the unique walk.
  std::vector<int> pred_node(n, -1), pred_edge(n, -1);
  std::deque<int> q{u};
  pred_node[u] = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int e = 0; e < (int)tree.edges.size(); ++e) {
      int a = tree.edges[e].tail, b = tree.edges[e].head;
      for (int other : {b, a}) {
        int self = other == b ? a : b;
        if (self != x || pred_node[other] >= 0) continue;
        pred_node[other] = x;
        pred_edge[other] = e;
        q.push_back(other);
      }
    }
  }
  if (pred_node[v] < 0) throw std::invalid_argument("tree is not connected");
  Rational total = 0;
  for (int x = v; x != u; x = pred_node[x]) {
    const auto& e = tree.edges[pred_edge[x]];
    // Forward traversal means walking tail -> head.
    if (e.tail == pred_node[x] && e.head == x) total += tree.alpha[pred_edge[x]];
  }
  return total;
}

Rational subtree_distance(const OrientedTreeRealization& real, int s, int t) {
  std::optional<Rational> best;
  for (int u : real.subtrees[s])
    for (int v : real.subtrees[t]) {
      Rational d = tree_distance(real.tree, u, v);
      if (!best || d < *best) best = d;
    }
  if (!best) throw std::invalid_argument("empty subtree");
  return *best;
}

namespace {

bool subtree_connected(const OrientedTree& tree, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::vector<char> in_set(tree.num_nodes, 0), seen(tree.num_nodes, 0);
  for (int v : nodes) in_set[v] = 1;
  std::deque<int> q{nodes[0]};
  seen[nodes[0]] = 1;
  int count = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (const auto& e : tree.edges) {
      int other = -1;
      if (e.tail == x) other = e.head;
      if (e.head == x) other = e.tail;
      if (other < 0 || !in_set[other] || seen[other]) continue;
      seen[other] = 1;
      ++count;
      q.push_back(other);
    }
  }
  return count == (int)nodes.size();
}

bool tree_is_valid(const OrientedTree& tree) {
  if (tree.num_nodes <= 0) return false;
  if ((int)tree.edges.size() != tree.num_nodes - 1) return false;
  if (tree.alpha.size() != tree.edges.size()) return false;
  for (const auto& a : tree.alpha)
    if (a < 0) return false;
  std::vector<int> all(tree.num_nodes);
  for (int i = 0; i < tree.num_nodes; ++i) all[i] = i;
  return subtree_connected(tree, all);
}

}  // namespace

bool validate_realization(const OrientedTreeRealization& real,
                          const DirectedDistance& mu) {
  if (!tree_is_valid(real.tree)) return false;
  if (real.terminals != mu.elements) return false;
  if ((int)real.subtrees.size() != mu.size()) return false;
  for (const auto& f : real.subtrees)
    if (!subtree_connected(real.tree, f)) return false;
  for (int s = 0; s < mu.size(); ++s)
    for (int t = 0; t < mu.size(); ++t)
      if (subtree_distance(real, s, t) != mu.at(s, t)) return false;
  return true;
}

OrientedTreeRealization realization_from_decomposition(
    const LaminarDecomposition& dec, const std::vector<std::string>& ground) {
  const int n = (int)ground.size();

  // Merge duplicate cuts, drop nonpositive weights.
  std::map<std::pair<uint32_t, uint32_t>, Rational> merged;
  for (size_t i = 0; i < dec.cuts.size(); ++i) {
    if (dec.weights[i] <= 0) continue;
    merged[{dec.cuts[i].a, dec.cuts[i].b}] += dec.weights[i];
  }
  std::vector<PartialCut> cuts;
  std::vector<Rational> weights;
  for (auto& [key, w] : merged) {
    cuts.push_back(PartialCut{key.first, key.second});
    weights.push_back(w);
  }
  const int m = (int)cuts.size();
  if (m > 20) throw std::invalid_argument("laminar family too large");

  OrientedTreeRealization real;
  real.terminals = ground;
  if (m == 0) {
    real.tree.num_nodes = 1;
    real.subtrees.assign(n, {0});
    return real;
  }

  // Side vectors: bit i says which side of cut i a tree node lies on
  // (0 = source side A, 1 = sink side B). Laminarity forbids exactly one of
  // the four side combinations per pair of cuts.
  std::vector<std::vector<char>> allowed(m, std::vector<char>(4 * m, 1));
  auto forbid = [&](int i, int j, int gi, int gj) {
    allowed[i][4 * j + 2 * gi + gj] = 0;
  };
  auto subset = [](uint32_t p, uint32_t q) { return (p & ~q) == 0; };
  // Exactly one side combination is forbidden per pair. Exact antiparallel
  // pairs satisfy two of the four laminarity cases; first match decides, and
  // the symmetric cases keep (i,j) and (j,i) in agreement.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (subset(cuts[i].a, cuts[j].a) && subset(cuts[j].b, cuts[i].b))
        forbid(i, j, 0, 1);
      else if (subset(cuts[i].a, cuts[j].b) && subset(cuts[j].a, cuts[i].b))
        forbid(i, j, 0, 0);
      else if (subset(cuts[j].a, cuts[i].a) && subset(cuts[i].b, cuts[j].b))
        forbid(i, j, 1, 0);
      else if (subset(cuts[j].b, cuts[i].a) && subset(cuts[i].b, cuts[j].a))
        forbid(i, j, 1, 1);
      else
        throw std::invalid_argument("family is not laminar");
    }

  std::vector<uint32_t> node_sig;
  for (uint32_t g = 0; g < (1u << m); ++g) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        int gi = g >> i & 1, gj = g >> j & 1;
        if (!allowed[i][4 * j + 2 * gi + gj]) {
          ok = false;
          break;
        }
      }
    if (ok) node_sig.push_back(g);
  }

  const int num_nodes = (int)node_sig.size();
  std::map<uint32_t, int> node_of;
  for (int v = 0; v < num_nodes; ++v) node_of[node_sig[v]] = v;

  real.tree.num_nodes = num_nodes;
  std::vector<char> edge_seen(m, 0);
  for (int v = 0; v < num_nodes; ++v)
    for (int i = 0; i < m; ++i) {
      if (node_sig[v] >> i & 1) continue;  // orient from side 0 to side 1
      auto it = node_of.find(node_sig[v] | (1u << i));
      if (it == node_of.end()) continue;
      if (edge_seen[i])
        throw std::logic_error("laminar-to-tree: duplicated cut direction");
      edge_seen[i] = 1;
      real.tree.edges.push_back({v, it->second});
      real.tree.alpha.push_back(weights[i]);
    }
  for (int i = 0; i < m; ++i)
    if (!edge_seen[i]) throw std::logic_error("laminar-to-tree: missing cut edge");
  if ((int)real.tree.edges.size() != num_nodes - 1)
    throw std::logic_error("laminar-to-tree: side vectors are not a tree");

  real.subtrees.assign(n, {});
  for (int s = 0; s < n; ++s) {
    for (int v = 0; v < num_nodes; ++v) {
      bool match = true;
      for (int i = 0; i < m && match; ++i) {
        if (cuts[i].a >> s & 1) match = (node_sig[v] >> i & 1) == 0;
        else if (cuts[i].b >> s & 1) match = (node_sig[v] >> i & 1) == 1;
      }
      if (match) real.subtrees[s].push_back(v);
    }
    if (real.subtrees[s].empty())
      throw std::logic_error("laminar-to-tree: empty terminal region");
  }
  return real;
}

namespace {

// Exact feasibility of mu = sum alpha_i * delta_i over the given cuts.
std::optional<std::vector<Rational>> decomposition_weights(
    const DirectedDistance& mu, const std::vector<PartialCut>& cuts) {
  const int n = mu.size();
  LpProblem lp;
  lp.num_vars = (int)cuts.size();
  lp.objective.assign(lp.num_vars, Rational(0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      LpConstraint row;
      row.coeffs.assign(lp.num_vars, Rational(0));
      for (int i = 0; i < lp.num_vars; ++i)
        if ((cuts[i].a >> s & 1) && (cuts[i].b >> t & 1)) row.coeffs[i] = 1;
      row.rel = Relation::EQ;
      row.rhs = mu.at(s, t);
      lp.rows.push_back(std::move(row));
    }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  return sol.x;
}

}  // namespace

RealizationResult oriented_tree_realization(const DirectedDistance& mu,
                                            int budget) {
  const int n = mu.size();
  RealizationResult out;
  if (n > budget) {
    out.status = RealizationStatus::BudgetExceeded;
    return out;
  }

  // Candidate cuts must have mu positive across them.
  std::vector<PartialCut> cands;
  for (uint32_t a = 1; a < (1u << n); ++a)
    for (uint32_t b = 1; b < (1u << n); ++b) {
      if (a & b) continue;
      bool ok = true;
      for (int s = 0; s < n && ok; ++s)
        for (int t = 0; t < n; ++t)
          if ((a >> s & 1) && (b >> t & 1) && mu.at(s, t) == 0) {
            ok = false;
            break;
          }
      if (ok) cands.push_back(PartialCut{a, b});
    }
  std::sort(cands.begin(), cands.end(), [](const PartialCut& x, const PartialCut& y) {
    int sx = __builtin_popcount(x.a) + __builtin_popcount(x.b);
    int sy = __builtin_popcount(y.a) + __builtin_popcount(y.b);
    if (sx != sy) return sx > sy;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });

  auto laminar_with_all = [&](const PartialCut& c, const std::vector<int>& chosen) {
    for (int i : chosen)
      if (!cuts_laminar(c, cands[i])) return false;
    return true;
  };

  auto try_finish = [&](const std::vector<int>& pool)
      -> std::optional<LaminarDecomposition> {
    std::vector<PartialCut> cuts;
    for (int i : pool) cuts.push_back(cands[i]);
    auto weights = decomposition_weights(mu, cuts);
    if (!weights) return std::nullopt;
    LaminarDecomposition dec;
    for (size_t i = 0; i < cuts.size(); ++i)
      if ((*weights)[i] > 0) {
        dec.cuts.push_back(cuts[i]);
        dec.weights.push_back((*weights)[i]);
      }
    // The support must be pairwise laminar for this pool to finish.
    for (size_t i = 0; i < dec.cuts.size(); ++i)
      for (size_t j = i + 1; j < dec.cuts.size(); ++j)
        if (!cuts_laminar(dec.cuts[i], dec.cuts[j])) return std::nullopt;
    if (!validate_decomposition(dec, mu)) return std::nullopt;
    return dec;
  };

  std::optional<LaminarDecomposition> found;
  std::vector<int> chosen;
  std::function<bool(int)> dfs = [&](int idx) -> bool {
    std::vector<int> pool = chosen;
    for (int j = idx; j < (int)cands.size(); ++j)
      if (laminar_with_all(cands[j], chosen)) pool.push_back(j);
    if (auto dec = try_finish(pool)) {
      found = std::move(dec);
      return true;
    }
    {
      // Prune: the pool is the largest family any extension can use.
      std::vector<PartialCut> cuts;
      for (int i : pool) cuts.push_back(cands[i]);
      if (!decomposition_weights(mu, cuts)) return false;
    }
    if (idx == (int)cands.size()) return false;
    if (laminar_with_all(cands[idx], chosen)) {
      chosen.push_back(idx);
      if (dfs(idx + 1)) return true;
      chosen.pop_back();
    }
    return dfs(idx + 1);
  };

  bool zero = true;
  for (int s = 0; s < n && zero; ++s)
    for (int t = 0; t < n; ++t)
      if (mu.at(s, t) != 0) {
        zero = false;
        break;
      }
  if (zero) {
    LaminarDecomposition dec;
    out.status = RealizationStatus::Found;
    out.realization = realization_from_decomposition(dec, mu.elements);
    out.decomposition = dec;
    return out;
  }

  if (dfs(0) && found) {
    out.status = RealizationStatus::Found;
    out.decomposition = found;
    out.realization = realization_from_decomposition(*found, mu.elements);
    if (!validate_realization(*out.realization, mu))
      throw std::logic_error("tree realization failed validation");
    return out;
  }
  out.status = RealizationStatus::None;
  return out;
}

LaminarDecomposition cut_decomposition(const OrientedTreeRealization& real) {
  const int num_nodes = real.tree.num_nodes;
  const int n = (int)real.terminals.size();
  LaminarDecomposition dec;
  for (size_t e = 0; e < real.tree.edges.size(); ++e) {
    // Delete the edge; collect the tail-side component.
    std::vector<char> tail_side(num_nodes, 0);
    std::deque<int> q{real.tree.edges[e].tail};
    tail_side[real.tree.edges[e].tail] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (size_t f = 0; f < real.tree.edges.size(); ++f) {
        if (f == e) continue;
        int a = real.tree.edges[f].tail, b = real.tree.edges[f].head;
        if (a == x && !tail_side[b]) {
          tail_side[b] = 1;
          q.push_back(b);
        }
        if (b == x && !tail_side[a]) {
          tail_side[a] = 1;
          q.push_back(a);
        }
      }
    }
    PartialCut cut;
    for (int s = 0; s < n; ++s) {
      bool any_tail = false, any_head = false;
      for (int v : real.subtrees[s]) (tail_side[v] ? any_tail : any_head) = true;
      if (any_tail && !any_head) cut.a |= 1u << s;
      if (any_head && !any_tail) cut.b |= 1u << s;
    }
    if (cut.a == 0 || cut.b == 0 || real.tree.alpha[e] == 0) continue;
    dec.cuts.push_back(cut);
    dec.weights.push_back(real.tree.alpha[e]);
  }
  // Merge duplicates.
  LaminarDecomposition merged;
  std::map<std::pair<uint32_t, uint32_t>, Rational> acc;
  for (size_t i = 0; i < dec.cuts.size(); ++i)
    acc[{dec.cuts[i].a, dec.cuts[i].b}] += dec.weights[i];
  for (auto& [key, w] : acc) {
    merged.cuts.push_back(PartialCut{key.first, key.second});
    merged.weights.push_back(w);
  }
  return merged;
}

ProperTerminals proper_terminals(
    const DirectedDistance& mu,
    const std::optional<OrientedTreeRealization>& real) {
  ProperTerminals out;
  if (!real) {
    out.conservative = true;
    return out;
  }
  const auto& r = *real;
  for (int s = 0; s < (int)r.subtrees.size(); ++s) {
    const auto& nodes = r.subtrees[s];
    if (nodes.size() == 1) {
      out.terminals.push_back(s);
      continue;
    }
    std::vector<char> in_set(r.tree.num_nodes, 0);
    for (int v : nodes) in_set[v] = 1;
    // Induced edges; directed path <=> no node with 2 ins or 2 outs and
    // underlying shape is a path.
    std::vector<int> indeg(r.tree.num_nodes, 0), outdeg(r.tree.num_nodes, 0);
    int induced_edges = 0;
    for (const auto& e : r.tree.edges)
      if (in_set[e.tail] && in_set[e.head]) {
        ++induced_edges;
        ++outdeg[e.tail];
        ++indeg[e.head];
      }
    if (induced_edges != (int)nodes.size() - 1) continue;  // not a subtree?
    bool path = true;
    for (int v : nodes)
      if (indeg[v] > 1 || outdeg[v] > 1) path = false;
    if (path) out.terminals.push_back(s);
  }
  (void)mu;
  return out;
}

namespace {

std::optional<QuasiCompletePart> quasi_complete_part(const Digraph& h) {
  const int n = h.size();
  for (uint32_t t_mask = 0; t_mask < (1u << n); ++t_mask) {
    // (0) every edge incident to T
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y) {
        if (!h.adj[x][y]) continue;
        if (!((t_mask >> x & 1) || (t_mask >> y & 1))) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    // (1) T induces a complete digraph
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        if ((t_mask >> x & 1) && (t_mask >> y & 1) && !h.adj[x][y]) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    // (2) cross edges all enter T, or all leave T
    bool entering = false, leaving = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!h.adj[x][y]) continue;
        bool xt = t_mask >> x & 1, yt = t_mask >> y & 1;
        if (!xt && yt) entering = true;
        if (xt && !yt) leaving = true;
      }
    if (entering && leaving) continue;
    return QuasiCompletePart{t_mask, entering};
  }
  return std::nullopt;
}

Digraph collapse_twins(const Digraph& h) {
  const int n = h.size();
  std::vector<int> cls(n, -1);
  int next = 0;
  auto twins = [&](int x, int y) {
    if (h.adj[x][y] || h.adj[y][x]) return false;
    for (int z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if (h.adj[x][z] != h.adj[y][z]) return false;
      if (h.adj[z][x] != h.adj[z][y]) return false;
    }
    return true;
  };
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && twins(i, j)) cls[j] = next;
    ++next;
  }
  Digraph base;
  base.names.resize(next);
  base.adj.assign(next, std::vector<char>(next, 0));
  for (int i = 0; i < n; ++i) {
    if (base.names[cls[i]].empty()) base.names[cls[i]] = h.names[i];
    for (int j = 0; j < n; ++j)
      if (h.adj[i][j]) base.adj[cls[i]][cls[j]] = 1;
  }
  return base;
}

}  // namespace

CommodityRecognition recognize_commodity_graph(const Digraph& h) {
  CommodityRecognition out;
  out.quasi_complete = quasi_complete_part(h);
  Digraph base = collapse_twins(h);
  if (base.size() < h.size()) {
    auto qc = quasi_complete_part(base);
    if (qc) {
      out.multipartite_base = base;
      out.base_quasi_complete = qc;
    }
  } else if (out.quasi_complete) {
    out.base_quasi_complete = out.quasi_complete;
  }
  return out;
}

DirectedDistance commodity_to_distance(const Digraph& h) {
  DirectedDistance d = zero_distance(h.names);
  for (int x = 0; x < h.size(); ++x)
    for (int y = 0; y < h.size(); ++y)
      if (x != y && h.adj[x][y]) d.at(x, y) = 1;
  return d;
}

}  // namespace dirflow
