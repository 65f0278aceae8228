#include "dirflow/geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace dirflow {

LabeledPoint make_point(std::vector<std::string> base, std::vector<Rational> column,
                        std::vector<Rational> row) {
  if (column.size() != base.size() || row.size() != base.size())
    throw std::invalid_argument("point index sets must match the ground set");
  return LabeledPoint{std::move(base), std::move(column), std::move(row)};
}

std::vector<int> TightnessGraph::components() const {
  std::vector<int> comp(2 * n, -1);
  int next = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::deque<int> q{start};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (v < n) {
        for (int t = 0; t < n; ++t)
          if (edge[v][t] && comp[n + t] < 0) {
            comp[n + t] = next;
            q.push_back(n + t);
          }
      } else {
        for (int s = 0; s < n; ++s)
          if (edge[s][v - n] && comp[s] < 0) {
            comp[s] = next;
            q.push_back(s);
          }
      }
    }
    ++next;
  }
  return comp;
}

int TightnessGraph::num_components() const {
  auto c = components();
  return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

bool TightnessGraph::isolated_column(int s) const {
  for (int t = 0; t < n; ++t)
    if (edge[s][t]) return false;
  return true;
}

bool TightnessGraph::isolated_row(int t) const {
  for (int s = 0; s < n; ++s)
    if (edge[s][t]) return false;
  return true;
}

uint32_t TightnessGraph::row_neighbors(uint32_t column_mask) const {
  uint32_t out = 0;
  for (int s = 0; s < n; ++s)
    if (column_mask >> s & 1)
      for (int t = 0; t < n; ++t)
        if (edge[s][t]) out |= 1u << t;
  return out;
}

uint32_t TightnessGraph::column_neighbors(uint32_t row_mask) const {
  uint32_t out = 0;
  for (int t = 0; t < n; ++t)
    if (row_mask >> t & 1)
      for (int s = 0; s < n; ++s)
        if (edge[s][t]) out |= 1u << s;
  return out;
}

TightnessGraph tightness_graph(const DirectedDistance& mu, const LabeledPoint& p) {
  if (p.base != mu.elements)
    throw std::invalid_argument("point indexed by a different ground set");
  const int n = mu.size();
  TightnessGraph g;
  g.n = n;
  g.edge.assign(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (p.column[s] + p.row[t] == mu.at(s, t)) g.edge[s][t] = 1;
  return g;
}

PointClassification classify_point(const DirectedDistance& mu,
                                   const LabeledPoint& p) {
  const int n = mu.size();
  PointClassification out;

  bool in_p = true;
  for (int s = 0; s < n && in_p; ++s)
    for (int t = 0; t < n; ++t)
      if (p.column[s] + p.row[t] < mu.at(s, t)) {
        in_p = false;
        break;
      }
  out.in_P = in_p;

  bool nonneg = true;
  for (int i = 0; i < n; ++i)
    if (p.column[i] < 0 || p.row[i] < 0) {
      nonneg = false;
      break;
    }
  out.in_P_plus = in_p && nonneg;
  if (!in_p) return out;

  TightnessGraph k = tightness_graph(mu, p);
  auto comp = k.components();
  int num_comp = 1 + *std::max_element(comp.begin(), comp.end());

  bool isolated = false, isolated_positive = false;
  for (int s = 0; s < n; ++s)
    if (k.isolated_column(s)) {
      isolated = true;
      if (p.column[s] > 0) isolated_positive = true;
    }
  for (int t = 0; t < n; ++t)
    if (k.isolated_row(t)) {
      isolated = true;
      if (p.row[t] > 0) isolated_positive = true;
    }

  out.in_Q = !isolated;
  out.in_T = out.in_P_plus && !isolated_positive;

  for (int s = 0; s < n; ++s)
    if (p.column[s] + p.row[s] == 0) out.terminal_regions.push_back(s);

  if (out.in_T) {
    // Components with every node positive.
    std::vector<char> has_zero(num_comp, 0);
    for (int s = 0; s < n; ++s)
      if (p.column[s] == 0) has_zero[comp[s]] = 1;
    for (int t = 0; t < n; ++t)
      if (p.row[t] == 0) has_zero[comp[n + t]] = 1;
    int dim = 0;
    for (int c = 0; c < num_comp; ++c)
      if (!has_zero[c]) ++dim;
    out.face_dim_T = dim;
  }

  if (out.in_Q) {
    // Dimension inside the tropical polytope: one component carries the
    // all-ones lineality direction.
    out.face_dim_Q = num_comp - 1;

    uint32_t x_mask = 0;
    for (int s : out.terminal_regions) x_mask |= 1u << s;
    bool fat = false, degenerate = false, collapse_in_face = false;
    if (x_mask != 0) {
      bool edge_out_to_x = false;   // edge from (S\X)^c into X^r
      bool edge_x_to_out = false;   // edge from X^c into (S\X)^r
      std::vector<char> covered_r(n, 0), covered_c(n, 0);  // by outside nodes
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          if (!k.edge[s][t]) continue;
          bool sx = x_mask >> s & 1, tx = x_mask >> t & 1;
          if (!sx && tx) edge_out_to_x = true;
          if (sx && !tx) edge_x_to_out = true;
          if (!sx && !tx) {
            covered_r[t] = 1;
            covered_c[s] = 1;
          }
        }
      bool all_outside_r_covered = true, all_outside_c_covered = true;
      for (int t = 0; t < n; ++t)
        if (!(x_mask >> t & 1) && !covered_r[t]) all_outside_r_covered = false;
      for (int s = 0; s < n; ++s)
        if (!(x_mask >> s & 1) && !covered_c[s]) all_outside_c_covered = false;

      fat = !edge_out_to_x || !edge_x_to_out;
      degenerate = (!edge_out_to_x && all_outside_r_covered) ||
                   (!edge_x_to_out && all_outside_c_covered);
      collapse_in_face = !edge_out_to_x && !edge_x_to_out;
      if (fat) out.fat_relative_to = x_mask;
      if (degenerate) out.degenerate_relative_to = x_mask;
    }
    out.in_Q_slim = !(fat && !degenerate);
    if (out.in_Q_slim) {
      int dim = num_comp - 1;
      if (degenerate && collapse_in_face) dim -= 1;
      out.slim_local_dim = dim;
    }
  }
  return out;
}

LabeledPoint column_row_point(const DirectedDistance& mu, int s) {
  const int n = mu.size();
  if (s < 0 || s >= n) throw std::invalid_argument("unknown terminal");
  std::vector<Rational> col(n), row(n);
  for (int t = 0; t < n; ++t) {
    col[t] = mu.at(t, s);
    row[t] = mu.at(s, t);
  }
  return LabeledPoint{mu.elements, std::move(col), std::move(row)};
}

LiftResult lift_column(const DirectedDistance& mu, const std::vector<Rational>& q) {
  const int n = mu.size();
  if ((int)q.size() != n) throw std::invalid_argument("column size mismatch");
  std::vector<Rational> row(n);
  for (int t = 0; t < n; ++t) {
    Rational best = mu.at(0, t) - q[0];
    for (int s = 1; s < n; ++s) best = std::max(best, Rational(mu.at(s, t) - q[s]));
    row[t] = best;
  }
  LiftResult res{LabeledPoint{mu.elements, q, std::move(row)}, false};
  res.in_q = classify_point(mu, res.point).in_Q;
  return res;
}

Rational directed_linf_plus(const std::vector<Rational>& p,
                            const std::vector<Rational>& q) {
  Rational best = 0;
  for (size_t i = 0; i < p.size(); ++i) best = std::max(best, Rational(q[i] - p[i]));
  return best;
}

Rational directed_linf(const LabeledPoint& p, const LabeledPoint& q) {
  if (p.base != q.base) throw std::invalid_argument("point index mismatch");
  return std::max(directed_linf_plus(p.column, q.column),
                  directed_linf_plus(q.row, p.row));
}

bool is_fat_by_perturbation(const DirectedDistance& mu, const LabeledPoint& p) {
  const int n = mu.size();
  PointClassification cls = classify_point(mu, p);
  if (!cls.in_Q || !cls.in_P_plus) return false;
  uint32_t x_mask = 0;
  for (int s : cls.terminal_regions) x_mask |= 1u << s;
  if (x_mask == 0) return false;

  // One side stays inside the region after subtracting eps off the non-X
  // coordinates. Evaluated with exact first-order infinitesimals.
  auto side_works = [&](bool column_side) {
    std::vector<EpsRational> part(n), other(n);
    for (int i = 0; i < n; ++i) {
      const Rational& v = column_side ? p.column[i] : p.row[i];
      part[i] = EpsRational(v, (x_mask >> i & 1) ? Rational(0) : Rational(-1));
    }
    // Lift back: other side by max residual.
    for (int t = 0; t < n; ++t) {
      EpsRational best = column_side ? EpsRational(mu.at(0, t)) - part[0]
                                     : EpsRational(mu.at(t, 0)) - part[0];
      for (int s = 1; s < n; ++s) {
        EpsRational cand = column_side ? EpsRational(mu.at(s, t)) - part[s]
                                       : EpsRational(mu.at(t, s)) - part[s];
        best = eps_max(best, cand);
      }
      other[t] = best;
    }
    // Nonnegativity of both parts.
    for (int i = 0; i < n; ++i)
      if (part[i] < EpsRational(Rational(0)) || other[i] < EpsRational(Rational(0)))
        return false;
    // Every node of the perturbed side must stay covered, and the diagonal
    // edge pattern must still be exactly X.
    for (int s = 0; s < n; ++s) {
      bool covered = false;
      for (int t = 0; t < n; ++t) {
        Rational m = column_side ? mu.at(s, t) : mu.at(t, s);
        if (part[s] + other[t] == EpsRational(m)) covered = true;
      }
      if (!covered) return false;
    }
    for (int s = 0; s < n; ++s) {
      bool diag = part[s] + other[s] == EpsRational(Rational(0));
      if (diag != bool(x_mask >> s & 1)) return false;
    }
    return true;
  };
  return side_works(true) || side_works(false);
}

namespace {

uint64_t state_key(const DirectedDistance& mu, const LabeledPoint& p) {
  const int n = mu.size();
  uint64_t key = 0;
  int bit = 0;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      key |= uint64_t(p.column[s] + p.row[t] == mu.at(s, t)) << bit++;
  for (int s = 0; s < n; ++s) key |= uint64_t(p.column[s] == 0) << bit++;
  for (int t = 0; t < n; ++t) key |= uint64_t(p.row[t] == 0) << bit++;
  return key;
}

// One-sided perturbation: subtract eps on the chosen columns (rows), add eps
// on their tightness-graph neighborhood. Returns candidates at half-step and
// full-step of the admissible interval.
std::vector<LabeledPoint> perturb(const DirectedDistance& mu, const LabeledPoint& p,
                                  uint32_t mask, bool column_side,
                                  bool keep_nonneg) {
  const int n = mu.size();
  TightnessGraph k = tightness_graph(mu, p);
  uint32_t nbr = column_side ? k.row_neighbors(mask) : k.column_neighbors(mask);

  // Admissible interval end: first new tight pair or first zero coordinate.
  std::optional<Rational> limit;
  auto tighten = [&](const Rational& v) {
    if (v <= 0) return;
    if (!limit || v < *limit) limit = v;
  };
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      bool s_in = column_side ? (mask >> s & 1) : (nbr >> s & 1);
      bool t_in = column_side ? (nbr >> t & 1) : (mask >> t & 1);
      // Pairs whose slack shrinks: lowered side in the set, raised side out.
      bool shrinking = column_side ? (s_in && !t_in) : (t_in && !s_in);
      if (!shrinking) continue;
      tighten(p.column[s] + p.row[t] - mu.at(s, t));
    }
  if (keep_nonneg) {
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) tighten(column_side ? p.column[i] : p.row[i]);
  }

  std::vector<Rational> steps;
  if (limit) {
    steps.push_back(*limit / 2);
    steps.push_back(*limit);
  } else {
    steps.push_back(Rational(1));
  }

  std::vector<LabeledPoint> out;
  for (const Rational& eps : steps) {
    if (eps <= 0) continue;
    LabeledPoint q = p;
    for (int i = 0; i < n; ++i) {
      if (column_side) {
        if (mask >> i & 1) q.column[i] -= eps;
        if (nbr >> i & 1) q.row[i] += eps;
      } else {
        if (mask >> i & 1) q.row[i] -= eps;
        if (nbr >> i & 1) q.column[i] += eps;
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

WitnessResult dim_witness_search(const DirectedDistance& mu, WitnessTarget target,
                                 int max_states) {
  const int n = mu.size();
  WitnessResult res;
  if (n == 0) return res;
  if (n > 7)
    throw std::invalid_argument("witness search supports at most 7 terminals");
  const bool want_t = target == WitnessTarget::TightSpan;

  auto witness_dim = [&](const PointClassification& c) -> std::optional<int> {
    if (want_t) {
      if (c.in_T && c.face_dim_T) return *c.face_dim_T;
    } else {
      if (c.in_Q_slim && c.slim_local_dim) return *c.slim_local_dim;
    }
    return std::nullopt;
  };

  std::deque<LabeledPoint> queue;
  std::set<uint64_t> seen;
  auto push = [&](LabeledPoint p) {
    if (!want_t) {
      // Canonical lineality offset: smallest column coordinate pinned to 0.
      Rational m = p.column[0];
      for (const auto& v : p.column) m = std::min(m, v);
      for (int i = 0; i < n; ++i) {
        p.column[i] -= m;
        p.row[i] += m;
      }
    }
    PointClassification c = classify_point(mu, p);
    if (!c.in_Q && !c.in_T) return;
    if (want_t && !c.in_P_plus) return;
    uint64_t key = state_key(mu, p);
    if (!seen.insert(key).second) return;
    queue.push_back(std::move(p));
  };

  // Seeds: column-row points and lifted column barycenters.
  for (int s = 0; s < n; ++s) push(column_row_point(mu, s));
  for (int s = 0; s < n; ++s)
    for (int t = s; t < n; ++t) {
      std::vector<Rational> q(n);
      for (int i = 0; i < n; ++i)
        q[i] = (mu.at(i, s) + mu.at(i, t)) / 2;
      LiftResult lift = lift_column(mu, q);
      if (lift.in_q) push(lift.point);
    }
  {
    std::vector<Rational> q(n);
    for (int i = 0; i < n; ++i) {
      Rational sum = 0;
      for (int s = 0; s < n; ++s) sum += mu.at(i, s);
      q[i] = sum / n;
    }
    LiftResult lift = lift_column(mu, q);
    if (lift.in_q) push(lift.point);
  }

  int visited = 0;
  while (!queue.empty()) {
    if (visited >= max_states) {
      res.status = WitnessStatus::BudgetExhausted;
      res.states_visited = visited;
      return res;
    }
    LabeledPoint p = queue.front();
    queue.pop_front();
    ++visited;

    PointClassification c = classify_point(mu, p);
    if (auto d = witness_dim(c); d && *d >= 2) {
      res.status = WitnessStatus::Found;
      res.point = p;
      res.dim = *d;
      res.states_visited = visited;
      return res;
    }

    for (int side = 0; side < 2; ++side)
      for (uint32_t mask = 1; mask < (1u << n); ++mask)
        for (auto& q : perturb(mu, p, mask, side == 0, want_t)) push(q);
  }

  res.status = WitnessStatus::NoneFound;
  res.states_visited = visited;
  return res;
}

}  // namespace dirflow
