#include "dirflow/distances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dirflow {

int DirectedDistance::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == id) return i;
  throw std::invalid_argument("unknown element: " + id);
}

DirectedDistance make_distance(std::vector<std::string> elements,
                               std::vector<std::vector<Rational>> values) {
  const int n = (int)elements.size();
  if ((int)values.size() != n)
    throw std::invalid_argument("distance matrix shape mismatch");
  for (int i = 0; i < n; ++i) {
    if ((int)values[i].size() != n)
      throw std::invalid_argument("distance matrix shape mismatch");
    if (values[i][i] != 0)
      throw std::invalid_argument("distance diagonal must be zero");
    for (int j = 0; j < n; ++j)
      if (values[i][j] < 0)
        throw std::invalid_argument("distance entries must be nonnegative");
  }
  return DirectedDistance{std::move(elements), std::move(values)};
}

DirectedDistance zero_distance(std::vector<std::string> elements) {
  int n = (int)elements.size();
  return DirectedDistance{
      std::move(elements),
      std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))};
}

DirectedDistance all_one_distance(std::vector<std::string> elements) {
  DirectedDistance d = zero_distance(std::move(elements));
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      if (i != j) d.at(i, j) = 1;
  return d;
}

bool PartialCut::valid(int ground_size) const {
  uint32_t all = ground_size >= 32 ? ~0u : ((1u << ground_size) - 1);
  return (a & b) == 0 && (a | b) == ((a | b) & all);
}

bool PartialCut::full(int ground_size) const {
  uint32_t all = (1u << ground_size) - 1;
  return valid(ground_size) && (a | b) == all;
}

bool cuts_laminar(const PartialCut& x, const PartialCut& y) {
  auto subset = [](uint32_t p, uint32_t q) { return (p & ~q) == 0; };
  return (subset(x.a, y.a) && subset(y.b, x.b)) ||
         (subset(x.a, y.b) && subset(y.a, x.b)) ||
         (subset(y.a, x.a) && subset(x.b, y.b)) ||
         (subset(y.b, x.a) && subset(x.b, y.a));
}

bool validate_decomposition(const LaminarDecomposition& dec,
                            const DirectedDistance& mu) {
  const int n = mu.size();
  if (dec.cuts.size() != dec.weights.size()) return false;
  for (size_t i = 0; i < dec.cuts.size(); ++i) {
    if (!dec.cuts[i].valid(n)) return false;
    if (dec.weights[i] <= 0) return false;
    for (size_t j = i + 1; j < dec.cuts.size(); ++j)
      if (!cuts_laminar(dec.cuts[i], dec.cuts[j])) return false;
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Rational sum = 0;
      for (size_t i = 0; i < dec.cuts.size(); ++i)
        if ((dec.cuts[i].a >> s & 1) && (dec.cuts[i].b >> t & 1))
          sum += dec.weights[i];
      if (sum != mu.at(s, t)) return false;
    }
  return true;
}

bool is_metric(const DirectedDistance& d) {
  const int n = d.size();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        if (d.at(s, t) + d.at(t, u) < d.at(s, u)) return false;
  return true;
}

DirectedDistance cut_distance(const PartialCut& cut,
                              const std::vector<std::string>& ground) {
  const int n = (int)ground.size();
  if (!cut.valid(n)) throw std::invalid_argument("overlapping cut sides");
  DirectedDistance d = zero_distance(ground);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if ((cut.a >> s & 1) && (cut.b >> t & 1)) d.at(s, t) = 1;
  return d;
}

ExtremalClasses extremal_classes(const DirectedDistance& d) {
  const int n = d.size();
  ExtremalClasses out;
  out.node_class.assign(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (out.node_class[i] >= 0) continue;
    out.node_class[i] = next;
    for (int j = i + 1; j < n; ++j)
      if (d.at(i, j) == 0 && d.at(j, i) == 0) out.node_class[j] = next;
    ++next;
  }
  out.num_node_classes = next;

  // Representative node per class.
  std::vector<int> rep(next, -1);
  for (int i = n - 1; i >= 0; --i) rep[out.node_class[i]] = i;

  auto class_size = [&](int c) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += out.node_class[i] == c;
    return k;
  };

  for (int p = 0; p < next; ++p)
    for (int q = 0; q < next; ++q) {
      if (p == q && class_size(p) < 2) continue;
      // Representative edge (x, y) of class [xy].
      int x = rep[p], y = rep[q];
      if (p == q) {
        y = -1;
        for (int j = 0; j < n; ++j)
          if (j != x && out.node_class[j] == q) {
            y = j;
            break;
          }
      }
      bool is_extremal = true;
      for (int s = 0; s < n && is_extremal; ++s)
        for (int t = 0; t < n; ++t) {
          if (s == t) continue;
          if (out.node_class[s] == p && out.node_class[t] == q) continue;
          if (d.at(s, t) == d.at(s, x) + d.at(x, y) + d.at(y, t)) {
            is_extremal = false;
            break;
          }
        }
      if (is_extremal) out.extremal.emplace_back(p, q);
    }
  return out;
}

MinimalityStatus minimality_status(const DirectedDistance& d,
                                   const DirectedDistance& mu) {
  const int n = d.size();
  if (mu.size() != n || mu.elements != d.elements)
    throw std::invalid_argument("ground set mismatch");
  if (!is_metric(d)) throw std::invalid_argument("d is not a metric");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.at(i, j) < mu.at(i, j))
        throw std::invalid_argument("d is below the weight");

  std::vector<std::vector<bool>> h(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && d.at(s, t) == mu.at(s, t)) h[s][t] = true;

  // reach[u][v]: v reachable from u in H.
  std::vector<std::vector<bool>> reach = h;
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;

  ExtremalClasses ec = extremal_classes(d);
  MinimalityStatus st{true, true};
  for (auto [p, q] : ec.extremal) {
    bool meets_edge = false, meets_cycle = false;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (s == t || ec.node_class[s] != p || ec.node_class[t] != q) continue;
        if (!h[s][t]) continue;
        meets_edge = true;
        if (reach[t][s]) meets_cycle = true;
      }
    st.minimal = st.minimal && meets_edge;
    st.c_minimal = st.c_minimal && meets_cycle;
  }
  return st;
}

ExtensionStatus extension_status(const DirectedDistance& d,
                                 const DirectedDistance& mu) {
  const int n = d.size();
  DirectedDistance mu_bar = zero_distance(d.elements);
  for (int i = 0; i < mu.size(); ++i) {
    int vi = d.index_of(mu.elements[i]);
    for (int j = 0; j < mu.size(); ++j) {
      int vj = d.index_of(mu.elements[j]);
      if (d.at(vi, vj) != mu.at(i, j))
        throw std::invalid_argument("d does not restrict to the weight on S");
      mu_bar.at(vi, vj) = mu.at(i, j);
    }
  }
  (void)n;
  MinimalityStatus st = minimality_status(d, mu_bar);
  return ExtensionStatus{st.minimal, st.c_minimal};
}

DirectedDistance gamma_metric(int n) {
  if (n < 1) throw std::invalid_argument("gamma_metric needs n >= 1");
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> pts;  // (i, j) with 0 <= j <= i <= n
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      pts.emplace_back(i, j);
      ids.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
    }
  DirectedDistance d = zero_distance(ids);
  for (size_t p = 0; p < pts.size(); ++p)
    for (size_t q = 0; q < pts.size(); ++q) {
      Rational dx(pts[q].first - pts[p].first, n);
      Rational dy(pts[q].second - pts[p].second, n);
      dx.canonicalize();
      dy.canonicalize();
      Rational m = std::max(std::max(dx, dy), Rational(0));
      d.at((int)p, (int)q) = m;
    }
  return d;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rational lead = m[rank][c];
    for (int j = c; j < cols; ++j) m[rank][j] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

ExtremalityStatus extremality_status(const DirectedDistance& d) {
  const int n = d.size();
  bool all_zero = true;
  for (int i = 0; i < n && all_zero; ++i)
    for (int j = 0; j < n; ++j)
      if (d.at(i, j) != 0) {
        all_zero = false;
        break;
      }
  if (all_zero) throw std::invalid_argument("zero metric rejected");
  if (!is_metric(d)) throw std::invalid_argument("not a metric");

  // Variable per ordered pair (i, j), i != j.
  std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
  int nv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) var[i][j] = nv++;

  std::vector<std::vector<Rational>> tight_triangles;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) {
        if (s == t || t == u || s == u) continue;
        if (d.at(s, t) + d.at(t, u) != d.at(s, u)) continue;
        std::vector<Rational> row(nv, Rational(0));
        row[var[s][t]] += 1;
        row[var[t][u]] += 1;
        row[var[s][u]] -= 1;
        tight_triangles.push_back(std::move(row));
      }

  // Extreme: tight triangles plus pinned zero entries; nullity must be 1.
  std::vector<std::vector<Rational>> sys = tight_triangles;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && d.at(i, j) == 0) {
        std::vector<Rational> row(nv, Rational(0));
        row[var[i][j]] = 1;
        sys.push_back(std::move(row));
      }
  int nullity = nv - matrix_rank(sys);

  // Cyclic variant: two-cycle sums pinned where tight; the potential space
  // (dimension n-1) always solves the system, so extremality means
  // nullity == 1 + (n - 1).
  std::vector<std::vector<Rational>> sys_c = tight_triangles;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.at(i, j) + d.at(j, i) == 0) {
        std::vector<Rational> row(nv, Rational(0));
        row[var[i][j]] += 1;
        row[var[j][i]] += 1;
        sys_c.push_back(std::move(row));
      }
  int nullity_c = nv - matrix_rank(sys_c);

  return ExtremalityStatus{nullity == 1, nullity_c == n};
}

}  // namespace dirflow
