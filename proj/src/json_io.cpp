#include "dirflow/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace dirflow {

json rational_to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  if (r.get_num().fits_slong_p() && r.get_den().fits_slong_p())
    return json::array({r.get_num().get_si(), r.get_den().get_si()});
  return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational((long)j.get<long long>());
  if (j.is_string()) return Rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    auto part = [](const json& v) -> mpz_class {
      if (v.is_string()) return mpz_class(v.get<std::string>());
      return mpz_class((long)v.get<long long>());
    };
    Rational r(part(j[0]), part(j[1]));
    r.canonicalize();
    return r;
  }
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    Rational r(mpz_class(j["num"].is_string() ? mpz_class(j["num"].get<std::string>())
                                              : mpz_class((long)j["num"].get<long long>())),
               mpz_class(j["den"].is_string() ? mpz_class(j["den"].get<std::string>())
                                              : mpz_class((long)j["den"].get<long long>())));
    r.canonicalize();
    return r;
  }
  throw std::invalid_argument("cannot parse rational: " + j.dump());
}

json distance_to_json(const DirectedDistance& d) {
  json rows = json::array();
  for (int i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < d.size(); ++j2) row.push_back(rational_to_json(d.at(i, j2)));
    rows.push_back(row);
  }
  return json{{"elements", d.elements}, {"rows", rows}};
}

DirectedDistance distance_from_json(const json& j) {
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<Rational>> values;
  for (const auto& row : j.at("rows")) {
    std::vector<Rational> r;
    for (const auto& cell : row) r.push_back(rational_from_json(cell));
    values.push_back(std::move(r));
  }
  return make_distance(std::move(elements), std::move(values));
}

json network_to_json(const Network& net) {
  json edges = json::array();
  for (const auto& e : net.edges)
    edges.push_back(json::array({net.nodes[e.tail], net.nodes[e.head], e.cap}));
  json terminals = json::array();
  for (int t : net.terminals) terminals.push_back(net.nodes[t]);
  return json{{"nodes", net.nodes}, {"terminals", terminals}, {"edges", edges}};
}

Network network_from_json(const json& j) {
  std::vector<std::string> nodes = j.at("nodes").get<std::vector<std::string>>();
  auto index_of = [&](const std::string& id) {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == id) return (int)i;
    throw std::invalid_argument("unknown node in network json: " + id);
  };
  std::vector<int> terminals;
  for (const auto& t : j.at("terminals")) terminals.push_back(index_of(t));
  std::vector<Network::Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({index_of(e.at(0)), index_of(e.at(1)), e.at(2).get<long long>()});
  return make_network(std::move(nodes), std::move(terminals), std::move(edges));
}

json point_to_json(const LabeledPoint& p) {
  json c = json::object(), r = json::object();
  for (int i = 0; i < p.size(); ++i) {
    c[p.base[i]] = rational_to_json(p.column[i]);
    r[p.base[i]] = rational_to_json(p.row[i]);
  }
  return json{{"c", c}, {"r", r}};
}

LabeledPoint point_from_json(const json& j, const std::vector<std::string>& base) {
  std::vector<Rational> column, row;
  for (const auto& id : base) {
    column.push_back(rational_from_json(j.at("c").at(id)));
    row.push_back(rational_from_json(j.at("r").at(id)));
  }
  return make_point(base, std::move(column), std::move(row));
}

json realization_to_json(const OrientedTreeRealization& real) {
  json edges = json::array();
  for (size_t e = 0; e < real.tree.edges.size(); ++e)
    edges.push_back(json::array({real.tree.edges[e].tail, real.tree.edges[e].head,
                                 rational_to_json(real.tree.alpha[e])}));
  json subtrees = json::object();
  for (size_t s = 0; s < real.subtrees.size(); ++s)
    subtrees[real.terminals[s]] = real.subtrees[s];
  return json{{"num_nodes", real.tree.num_nodes},
              {"edges", edges},
              {"terminals", real.terminals},
              {"subtrees", subtrees}};
}

OrientedTreeRealization realization_from_json(const json& j) {
  OrientedTreeRealization real;
  real.tree.num_nodes = j.at("num_nodes").get<int>();
  for (const auto& e : j.at("edges")) {
    real.tree.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    real.tree.alpha.push_back(rational_from_json(e.at(2)));
  }
  real.terminals = j.at("terminals").get<std::vector<std::string>>();
  for (const auto& t : real.terminals)
    real.subtrees.push_back(j.at("subtrees").at(t).get<std::vector<int>>());
  return real;
}

json decomposition_to_json(const LaminarDecomposition& dec,
                           const std::vector<std::string>& ground) {
  json cuts = json::array();
  for (size_t i = 0; i < dec.cuts.size(); ++i) {
    json a = json::array(), b = json::array();
    for (size_t s = 0; s < ground.size(); ++s) {
      if (dec.cuts[i].a >> s & 1) a.push_back(ground[s]);
      if (dec.cuts[i].b >> s & 1) b.push_back(ground[s]);
    }
    cuts.push_back(json{{"a", a}, {"b", b}, {"weight", rational_to_json(dec.weights[i])}});
  }
  return json{{"ground", ground}, {"cuts", cuts}};
}

LaminarDecomposition decomposition_from_json(const json& j,
                                             const std::vector<std::string>& ground) {
  auto index_of = [&](const std::string& id) {
    for (size_t i = 0; i < ground.size(); ++i)
      if (ground[i] == id) return (int)i;
    throw std::invalid_argument("unknown terminal in cut: " + id);
  };
  LaminarDecomposition dec;
  for (const auto& c : j.at("cuts")) {
    PartialCut cut;
    for (const auto& id : c.at("a")) cut.a |= 1u << index_of(id);
    for (const auto& id : c.at("b")) cut.b |= 1u << index_of(id);
    dec.cuts.push_back(cut);
    dec.weights.push_back(c.contains("weight") ? rational_from_json(c.at("weight"))
                                               : Rational(1));
  }
  return dec;
}

json multiflow_to_json(const Multiflow& f, const Network& net) {
  json paths = json::array();
  for (size_t p = 0; p < f.paths.size(); ++p) {
    json nodes = json::array();
    for (int v : f.paths[p]) nodes.push_back(net.nodes[v]);
    paths.push_back(json{{"nodes", nodes}, {"value", rational_to_json(f.values[p])}});
  }
  return paths;
}

Multiflow multiflow_from_json(const json& j, const Network& net) {
  Multiflow f;
  for (const auto& p : j) {
    std::vector<int> path;
    for (const auto& id : p.at("nodes")) path.push_back(net.node_index(id));
    f.paths.push_back(std::move(path));
    f.values.push_back(rational_from_json(p.at("value")));
  }
  return f;
}

json report_to_json(const SolveReport& rep, const Network& net) {
  json out;
  out["value"] = {{"num", rep.value.get_num().get_str()},
                  {"den", rep.value.get_den().get_str()}};
  switch (rep.method) {
    case SolveMethod::Lp: out["method"] = "lp"; break;
    case SolveMethod::Tree: out["method"] = "tree"; break;
    case SolveMethod::Mcc: out["method"] = "mcc"; break;
    case SolveMethod::Locking: out["method"] = "locking"; break;
  }
  out["optimum_certified"] = rep.optimum_certified;
  if (rep.multiflow) out["multiflow"] = multiflow_to_json(*rep.multiflow, net);
  if (rep.dual_metric) out["dual_metric"] = distance_to_json(*rep.dual_metric);
  if (!rep.tree_cuts.empty()) {
    json cuts = json::array();
    for (const auto& c : rep.tree_cuts) {
      json x = json::array();
      for (int v : c.x) x.push_back(net.nodes[v]);
      cuts.push_back(json{{"alpha", rational_to_json(c.alpha)},
                          {"cut_value", c.cut_value},
                          {"x", x}});
    }
    out["certificates"] = cuts;
  }
  if (rep.location_optimum)
    out["location_optimum"] = rational_to_json(*rep.location_optimum);
  return out;
}

std::string network_to_dot(const Network& net) {
  std::ostringstream os;
  os << "digraph network {\n";
  for (int v = 0; v < net.size(); ++v) {
    os << "  \"" << net.nodes[v] << "\"";
    if (net.is_terminal(v)) os << " [shape=box, style=filled, fillcolor=lightgray]";
    os << ";\n";
  }
  for (const auto& e : net.edges)
    os << "  \"" << net.nodes[e.tail] << "\" -> \"" << net.nodes[e.head]
       << "\" [label=\"" << e.cap << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string tree_to_dot(const OrientedTreeRealization& real) {
  static const char* palette[] = {"lightblue", "lightgreen", "lightpink",
                                  "khaki",     "lightsalmon", "plum",
                                  "lightcyan", "wheat"};
  std::ostringstream os;
  os << "digraph realization {\n";
  for (int v = 0; v < real.tree.num_nodes; ++v) {
    std::string owners;
    int first_owner = -1;
    for (size_t s = 0; s < real.subtrees.size(); ++s)
      for (int u : real.subtrees[s])
        if (u == v) {
          owners += (owners.empty() ? "" : ",") + real.terminals[s];
          if (first_owner < 0) first_owner = (int)s;
        }
    os << "  v" << v << " [label=\"v" << v;
    if (!owners.empty()) os << "\\n{" << owners << "}";
    os << "\"";
    if (first_owner >= 0)
      os << ", style=filled, fillcolor=" << palette[first_owner % 8];
    os << "];\n";
  }
  for (size_t e = 0; e < real.tree.edges.size(); ++e)
    os << "  v" << real.tree.edges[e].tail << " -> v" << real.tree.edges[e].head
       << " [label=\"" << real.tree.alpha[e].get_str() << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string tightness_to_dot(const TightnessGraph& k,
                             const std::vector<std::string>& base) {
  std::ostringstream os;
  os << "graph tightness {\n  rankdir=LR;\n";
  os << "  { rank=same;";
  for (int s = 0; s < k.n; ++s) os << " \"" << base[s] << "^c\";";
  os << " }\n  { rank=same;";
  for (int t = 0; t < k.n; ++t) os << " \"" << base[t] << "^r\";";
  os << " }\n";
  for (int s = 0; s < k.n; ++s)
    for (int t = 0; t < k.n; ++t)
      if (k.edge[s][t])
        os << "  \"" << base[s] << "^c\" -- \"" << base[t] << "^r\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dirflow
