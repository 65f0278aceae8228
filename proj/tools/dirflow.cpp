#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dirflow/geometry.hpp"
#include "dirflow/harness.hpp"
#include "dirflow/json_io.hpp"

namespace {

using namespace dirflow;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

int run_classify(const std::string& mu_path, const std::string& json_out,
                 const std::string& dot_out, int budget) {
  DirectedDistance mu = distance_from_json(read_json(mu_path));
  json out;
  out["is_metric"] = is_metric(mu);

  IntervalResult interval = interval_representation(mu);
  if (interval.rep) {
    json rep;
    for (int s = 0; s < mu.size(); ++s) {
      rep[mu.elements[s]] = {rational_to_json(interval.rep->a[s]),
                             rational_to_json(interval.rep->b[s])};
    }
    out["interval_representation"] = rep;
  } else {
    out["interval_representation"] = nullptr;
    out["interval_certificate"] = interval.negative_cycle;
  }

  RealizationResult real = oriented_tree_realization(mu, budget);
  switch (real.status) {
    case RealizationStatus::Found:
      out["oriented_tree_realization"] = realization_to_json(*real.realization);
      out["laminar_decomposition"] =
          decomposition_to_json(*real.decomposition, mu.elements);
      break;
    case RealizationStatus::None:
      out["oriented_tree_realization"] = nullptr;
      break;
    case RealizationStatus::BudgetExceeded:
      out["oriented_tree_realization"] = "undecided-by-budget";
      break;
  }

  if (mu.size() <= 7) {
    for (auto [target, name] :
         {std::pair{WitnessTarget::TightSpan, "tight_span_witness"},
          std::pair{WitnessTarget::SlimTropical, "slim_tropical_witness"}}) {
      WitnessResult w = dim_witness_search(mu, target);
      json jw;
      switch (w.status) {
        case WitnessStatus::Found:
          jw["point"] = point_to_json(*w.point);
          jw["dim"] = w.dim;
          break;
        case WitnessStatus::NoneFound:
          jw["result"] = "none-found";
          break;
        case WitnessStatus::BudgetExhausted:
          jw["result"] = "budget-exhausted";
          break;
      }
      out[name] = jw;
    }
  }

  if (!dot_out.empty()) {
    if (real.realization) {
      write_text(tree_to_dot(*real.realization), dot_out);
    } else if (mu.size() <= 7) {
      // No tree to draw; emit the tightness graph of a witness instead.
      WitnessResult w = dim_witness_search(mu, WitnessTarget::SlimTropical);
      if (w.point)
        write_text(tightness_to_dot(tightness_graph(mu, *w.point), mu.elements),
                   dot_out);
    }
  }
  write_output(out, json_out);
  return 0;
}

int run_solve(const std::string& mu_path, const std::string& net_path,
              const std::string& method, const std::string& json_out,
              const std::string& dot_out, int budget) {
  DirectedDistance mu = distance_from_json(read_json(mu_path));
  Network net = network_from_json(read_json(net_path));

  std::optional<SolveReport> rep;
  std::string chosen = method;
  if (method == "auto") {
    IntervalResult interval = interval_representation(mu);
    if (interval.rep) {
      rep = solve_interval_mcc(*interval.rep, mu, net);
      chosen = "mcc";
    } else {
      RealizationResult real = oriented_tree_realization(mu, budget);
      if (real.status == RealizationStatus::Found) {
        try {
          rep = solve_tree_integral(*real.realization, net);
          chosen = "tree";
        } catch (const HypothesisViolation&) {
          rep.reset();
        }
      }
      if (!rep) {
        rep = solve_path_lp(mu, net, budget > 10 ? budget : 10);
        chosen = "lp";
      }
    }
  } else if (method == "mcc") {
    IntervalResult interval = interval_representation(mu);
    if (!interval.rep) {
      std::cerr << "hypothesis violated: weight has no interval representation\n";
      return 3;
    }
    rep = solve_interval_mcc(*interval.rep, mu, net);
  } else if (method == "tree") {
    RealizationResult real = oriented_tree_realization(mu, budget);
    if (real.status != RealizationStatus::Found) {
      std::cerr << "hypothesis violated: weight has no oriented-tree realization\n";
      return 3;
    }
    rep = solve_tree_integral(*real.realization, net);
  } else if (method == "lp") {
    rep = solve_path_lp(mu, net, budget > 10 ? budget : 10);
  } else {
    std::cerr << "unknown method " << method << "\n";
    return 2;
  }

  json out = report_to_json(*rep, net);
  out["method"] = chosen;
  if (!dot_out.empty()) write_text(network_to_dot(net), dot_out);
  write_output(out, json_out);
  return 0;
}

int run_lock(const std::string& family_path, const std::string& net_path,
             const std::string& json_out) {
  Network net = network_from_json(read_json(net_path));
  std::vector<std::string> ground;
  for (int t : net.terminals) ground.push_back(net.nodes[t]);
  LaminarDecomposition dec =
      decomposition_from_json(read_json(family_path), ground);
  SolveReport rep = lock(dec.cuts, net);
  json out = report_to_json(rep, net);
  out["locks_family"] = verify_locking(*rep.multiflow, dec.cuts, net);
  write_output(out, json_out);
  return 0;
}

int run_verify(const std::string& flow_path, const std::string& family_path,
               const std::string& net_path, const std::string& json_out) {
  Network net = network_from_json(read_json(net_path));
  std::vector<std::string> ground;
  for (int t : net.terminals) ground.push_back(net.nodes[t]);
  LaminarDecomposition dec =
      decomposition_from_json(read_json(family_path), ground);
  Multiflow f = multiflow_from_json(read_json(flow_path), net);
  bool ok = verify_locking(f, dec.cuts, net);
  write_output(json{{"locks_family", ok}}, json_out);
  return ok ? 0 : 3;
}

EulerianMode parse_eulerian(const std::string& s) {
  if (s == "none") return EulerianMode::None;
  if (s == "inner") return EulerianMode::Inner;
  if (s == "totally") return EulerianMode::Totally;
  if (s == "properly_inner") return EulerianMode::ProperlyInner;
  throw CLI::ValidationError("unknown eulerian mode " + s);
}

WeightMode parse_weight(const std::string& s) {
  if (s == "random_distance") return WeightMode::RandomDistance;
  if (s == "random_metric") return WeightMode::RandomMetric;
  if (s == "tree_realizable") return WeightMode::TreeRealizable;
  if (s == "interval_representable") return WeightMode::IntervalRepresentable;
  if (s == "commodity_graph") return WeightMode::CommodityGraph;
  if (s == "two_commodity") return WeightMode::TwoCommodity;
  if (s == "all_one") return WeightMode::AllOne;
  throw CLI::ValidationError("unknown weight mode " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed multiflow classification and solvers"};
  app.require_subcommand(1);

  std::string mu_path, net_path, family_path, flow_path;
  std::string json_out, dot_out;
  std::string method = "auto";
  std::string eulerian = "inner", weight = "random_distance";
  int budget = 8;
  uint64_t seed = 0;
  int count = 10;
  long long k = 1;
  int terminals = 3, inners = 2;

  auto* classify_cmd = app.add_subcommand("classify", "classify a terminal weight");
  classify_cmd->add_option("--mu", mu_path, "weight json")->required();
  classify_cmd->add_option("--json", json_out, "output path");
  classify_cmd->add_option("--dot", dot_out, "tree DOT output path");
  classify_cmd->add_option("--budget", budget, "realization search budget");

  auto* solve_cmd = app.add_subcommand("solve", "solve a weighted multiflow problem");
  solve_cmd->add_option("--mu", mu_path, "weight json")->required();
  solve_cmd->add_option("--net", net_path, "network json")->required();
  solve_cmd->add_option("--method", method, "lp|tree|mcc|auto");
  solve_cmd->add_option("--json", json_out, "output path");
  solve_cmd->add_option("--dot", dot_out, "network DOT output path");
  solve_cmd->add_option("--budget", budget, "search budget");

  auto* lock_cmd = app.add_subcommand("lock", "integral multiflow locking a family");
  lock_cmd->add_option("--family", family_path, "laminar family json")->required();
  lock_cmd->add_option("--net", net_path, "network json")->required();
  lock_cmd->add_option("--json", json_out, "output path");

  auto* verify_cmd = app.add_subcommand("verify", "verify a locking multiflow");
  verify_cmd->add_option("--flow", flow_path, "multiflow json")->required();
  verify_cmd->add_option("--family", family_path, "laminar family json")->required();
  verify_cmd->add_option("--net", net_path, "network json")->required();
  verify_cmd->add_option("--json", json_out, "output path");

  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
  gen_cmd->add_option("--seed", seed, "seed")->required();
  gen_cmd->add_option("--eulerian", eulerian, "none|inner|totally|properly_inner");
  gen_cmd->add_option("--weight", weight, "weight mode");
  gen_cmd->add_option("--terminals", terminals, "terminal count");
  gen_cmd->add_option("--inners", inners, "inner node count");
  gen_cmd->add_option("--json", json_out, "output path");

  auto* probe_cmd = app.add_subcommand("probe", "denominator probe over a batch");
  probe_cmd->add_option("--seed", seed, "base seed")->required();
  probe_cmd->add_option("--count", count, "batch size");
  probe_cmd->add_option("--k", k, "integrality threshold");
  probe_cmd->add_option("--eulerian", eulerian, "eulerian mode");
  probe_cmd->add_option("--weight", weight, "weight mode");
  probe_cmd->add_option("--terminals", terminals, "terminal count");
  probe_cmd->add_option("--inners", inners, "inner node count");
  probe_cmd->add_option("--json", json_out, "output path (json lines)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed())
      return run_classify(mu_path, json_out, dot_out, budget);
    if (solve_cmd->parsed())
      return run_solve(mu_path, net_path, method, json_out, dot_out, budget);
    if (lock_cmd->parsed()) return run_lock(family_path, net_path, json_out);
    if (verify_cmd->parsed())
      return run_verify(flow_path, family_path, net_path, json_out);
    if (gen_cmd->parsed()) {
      InstanceSpec spec;
      spec.seed = seed;
      spec.terminal_count = terminals;
      spec.inner_count = inners;
      spec.eulerian_mode = parse_eulerian(eulerian);
      spec.weight_mode = parse_weight(weight);
      Instance inst = generate(spec);
      json out{{"mu", distance_to_json(inst.mu)},
               {"network", network_to_json(inst.net)}};
      if (inst.realization)
        out["realization"] = realization_to_json(*inst.realization);
      write_output(out, json_out);
      return 0;
    }
    if (probe_cmd->parsed()) {
      InstanceSpec spec;
      spec.seed = seed;
      spec.terminal_count = terminals;
      spec.inner_count = inners;
      spec.eulerian_mode = parse_eulerian(eulerian);
      spec.weight_mode = parse_weight(weight);
      ProbeReport report = denominator_probe(spec, count, k);
      std::ostringstream lines;
      for (const auto& item : report.items) {
        json line{{"seed", item.seed},
                  {"value",
                   {{"num", item.value.get_num().get_str()},
                    {"den", item.value.get_den().get_str()}}},
                  {"max_lambda_den", item.max_lambda_den.get_str()},
                  {"methods_agree", item.methods_agree}};
        lines << line.dump() << "\n";
      }
      json summary{{"max_value_den", report.max_value_den.get_str()},
                   {"max_lambda_den", report.max_lambda_den.get_str()},
                   {"items_beyond_k", report.items_beyond_k}};
      lines << summary.dump() << "\n";
      write_text(lines.str(), json_out);
      return 0;
    }
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
