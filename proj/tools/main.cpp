#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boolnet/bundled.hpp"
#include "boolnet/dynamics.hpp"
#include "boolnet/ensemble.hpp"
#include "boolnet/fitting.hpp"
#include "boolnet/reduction.hpp"
#include "boolnet/report.hpp"
#include "boolnet/schedule.hpp"

namespace fs = std::filesystem;
using namespace boolnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitGuard = 2;
constexpr int kExitMismatch = 3;

struct Globals {
  unsigned threads = 1;
  std::size_t max_width = default_max_width();
  unsigned max_arcs = 26;
  std::string config;
  std::vector<std::string> outputs;
  bool detect_outputs = false;

  AnalysisOptions analysis() const { return AnalysisOptions{max_width, threads}; }
  EnumerationOptions enumeration() const { return EnumerationOptions{std::uint64_t{1} << max_arcs}; }
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::map<std::string, bool> parse_pins(const std::vector<std::string>& items) {
  std::map<std::string, bool> pins;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    const std::string value = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (eq == 0 || (value != "0" && value != "1")) throw Error("bad --pin '" + item + "', expected NODE=0|1");
    pins[item.substr(0, eq)] = value == "1";
  }
  return pins;
}

// NET is a bundled name or a rule-file path; a sibling `<file>.cfg` is read when present.
Network resolve_network(const std::string& spec, const Globals& g, const std::map<std::string, bool>& pins) {
  NetworkConfig config;
  std::string text;
  if (is_bundled(spec) && !fs::exists(spec)) {
    for (const auto& b : bundled_networks()) {
      if (b.name != spec) continue;
      text = std::string(b.rules);
      config.name = std::string(b.name);
      for (auto o : b.outputs) config.outputs.emplace_back(o);
    }
  } else {
    text = read_file(spec);
    config.name = fs::path(spec).stem().string();
    const fs::path sidecar = spec + ".cfg";
    if (g.config.empty() && fs::exists(sidecar)) config = parse_config(read_file(sidecar));
  }
  if (!g.config.empty()) {
    const auto extra = parse_config(read_file(g.config));
    if (!extra.name.empty()) config.name = extra.name;
    if (!extra.outputs.empty()) config.outputs = extra.outputs;
    for (const auto& [k, v] : extra.pins) config.pins[k] = v;
    config.detect_outputs = config.detect_outputs || extra.detect_outputs;
  }
  if (config.name.empty()) config.name = fs::path(spec).stem().string();
  if (!g.outputs.empty()) config.outputs = g.outputs;
  if (g.detect_outputs) config.detect_outputs = true;
  Network net = load_network(text, config);
  for (const auto& [node, value] : pins) net = pin(net, node, value);
  return net;
}

UpdateSchedule resolve_schedule(const Network& net, const std::string& text) {
  if (text.empty() || text == "parallel") return UpdateSchedule::parallel(net.dynamic_names());
  return UpdateSchedule::parse(text);
}

// `--desired 0101,1010` adds one attractor; repeat the flag for more.
std::vector<std::vector<std::uint64_t>> parse_desired(const std::vector<std::string>& items, std::size_t width) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& item : items) {
    std::vector<std::uint64_t> states;
    std::stringstream ss(item);
    std::string bits;
    while (std::getline(ss, bits, ',')) {
      const State s = State::parse(bits);
      if (s.width != width) throw Error("desired state '" + bits + "' has the wrong width");
      states.push_back(s.code);
    }
    out.push_back(std::move(states));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean network dynamics under block-sequential update schedules", "boolnet"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--max-width", g.max_width, "Largest state width to enumerate")->check(CLI::Range(1, 31));
  app.add_option("--max-arcs", g.max_arcs, "Largest number of non-loop arcs for schedule enumeration")
      ->check(CLI::Range(1U, 40U));
  app.add_option("--config", g.config, "Sidecar config with outputs:/pin:/name: directives");
  app.add_option("--outputs", g.outputs, "Output (phenotype) nodes")->delimiter(',');
  app.add_flag("--detect-outputs", g.detect_outputs, "Treat out-degree-0 nodes as outputs");

  std::string net_arg;
  std::string schedule_text;
  std::vector<std::string> pin_args;
  std::string out_path;

  // nets list
  auto* nets = app.add_subcommand("nets", "Bundled networks");
  auto* nets_list = nets->add_subcommand("list", "List bundled networks");
  nets->require_subcommand(1);
  nets_list->callback([] {
    for (const auto& b : bundled_networks()) std::cout << b.name << "  " << b.description << '\n';
  });

  // attractors
  auto* attractors = app.add_subcommand("attractors", "Attractors and basins under one schedule");
  std::string format = "table";
  bool include_outputs = false;
  bool dash_outputs = false;
  attractors->add_option("NET", net_arg, "Bundled name or rule file")->required();
  attractors->add_option("--schedule", schedule_text, "Schedule such as (A)(B,C); default parallel");
  attractors->add_option("--pin", pin_args, "Clamp NODE=0|1")->take_all();
  attractors->add_flag("--include-outputs", include_outputs, "Add output-node rows");
  attractors->add_flag("--dash-cycle-outputs", dash_outputs, "Print - for outputs inside limit cycles");
  attractors->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
  attractors->add_option("--out", out_path, "Output file (default stdout)");
  attractors->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    const auto report = find_attractors(net, resolve_schedule(net, schedule_text), g.analysis());
    const TableOptions opts{include_outputs, dash_outputs};
    if (format == "json") {
      write_output(out_path, attractors_json(net, report));
    } else if (format == "csv") {
      write_output(out_path, attractors_csv(net, report, opts));
    } else {
      write_output(out_path, attractors_table(net, report, opts));
    }
  });

  // basins
  auto* basins = app.add_subcommand("basins", "Attractor id of every state");
  std::string csv_path;
  basins->add_option("NET", net_arg)->required();
  basins->add_option("--schedule", schedule_text);
  basins->add_option("--pin", pin_args)->take_all();
  basins->add_option("--csv", csv_path, "CSV file")->required();
  basins->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    write_output(csv_path, basins_csv(map_basins(net, resolve_schedule(net, schedule_text), g.analysis())));
  });

  // stg
  auto* stg = app.add_subcommand("stg", "State transition graph as DOT");
  std::string dot_path;
  stg->add_option("NET", net_arg)->required();
  stg->add_option("--schedule", schedule_text);
  stg->add_option("--pin", pin_args)->take_all();
  stg->add_option("--dot", dot_path, "DOT file")->required();
  stg->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    write_output(dot_path, export_stg(net, resolve_schedule(net, schedule_text)));
  });

  // schedules
  auto* schedules = app.add_subcommand("schedules", "Schedule counting and equivalence classes");
  schedules->require_subcommand(1);
  unsigned count_n = 0;
  auto* sched_count = schedules->add_subcommand("count", "Number of block-sequential schedules on N nodes");
  sched_count->add_option("N", count_n)->required()->check(CLI::Range(0U, 1000U));
  sched_count->callback([&] { std::cout << count_schedules(count_n) << '\n'; });

  auto* sched_enum = schedules->add_subcommand("enumerate", "One representative schedule per class");
  sched_enum->add_option("NET", net_arg)->required();
  sched_enum->add_option("--pin", pin_args)->take_all();
  sched_enum->add_option("--out", out_path, "Output file (default stdout)");
  sched_enum->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    const auto graph = InteractionDigraph::of(net);
    std::string text;
    const auto n = enumerate_representatives(
        graph,
        [&](const Representative& r) {
          text += UpdateSchedule::from_levels(graph.vertices(), r.levels).to_string();
          text += '\n';
        },
        g.enumeration());
    write_output(out_path, text);
    if (!out_path.empty() && out_path != "-") std::cout << n << " representative schedules\n";
  });

  auto* sched_classes = schedules->add_subcommand("classes", "Labeling to representative table (CSV)");
  sched_classes->add_option("NET", net_arg)->required();
  sched_classes->add_option("--pin", pin_args)->take_all();
  sched_classes->add_option("--out", out_path, "Output file (default stdout)");
  sched_classes->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    write_output(out_path, schedule_classes_csv(InteractionDigraph::of(net), g.enumeration()));
  });

  // ensemble
  auto* ensemble = app.add_subcommand("ensemble", "Attractor statistics over all representative schedules");
  std::string out_dir;
  ensemble->add_option("NET", net_arg)->required();
  ensemble->add_option("--pin", pin_args)->take_all();
  ensemble->add_option("--out-dir", out_dir, "Directory for steady.csv, cycles.csv, summary.json")->required();
  ensemble->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    const auto stats = analyze_ensemble(net, EnsembleOptions{g.enumeration(), g.analysis()});
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_output((dir / "steady.csv").string(), ensemble_steady_csv(stats, net.width()));
    write_output((dir / "cycles.csv").string(), ensemble_cycles_csv(stats, net.width()));
    write_output((dir / "summary.json").string(), ensemble_summary_json(stats, net.width()));
    std::cout << stats.schedules << " schedules, " << stats.fixed_point_only << " steady-state only, "
              << stats.with_cycles() << " with limit cycles\n";
  });

  // fit
  auto* fit = app.add_subcommand("fit", "Search replacement rules that keep a desired attractor set");
  std::vector<std::string> targets;
  std::vector<std::string> desired_args;
  std::size_t max_regulators = 3;
  bool fixed_points_only = false;
  fit->add_option("NET", net_arg)->required();
  fit->add_option("--pin", pin_args)->take_all();
  fit->add_option("--targets", targets, "Nodes to refit (default all)")->delimiter(',');
  fit->add_option("--desired", desired_args, "Attractor as comma-separated bitstrings; repeatable")->take_all();
  fit->add_option("--max-regulators", max_regulators)->check(CLI::Range(1, 3));
  fit->add_flag("--fixed-points-only", fixed_points_only, "Ignore limit cycles of refitted networks");
  fit->add_option("--out", out_path, "Output file (default stdout)");
  fit->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    FitOptions opts;
    opts.max_regulators = max_regulators;
    opts.fixed_points_only = fixed_points_only;
    opts.analysis = g.analysis();
    const auto report = fit_rules(net, targets, parse_desired(desired_args, net.width()), opts);
    write_output(out_path, fit_json(report, net.width()));
    if (!out_path.empty() && out_path != "-") {
      std::cout << report.generated << " generated, " << report.local_passed << " passed the local check, "
                << report.global_passed << " passed the global check\n";
    }
  });

  // verify-reduction
  auto* verify = app.add_subcommand("verify-reduction", "Compare attractors of a network and its reduction");
  std::string large_arg;
  std::string small_arg;
  std::string report_path;
  bool allow_extra = false;
  int verify_status = kExitOk;
  verify->add_option("LARGE", large_arg)->required();
  verify->add_option("SMALL", small_arg)->required();
  verify->add_option("--pin", pin_args)->take_all();
  verify->add_flag("--allow-extra-cycles-in-large", allow_extra);
  verify->add_option("--report", report_path, "JSON report file (default stdout)");
  verify->callback([&] {
    ReductionOptions opts;
    opts.pins = parse_pins(pin_args);
    opts.allow_extra_cycles_in_large = allow_extra;
    opts.analysis = g.analysis();
    const auto check =
        verify_reduction(resolve_network(large_arg, g, {}), resolve_network(small_arg, g, {}), opts);
    write_output(report_path, reduction_json(check));
    if (!report_path.empty() && report_path != "-") {
      std::cout << (check.matches ? "match" : "mismatch") << " on " << check.shared_nodes.size()
                << " shared nodes\n";
    }
    if (!check.matches) verify_status = kExitMismatch;
  });

  // circuits
  auto* circuits = app.add_subcommand("circuits", "Signed circuits of the interaction digraph");
  std::size_t max_len = 0;
  std::string circuit_format = "table";
  circuits->add_option("NET", net_arg)->required();
  circuits->add_option("--pin", pin_args)->take_all();
  circuits->add_option("--max-length", max_len, "Longest circuit to list (0 = all)");
  circuits->add_option("--format", circuit_format)->check(CLI::IsMember({"json", "table"}));
  circuits->add_option("--out", out_path, "Output file (default stdout)");
  circuits->callback([&] {
    const Network net = resolve_network(net_arg, g, parse_pins(pin_args));
    const auto graph = InteractionDigraph::of(net);
    const auto list = enumerate_circuits(graph, max_len);
    if (circuit_format == "json") {
      write_output(out_path, circuits_json(graph, list));
      return;
    }
    std::string text;
    std::size_t negative = 0;
    for (const auto& c : list) {
      if (c.sign == CircuitSign::Negative) ++negative;
      text += describe(c, graph) + '\n';
    }
    text += std::to_string(list.size()) + " circuits, " + std::to_string(negative) + " negative\n";
    write_output(out_path, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  } catch (const GuardError& e) {
    std::cerr << "boolnet: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "boolnet: " << e.what() << '\n';
    return kExitError;
  }
  return verify_status;
}
