#include "hyperorient/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "hyperorient/augment.hpp"
#include "hyperorient/errors.hpp"
#include "hyperorient/families.hpp"
#include "hyperorient/generator.hpp"
#include "hyperorient/io.hpp"
#include "hyperorient/oracle.hpp"
#include "hyperorient/separator.hpp"

namespace hyperorient {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string orientation;
  std::string trace;
  std::string trace_out;
  std::string output;
  std::optional<Count> target_k;
  std::optional<std::uint64_t> seed;
  bool json = false;
  GenSpec gen;
  VertexId source = 0;
  std::vector<VertexId> sinks;
  std::string side = "out";
};

void print_family(std::ostream& out, const char* name, const std::vector<VertexSet>& family) {
  out << name << ':';
  for (const VertexSet& x : family) out << ' ' << x.to_string();
  out << '\n';
}

void print_families(std::ostream& out, const CutFamilies& fam) {
  out << "k: " << fam.k << "\nroot: " << fam.root << '\n';
  print_family(out, "m_minus", fam.m_minus);
  print_family(out, "m_plus", fam.m_plus);
  print_family(out, "m_all", fam.m_all);
  print_family(out, "r_family", fam.r_family);
  print_family(out, "q_minus", fam.q_minus);
  print_family(out, "q_plus", fam.q_plus);
}

Orientation load_orientation(const Options& opt, const Hypergraph& h) {
  if (opt.orientation.empty()) {
    throw CLI::RequiredError("--orientation");
  }
  return read_orientation_file(opt.orientation, h);
}

int cmd_check(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const Count value = lambda(h, load_orientation(opt, h));
  if (opt.json) {
    out << json{{"lambda", value}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

int cmd_families(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const Orientation o = load_orientation(opt, h);
  const CutFamilies fam = opt.target_k ? compute_families(h, o, *opt.target_k)
                                       : compute_families(h, o);
  if (opt.json) {
    out << to_json(fam).dump() << '\n';
  } else {
    print_families(out, fam);
  }
  return kExitOk;
}

int cmd_orient(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const Orientation o = opt.orientation.empty() ? gen_orientation(h, opt.seed.value_or(0))
                                                : read_orientation_file(opt.orientation, h);
  const AugmentResult result = augment_to(h, o, *opt.target_k);
  if (!opt.trace_out.empty()) {
    std::ofstream file(opt.trace_out);
    if (!file) throw InvalidArgument("cannot write " + opt.trace_out);
    write_trace(file, h, result.trace);
  }
  const ReorientationTrace& t = result.trace;
  if (opt.json) {
    out << json{{"lambda_initial", t.lambda_initial},
                {"lambda_final", t.lambda_final},
                {"steps", t.steps.size()},
                {"rounds", result.rounds.size()},
                {"heads", std::vector<VertexId>(result.orientation.heads().begin(),
                                                result.orientation.heads().end())}}
               .dump()
        << '\n';
  } else {
    out << "lambda " << t.lambda_initial << " -> " << t.lambda_final << " in " << t.steps.size()
        << " steps (" << result.rounds.size() << " paths)\n";
    write_orientation(out, result.orientation);
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const ReorientationTrace trace = read_trace_file(opt.trace, h);
  const TraceReport report = verify_trace(h, trace);
  if (opt.json) {
    json failures = json::array();
    for (const TraceFailure& f : report.failures) {
      failures.push_back({{"step", f.step}, {"message", f.message}});
    }
    out << json{{"ok", report.ok()},
                {"steps_checked", report.steps_checked},
                {"lambda_initial", report.lambda_initial},
                {"lambda_final", report.lambda_final},
                {"failures", failures}}
               .dump()
        << '\n';
  } else {
    for (const TraceFailure& f : report.failures) {
      out << "FAIL step " << f.step << ": " << f.message << '\n';
    }
    out << (report.ok() ? "OK" : "FAILED") << ": " << report.steps_checked << " steps, lambda "
        << report.lambda_initial << " -> " << report.lambda_final << '\n';
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  GenSpec spec = opt.gen;
  spec.seed = opt.seed.value_or(0);
  const Hypergraph h = gen_instance(spec);
  if (opt.output.empty()) {
    write_hypergraph(out, h);
  } else {
    std::ofstream file(opt.output);
    if (!file) throw InvalidArgument("cannot write " + opt.output);
    write_hypergraph(file, h);
  }
  return kExitOk;
}

int cmd_oracle(const std::string& op, const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  if (op == "lambda") {
    const Count value = oracle::bf_lambda(h, load_orientation(opt, h));
    out << (opt.json ? json{{"lambda", value}}.dump() : std::to_string(value)) << '\n';
    return kExitOk;
  }
  if (op == "families") {
    const Orientation o = load_orientation(opt, h);
    const CutFamilies fam = opt.target_k ? oracle::bf_families(h, o, *opt.target_k, 0)
                                         : oracle::bf_families(h, o);
    if (opt.json) {
      out << to_json(fam).dump() << '\n';
    } else {
      print_families(out, fam);
    }
    return kExitOk;
  }
  if (op == "separator") {
    const Orientation o = load_orientation(opt, h);
    if (opt.sinks.empty()) throw CLI::RequiredError("--sinks");
    const VertexSet sinks(h.num_vertices(), opt.sinks);
    const auto sep = oracle::bf_min_separator(
        h, o, opt.source, sinks, opt.side == "in" ? oracle::Side::kIn : oracle::Side::kOut);
    if (opt.json) {
      out << json{{"value", sep.value}, {"minimal", to_json(sep.minimal)}}.dump() << '\n';
    } else {
      out << sep.value << ' ' << sep.minimal.to_string() << '\n';
    }
    return kExitOk;
  }
  if (op == "partition") {
    const auto check = oracle::bf_partition_connected(h, opt.target_k.value_or(1));
    if (opt.json) {
      json j{{"connected", check.connected}};
      if (check.witness) {
        json classes = json::array();
        for (const VertexSet& c : check.witness->classes()) classes.push_back(to_json(c));
        j["witness"] = classes;
      }
      out << j.dump() << '\n';
    } else {
      out << (check.connected ? "partition-connected" : "not partition-connected");
      if (check.witness) {
        out << ", witness";
        for (const VertexSet& c : check.witness->classes()) out << ' ' << c.to_string();
      }
      out << '\n';
    }
    return check.connected ? kExitOk : kExitFailure;
  }
  if (op == "orientation") {
    const auto search = oracle::bf_orientation_exists(h, opt.target_k.value_or(1));
    if (opt.json) {
      json j{{"exists", search.exists}};
      if (search.witness) {
        j["heads"] = std::vector<VertexId>(search.witness->heads().begin(),
                                           search.witness->heads().end());
      }
      out << j.dump() << '\n';
    } else {
      out << (search.exists ? "exists" : "none") << '\n';
      if (search.witness) write_orientation(out, *search.witness);
    }
    return search.exists ? kExitOk : kExitFailure;
  }
  // safe: every safe vertex of every minimal tight set, by the literal definition.
  const Orientation o = load_orientation(opt, h);
  const CutFamilies fam = oracle::bf_families(h, o);
  json j{{"sources", json::array()}, {"sinks", json::array()}};
  auto scan = [&](const std::vector<VertexSet>& family, bool source, const char* key) {
    for (const VertexSet& x : family) {
      std::vector<VertexId> safe;
      x.for_each([&](VertexId u) {
        if (source ? oracle::bf_safe_source(h, o, fam, x, u) : oracle::bf_safe_sink(h, o, fam, x, u)) {
          safe.push_back(u);
        }
      });
      j[key].push_back({{"set", to_json(x)}, {"safe", safe}});
      if (!opt.json) {
        out << (source ? "source " : "sink ") << x.to_string() << ':';
        for (VertexId u : safe) out << ' ' << u;
        out << '\n';
      }
    }
  };
  scan(fam.m_minus, true, "sources");
  scan(fam.m_plus, false, "sinks");
  if (opt.json) out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monotone hyperarc-connectivity augmentation for oriented hypergraphs",
               "hyperorient"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Hypergraph file (.hg)")->required();
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Machine-readable output");
  };

  CLI::App* check = app.add_subcommand("check", "Print the hyperarc-connectivity of an orientation");
  add_input(check);
  check->add_option("--orientation", opt.orientation, "Orientation file (.or)")->required();
  add_json(check);

  CLI::App* families = app.add_subcommand("families", "Print the minimal tight-set families");
  add_input(families);
  families->add_option("--orientation", opt.orientation, "Orientation file (.or)")->required();
  families->add_option("--target-k", opt.target_k, "Level (default: current connectivity)");
  add_json(families);

  CLI::App* orient = app.add_subcommand("orient", "Raise connectivity by single reorientations");
  add_input(orient);
  orient->add_option("--orientation", opt.orientation, "Start orientation (default: random)");
  orient->add_option("--seed", opt.seed, "Seed for the random start orientation");
  orient->add_option("--target-k", opt.target_k, "Connectivity to reach")->required();
  orient->add_option("--trace-out", opt.trace_out, "Write the JSONL trace here");
  add_json(orient);

  CLI::App* verify = app.add_subcommand("verify", "Replay and certify a reorientation trace");
  add_input(verify);
  verify->add_option("--trace", opt.trace, "Trace file (JSONL)")->required();
  add_json(verify);

  CLI::App* gen = app.add_subcommand("gen", "Generate a (k,k)-partition-connected hypergraph");
  gen->add_option("--n", opt.gen.n, "Vertex count")->required();
  gen->add_option("--target-k", opt.gen.k, "Partition-connectivity level")->required();
  gen->add_option("--extra-edges", opt.gen.extra_edges, "Random hyperedges beyond the cycles");
  gen->add_option("--max-edge-size", opt.gen.max_edge_size, "Largest random hyperedge");
  gen->add_option("--seed", opt.seed, "Generator seed");
  gen->add_option("--output", opt.output, "Write here instead of stdout");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force certification at desk scale");
  oracle_cmd->require_subcommand(1);
  std::string oracle_op;
  const std::pair<const char*, const char*> ops[] = {
      {"lambda", "Connectivity by subset enumeration"},
      {"families", "Tight-set families by subset enumeration"},
      {"separator", "Minimum separator by subset enumeration"},
      {"partition", "Partition-connectivity by partition enumeration"},
      {"orientation", "Search every orientation for a connected one"},
      {"safe", "Safe vertices of every minimal tight set"},
  };
  for (const auto& [name, help] : ops) {
    CLI::App* sub = oracle_cmd->add_subcommand(name, help);
    add_input(sub);
    add_json(sub);
    const std::string op = name;
    sub->callback([&oracle_op, op] { oracle_op = op; });
    if (op == "partition" || op == "orientation") {
      sub->add_option("--target-k", opt.target_k, "Level to test")->required();
      continue;
    }
    sub->add_option("--orientation", opt.orientation, "Orientation file (.or)")->required();
    if (op == "families") sub->add_option("--target-k", opt.target_k, "Level");
    if (op == "separator") {
      sub->add_option("--source", opt.source, "Vertex inside the separator")->required();
      sub->add_option("--sinks", opt.sinks, "Vertices outside it, comma separated")
          ->required()
          ->delimiter(',');
      sub->add_option("--side", opt.side, "out (minimize d+) or in (minimize d-)")
          ->check(CLI::IsMember({"in", "out"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (families->parsed()) return cmd_families(opt, out);
    if (orient->parsed()) return cmd_orient(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
    return cmd_oracle(oracle_op, opt, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotPartitionConnected& e) {
    err << "error: " << e.what() << '\n';
    if (!e.certificate().empty()) err << "certificate: " << e.certificate() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hyperorient
