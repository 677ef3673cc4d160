#include "cli.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "report.hpp"
#include "selfloop/energy.hpp"
#include "selfloop/graph6.hpp"
#include "selfloop/verify.hpp"

namespace selfloop::cli {

namespace {

using nlohmann::ordered_json;

/// Input or usage problem; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string graph6;
  std::string input;
  std::optional<std::string> loops;
  std::size_t n = 1;
  std::size_t n_max = 0;
  std::string partner = "empty";
  std::string variant;
  std::string format;
  std::optional<double> tol;
  unsigned threads = 0;
};

struct Input {
  std::vector<Record> records;
};

Input read_input(const RunConfig& cfg) {
  Input in;
  if (!cfg.graph6.empty() && !cfg.input.empty()) throw UsageError("give --graph6 or --input, not both");
  if (!cfg.graph6.empty()) {
    Record r;
    r.graph6 = cfg.graph6;
    r.graph = decode_graph6(cfg.graph6);
    if (cfg.loops) r.loops = parse_loop_mask(*cfg.loops, r.graph.order());
    in.records.push_back(std::move(r));
    return in;
  }
  if (cfg.input.empty()) throw UsageError("missing --graph6 or --input");
  if (cfg.loops) throw UsageError("--loops applies to --graph6 only; files carry a sidecar mask");
  std::ifstream file(cfg.input);
  if (!file) throw UsageError("cannot read " + cfg.input);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    if (is_skippable_line(line)) continue;
    try {
      in.records.push_back(parse_record(line));
    } catch (const FormatError& e) {
      throw UsageError(cfg.input + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return in;
}

SelfLoopGraph with_loops(const Record& r) {
  return SelfLoopGraph(r.graph, r.loops.value_or(LoopSet(r.graph.order())));
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) {
  return cfg.format.empty() ? fallback : parse_format(cfg.format);
}

double tolerance(const RunConfig& cfg) { return cfg.tol.value_or(kComparisonTolerance); }

int cmd_energy(const RunConfig& cfg, std::ostream& out) {
  const auto fmt = format_or(cfg, OutputFormat::kJson);
  bool first = true;
  for (const auto& r : read_input(cfg).records) {
    if (r.graph.order() == 0) throw UsageError("energy needs n >= 1");
    out << emit_report(energy_self_loop(with_loops(r)), fmt, first);
    first = false;
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto fmt = format_or(cfg, OutputFormat::kJson);
  const double cluster_tol = cfg.tol.value_or(kClusterTolerance);
  if (fmt == OutputFormat::kCsv) out << "index,value\n";
  for (const auto& r : read_input(cfg).records) {
    if (r.graph.order() == 0) throw UsageError("spectrum needs n >= 1");
    const auto report = energy_self_loop(with_loops(r));
    const auto clusters = cluster_spectrum(report.spectrum, cluster_tol);
    if (fmt == OutputFormat::kJson) {
      ordered_json j;
      j["n"] = report.n;
      j["alpha"] = report.alpha;
      j["shift"] = round_real(report.shift);
      auto& values = j["spectrum"] = ordered_json::array();
      for (double x : report.spectrum.values()) values.push_back(round_real(x));
      j["clusters"] = to_json(clusters);
      out << j.dump() << "\n";
    } else if (fmt == OutputFormat::kCsv) {
      for (std::size_t i = 0; i < report.spectrum.size(); ++i)
        out << i << "," << format_real(report.spectrum[i]) << "\n";
    } else {
      for (const auto& c : clusters) out << format_real(c.value) << " ^" << c.multiplicity << "\n";
    }
  }
  return kExitOk;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto fmt = format_or(cfg, OutputFormat::kJson);
  int status = kExitOk;
  if (fmt == OutputFormat::kCsv) out << "graph6,n,route,loops,e_base,e_loops,margin\n";
  for (const auto& r : read_input(cfg).records) {
    if (r.graph.order() < 2) throw UsageError("witness needs n >= 2");
    WitnessCertificate cert;
    try {
      cert = conjecture_witness(r.graph, tolerance(cfg));
    } catch (const AmbiguityError& e) {
      err << "witness failed for " << r.graph6 << ": " << e.what() << "\n";
      status = kExitCheckFailed;
      continue;
    }
    const std::string mask = format_loop_mask(cert.loop_set);
    switch (fmt) {
      case OutputFormat::kJson: {
        ordered_json j;
        j["graph6"] = r.graph6;
        j["n"] = r.graph.order();
        j["route"] = to_string(cert.route);
        j["loops"] = mask;
        j["alpha"] = cert.loop_set.alpha();
        j["e_base"] = round_real(cert.e_base);
        j["e_loops"] = round_real(cert.e_loops);
        j["margin"] = round_real(cert.margin());
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::kCsv:
        out << r.graph6 << "," << r.graph.order() << "," << to_string(cert.route) << "," << mask
            << "," << format_real(cert.e_base) << "," << format_real(cert.e_loops) << ","
            << format_real(cert.margin()) << "\n";
        break;
      case OutputFormat::kText:
        out << r.graph6 << " : " << mask << "  " << to_string(cert.route)
            << "  E(G)=" << format_real(cert.e_base) << "  E(G_S)=" << format_real(cert.e_loops)
            << "\n";
        break;
    }
  }
  return status;
}

Partner parse_partner(const std::string& tag) {
  if (tag == "empty") return Partner::kEmpty12;
  if (tag == "complete") return Partner::kComplete12;
  throw UsageError("--partner must be empty or complete");
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
  const auto fmt = format_or(cfg, OutputFormat::kJson);
  const Partner partner = parse_partner(cfg.partner);
  if (cfg.n < 1) throw UsageError("--n must be >= 1");

  if (!cfg.variant.empty()) {
    if (cfg.variant != "h1" && cfg.variant != "h2") throw UsageError("--variant must be h1 or h2");
    const auto inst =
        build_family(cfg.variant == "h1" ? Variant::kH1 : Variant::kH2, partner, cfg.n);
    const auto report = energy_self_loop(inst.graph);
    if (fmt != OutputFormat::kJson) {
      out << emit_report(report, fmt);
      return kExitOk;
    }
    ordered_json j;
    j["variant"] = cfg.variant;
    j["partner"] = cfg.partner;
    j["n"] = report.n;
    j["alpha"] = report.alpha;
    j["shift"] = round_real(report.shift);
    j["energy"] = round_real(report.energy);
    j["predicted_energy"] = round_real(inst.predicted_energy);
    j["clusters"] = to_json(cluster_spectrum(report.spectrum));
    j["predicted_clusters"] = to_json(inst.predicted_spectrum);
    out << j.dump() << "\n";
    return kExitOk;
  }

  const auto pair = verify_family_pair(partner, cfg.n, tolerance(cfg));
  switch (fmt) {
    case OutputFormat::kJson: {
      ordered_json j;
      j["partner"] = cfg.partner;
      j["n"] = cfg.n;
      j["energy"] = round_real(pair.energy_h1);
      j["energy_h1"] = round_real(pair.energy_h1);
      j["energy_h2"] = round_real(pair.energy_h2);
      j["predicted_energy"] = round_real(pair.predicted_energy);
      j["equal"] = pair.equal;
      const auto summary = to_json(pair.summary);
      for (const auto& [k, v] : summary.items()) j[k] = v;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "partner,n,energy_h1,energy_h2,predicted_energy,equal,total,passed\n"
          << cfg.partner << "," << cfg.n << "," << format_real(pair.energy_h1) << ","
          << format_real(pair.energy_h2) << "," << format_real(pair.predicted_energy) << ","
          << (pair.equal ? "true" : "false") << "," << pair.summary.total << ","
          << pair.summary.passed << "\n";
      break;
    case OutputFormat::kText:
      out << "partner " << cfg.partner << ", n = " << cfg.n << ": E(H1 side) = "
          << format_real(pair.energy_h1) << ", E(H2 side) = " << format_real(pair.energy_h2)
          << ", closed form " << format_real(pair.predicted_energy) << "\n"
          << emit_report(pair.summary, OutputFormat::kText);
      break;
  }
  return pair.summary.ok() ? kExitOk : kExitCheckFailed;
}

struct SuiteRun {
  std::size_t n = 0;
  std::size_t graphs = 0;
  CheckSummary witness;
  CheckSummary loop_sets;
  CheckSummary bipartite;
};

int cmd_verify_all(const RunConfig& cfg, std::ostream& out) {
  const auto fmt = format_or(cfg, OutputFormat::kText);
  const double tol = tolerance(cfg);

  if (!cfg.input.empty() || !cfg.graph6.empty()) {
    const auto in = read_input(cfg);
    std::vector<Graph> graphs;
    std::vector<std::string> ids;
    for (const auto& r : in.records) {
      graphs.push_back(r.graph);
      ids.push_back(r.graph6);
    }
    CheckSummary summary = corpus_conjecture_check(graphs, ids, tol, cfg.threads);
    for (const auto& r : in.records) {
      if (r.loops && !r.loops->empty() && r.loops->alpha() < r.graph.order())
        summary.merge(check_theorem_cases(r.graph, *r.loops, tol));
    }
    if (fmt == OutputFormat::kText) out << graphs.size() << " corpus graphs: ";
    out << emit_report(summary, fmt);
    return summary.ok() ? kExitOk : kExitCheckFailed;
  }

  if (cfg.n_max < 2 || cfg.n_max > 6) throw UsageError("--n-max must be in 2..6");
  std::vector<SuiteRun> runs;
  CheckSummary all;
  for (std::size_t n = 2; n <= cfg.n_max; ++n) {
    SuiteRun run;
    run.n = n;
    run.graphs = std::size_t{1} << (n * (n - 1) / 2);
    run.witness = exhaustive_conjecture_check(n, tol, cfg.threads);
    run.loop_sets = exhaustive_loop_set_check(n, tol, cfg.threads);
    run.bipartite = exhaustive_bipartite_check(n, tol, cfg.threads);
    all.merge(run.witness);
    all.merge(run.loop_sets);
    all.merge(run.bipartite);
    runs.push_back(std::move(run));
  }

  switch (fmt) {
    case OutputFormat::kText:
      for (const auto& r : runs) {
        const std::size_t failures =
            r.witness.failures.size() + r.loop_sets.failures.size() + r.bipartite.failures.size();
        out << r.graphs << " graphs on " << r.n << " vertices: witness " << r.witness.passed
            << "/" << r.witness.total << ", loop-set checks " << r.loop_sets.passed << "/"
            << r.loop_sets.total << ", bipartite checks " << r.bipartite.passed << "/"
            << r.bipartite.total << ", " << failures << " failures\n";
      }
      out << emit_report(all, OutputFormat::kText);
      break;
    case OutputFormat::kCsv:
      out << "n,graphs,witness_passed,witness_total,loop_set_passed,loop_set_total,"
             "bipartite_passed,bipartite_total\n";
      for (const auto& r : runs) {
        out << r.n << "," << r.graphs << "," << r.witness.passed << "," << r.witness.total << ","
            << r.loop_sets.passed << "," << r.loop_sets.total << "," << r.bipartite.passed << ","
            << r.bipartite.total << "\n";
      }
      break;
    case OutputFormat::kJson: {
      ordered_json j;
      auto& arr = j["runs"] = ordered_json::array();
      for (const auto& r : runs) {
        ordered_json run;
        run["n"] = r.n;
        run["graphs"] = r.graphs;
        run["witness"] = to_json(r.witness);
        run["loop_sets"] = to_json(r.loop_sets);
        run["bipartite"] = to_json(r.bipartite);
        arr.push_back(std::move(run));
      }
      const auto summary = to_json(all);
      for (const auto& [k, v] : summary.items()) j[k] = v;
      out << j.dump() << "\n";
      break;
    }
  }
  return all.ok() ? kExitOk : kExitCheckFailed;
}

void add_input_options(CLI::App* cmd, RunConfig& cfg, bool loops) {
  cmd->add_option("--graph6", cfg.graph6, "graph in graph6 format");
  cmd->add_option("--input", cfg.input, "file with one `graph6[ : hexmask]` record per line");
  if (loops) cmd->add_option("--loops", cfg.loops, "loop set as a hex bitmask");
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--tol", cfg.tol, "tolerance override")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy of graphs with self-loops", "selfloop"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* energy_cmd = app.add_subcommand("energy", "energy of G_S");
  add_input_options(energy_cmd, cfg, true);
  add_common_options(energy_cmd, cfg);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum of A(G_S) with multiplicities");
  add_input_options(spectrum_cmd, cfg, true);
  add_common_options(spectrum_cmd, cfg);

  auto* witness_cmd = app.add_subcommand("witness", "loop set S with E(G_S) > E(G)");
  add_input_options(witness_cmd, cfg, false);
  add_common_options(witness_cmd, cfg);

  auto* family_cmd = app.add_subcommand("family", "equienergetic join families");
  family_cmd->add_option("--partner", cfg.partner, "empty or complete")
      ->check(CLI::IsMember({"empty", "complete"}));
  family_cmd->add_option("--n", cfg.n, "number of copies")->check(CLI::PositiveNumber);
  family_cmd->add_option("--variant", cfg.variant, "h1 or h2; report one instance")
      ->check(CLI::IsMember({"h1", "h2"}));
  add_common_options(family_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify-all", "exhaustive checks on small graphs");
  verify_cmd->add_option("--n-max", cfg.n_max, "largest order to enumerate (2..6)");
  add_input_options(verify_cmd, cfg, false);
  verify_cmd->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  add_common_options(verify_cmd, cfg);

  std::vector<const char*> argv{"selfloop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*energy_cmd) return cmd_energy(cfg, out);
    if (*spectrum_cmd) return cmd_spectrum(cfg, out);
    if (*witness_cmd) return cmd_witness(cfg, out, err);
    if (*family_cmd) return cmd_family(cfg, out);
    if (*verify_cmd) return cmd_verify_all(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace selfloop::cli
