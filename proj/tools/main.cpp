// bnb-assess: simulate branch-and-bound runs, extract measures from their
// traces, and build cross-run comparisons. Exit codes: 0 success, 1 bad
// invocation, 2 bad input data.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "bnba/pipeline.hpp"

namespace {

bool use_color() {
  return ::isatty(STDOUT_FILENO) != 0 && std::getenv("BNB_ASSESS_NO_COLOR") == nullptr;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(',', start);
    if (pos == std::string::npos) pos = s.size();
    if (pos > start) out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

bnba::GapDenominator denom_from_string(const std::string& s) {
  if (s == "max_abs") return bnba::GapDenominator::max_abs;
  if (s == "min_abs") return bnba::GapDenominator::min_abs;
  if (s == "constant") return bnba::GapDenominator::constant;
  throw std::invalid_argument("unknown gap denominator: " + s);
}

int usage_error(const std::exception& e) {
  std::cerr << "usage error: " << e.what() << '\n';
  return 1;
}

int data_error(const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"assessment toolkit for branch-and-bound run traces"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "run every experiment of a manifest");
  std::string sim_manifest;
  std::string sim_out;
  std::int64_t sim_seed = 0;
  sim->add_option("--manifest", sim_manifest, "experiment manifest (json)")->required();
  sim->add_option("--out", sim_out, "output directory (default: the manifest's output_dir)");
  sim->add_option("--seed-override", sim_seed, "run only this jitter seed");

  // analyze
  auto* ana = app.add_subcommand("analyze", "extract measures from a directory of traces");
  std::string ana_traces;
  std::string ana_csv;
  std::string ana_measures;
  std::string ana_denom = "max_abs";
  bnba::AnalyzeOptions ana_opt;
  double ana_horizon = 0.0;
  ana->add_option("--traces", ana_traces, "directory of .bbt trace files")->required();
  ana->add_option("--csv", ana_csv, "measures csv output path (default: stdout)");
  ana->add_option("--measures", ana_measures, "comma-separated measure names");
  ana->add_option("--rel-tol", ana_opt.rel_tol, "relative gap tolerance for time_to_opt");
  ana->add_option("--abs-tol", ana_opt.abs_tol, "absolute gap tolerance for time_to_opt");
  ana->add_option("--gap-target", ana_opt.gap_target, "gap level for time_to_gap");
  ana->add_option("--pdi-horizon", ana_horizon, "integration horizon (default: time limit)");
  ana->add_option("--gap-denom", ana_denom, "gap denominator: max_abs|min_abs|constant");
  ana->add_option("--gap-const", ana_opt.gap_denom_const, "constant-denominator value");

  // profile
  auto* pro = app.add_subcommand("profile", "build comparison curves from a measures csv");
  std::string pro_csv;
  std::string pro_out = ".";
  std::string pro_kind = "performance";
  std::string pro_name;
  bnba::ProfileOptions pro_opt;
  pro->add_option("--csv", pro_csv, "measures csv input")->required();
  pro->add_option("--out", pro_out, "output directory for the csv/svg pair");
  pro->add_option("--kind", pro_kind, "performance|cumulative|combined|speedup");
  pro->add_option("--measure", pro_opt.measure, "measure to compare");
  pro->add_option("--basis", pro_opt.basis, "speed-up basis: wallclock|pdi");
  pro->add_flag("--include-timeouts", pro_opt.include_timeouts,
                "keep instances with censored runs, at ratio infinity");
  pro->add_option("--ratio-shift", pro_opt.ratio_shift, "shift added to performance ratios");
  bool pro_log_x = false;
  pro->add_flag("--log-x", pro_log_x, "force a log2 x axis");
  pro->add_option("--name", pro_name, "basename override for the output files");

  // report
  auto* rep = app.add_subcommand("report", "print a summary of a measures csv");
  std::string rep_csv;
  rep->add_option("--csv", rep_csv, "measures csv input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (sim->parsed()) {
    try {
      bnba::ExperimentManifest manifest = bnba::load_manifest(sim_manifest);
      // output_dir was already resolved against the manifest's directory
      std::string out_dir = sim_out.empty() ? manifest.output_dir : sim_out;
      std::optional<std::int64_t> override;
      if (sim->count("--seed-override") > 0) override = sim_seed;
      bnba::SimulateOutcome outcome = bnba::cmd_simulate(manifest, out_dir, override);
      for (const std::string& s : outcome.skipped) std::cout << "skipped " << s << '\n';
      std::cout << "wrote " << outcome.trace_files.size() << " traces to "
                << (std::filesystem::path(out_dir) / "traces").string() << '\n';
      return 0;
    } catch (const std::exception& e) {
      return data_error(e);
    }
  }

  if (ana->parsed()) {
    try {
      if (!ana_measures.empty()) ana_opt.measures = split_list(ana_measures);
      for (const std::string& m : ana_opt.measures)
        if (!bnba::is_known_measure(m)) throw std::invalid_argument("unknown measure: " + m);
      ana_opt.gap_denom = denom_from_string(ana_denom);
      if (ana->count("--pdi-horizon") > 0) ana_opt.pdi_horizon = ana_horizon;
    } catch (const std::exception& e) {
      return usage_error(e);
    }
    try {
      bnba::AnalyzeOutcome outcome = bnba::cmd_analyze(ana_traces, ana_opt);
      for (const std::string& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
      std::string csv = bnba::measure_csv(outcome.rows);
      if (ana_csv.empty() || ana_csv == "-") {
        std::cout << csv;
      } else {
        write_file(ana_csv, csv);
        std::cout << "wrote " << outcome.rows.size() << " rows to " << ana_csv << '\n';
      }
      return 0;
    } catch (const std::exception& e) {
      return data_error(e);
    }
  }

  if (pro->parsed()) {
    try {
      pro_opt.kind = bnba::profile_kind_from_string(pro_kind);
      if (pro_opt.basis != "wallclock" && pro_opt.basis != "pdi")
        throw std::invalid_argument("unknown speed-up basis: " + pro_opt.basis);
      if (!bnba::is_known_measure(pro_opt.measure))
        throw std::invalid_argument("unknown measure: " + pro_opt.measure);
      if (pro_log_x) pro_opt.log_x = true;
    } catch (const std::exception& e) {
      return usage_error(e);
    }
    try {
      std::vector<bnba::MeasureRow> rows = bnba::parse_measure_csv(read_file(pro_csv));
      bnba::ProfileOutcome outcome = bnba::cmd_profile(rows, pro_opt);
      std::string base = pro_name.empty() ? outcome.basename : pro_name;
      std::filesystem::create_directories(pro_out);
      std::filesystem::path csv_path = std::filesystem::path(pro_out) / (base + ".csv");
      std::filesystem::path svg_path = std::filesystem::path(pro_out) / (base + ".svg");
      write_file(csv_path.string(), outcome.csv);
      write_file(svg_path.string(), outcome.svg);
      if (outcome.dropped_instances > 0)
        std::cerr << "note: dropped " << outcome.dropped_instances
                  << " instances with censored runs (use --include-timeouts to keep them)\n";
      std::cout << "wrote " << csv_path.string() << '\n';
      std::cout << "wrote " << svg_path.string() << '\n';
      return 0;
    } catch (const std::exception& e) {
      return data_error(e);
    }
  }

  if (rep->parsed()) {
    try {
      std::vector<bnba::MeasureRow> rows = bnba::parse_measure_csv(read_file(rep_csv));
      std::cout << bnba::cmd_report(rows, {use_color()});
      return 0;
    } catch (const std::exception& e) {
      return data_error(e);
    }
  }

  return 1;
}
