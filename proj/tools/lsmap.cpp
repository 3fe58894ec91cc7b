// lsmap: maps lattice-surgery circuits onto surface-code qubit plane
// architectures. Subcommands: map, verify, compare.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lsmap/pipeline.hpp"
#include "lsmap/steane.hpp"
#include "lsmap/surgery.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("LSMAP_LOG");
  return env ? std::atoi(env) : 0;
}

void logi(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[lsmap] " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct ArchOptions {
  std::string arch = "t";
  int rows = 3;
  int cols = 3;
  int d = 3;
  std::string sched = "alap";
  std::string commute = "on";
  std::string solver = "exact";
  std::string place = "smart";
  int window = 10;
  std::string emit = "logical";

  void attach(CLI::App* app) {
    app->add_option("--arch", arch, "architecture: c|t")
        ->check(CLI::IsMember({"c", "t"}));
    app->add_option("--rows", rows, "data grid rows");
    app->add_option("--cols", cols, "data grid columns");
    app->add_option("-d,--distance", d, "code distance (odd, >= 3)");
    app->add_option("--sched", sched)->check(CLI::IsMember({"asap", "alap"}));
    app->add_option("--commute", commute)->check(CLI::IsMember({"on", "off"}));
    app->add_option("--solver", solver)
        ->check(CLI::IsMember({"exact", "list"}));
    app->add_option("--place", place)->check(CLI::IsMember({"smart", "naive"}));
    app->add_option("--window", window, "routing buffer length");
    app->add_option("--emit", emit)->check(CLI::IsMember({"logical", "physical"}));
  }

  lsmap::RunConfig config() const {
    lsmap::RunConfig cfg;
    cfg.arch = arch == "c" ? lsmap::ArchKind::Checkerboard
                           : lsmap::ArchKind::TileBased;
    cfg.rows = rows;
    cfg.cols = cols;
    cfg.d = d;
    cfg.sched = sched == "alap" ? lsmap::SchedDirection::Alap
                                : lsmap::SchedDirection::Asap;
    cfg.commute = commute == "on";
    cfg.solver = solver == "exact" ? lsmap::SchedSolver::Exact
                                   : lsmap::SchedSolver::List;
    cfg.smart_place = place == "smart";
    cfg.window = window;
    cfg.emit = emit == "physical" ? lsmap::EmitLevel::Physical
                                  : lsmap::EmitLevel::Logical;
    return cfg;
  }
};

int cmd_map(const ArchOptions& opts, const std::string& input,
            const std::string& output, const std::string& report_path,
            bool with_runtime) {
  lsmap::Circuit circuit = lsmap::parse_qasm(read_file(input));
  lsmap::RunConfig cfg = opts.config();
  logi("mapping " + input + " onto " + lsmap::arch_name(cfg.arch));
  lsmap::PipelineResult res = lsmap::run_pipeline(cfg, circuit);

  std::string routed = lsmap::emit_qasm(res.routed.circuit);
  if (output.empty())
    std::cout << routed;
  else
    write_file(output, routed);
  if (res.physical) {
    std::string phys = lsmap::emit_qasm(*res.physical);
    if (output.empty())
      std::cout << phys;
    else
      write_file(output + ".physical", phys);
  }
  std::string report = lsmap::report_json(cfg, res.report, with_runtime);
  if (report_path.empty())
    std::cerr << report;
  else
    write_file(report_path, report);
  logi("swaps " + std::to_string(res.report.n_swaps) + ", latency " +
       std::to_string(res.report.routed_latency));
  return 0;
}

int cmd_verify() {
  auto table = lsmap::run_surgery_suite();
  size_t name_w = 4;
  for (const auto& e : table) name_w = std::max(name_w, e.name.size());
  bool all_ok = true;
  std::cout.setf(std::ios::left);
  std::cout << "construction";
  std::cout << std::string(name_w - 9, ' ') << "branches  mutants  result\n";
  for (const auto& e : table) {
    std::cout << e.name << std::string(name_w + 3 - e.name.size(), ' ');
    std::string b = std::to_string(e.branches);
    std::cout << b << std::string(10 - b.size(), ' ');
    std::string m = std::to_string(e.mutants_caught) + "/" +
                    std::to_string(e.mutants);
    std::cout << m << std::string(9 - m.size(), ' ');
    std::cout << (e.passed ? "pass" : "FAIL");
    if (!e.detail.empty()) std::cout << "  (" << e.detail << ")";
    std::cout << "\n";
    all_ok = all_ok && e.passed;
  }
  return all_ok ? 0 : 1;
}

int cmd_compare(const ArchOptions& opts, const std::string& mode,
                const std::vector<std::string>& inputs,
                const std::string& csv_path, const std::string& json_path) {
  std::vector<std::pair<std::string, lsmap::Circuit>> benchmarks;
  for (const auto& path : inputs) {
    if (path == "steane" || path == "7-enc")
      benchmarks.emplace_back("7-enc", lsmap::steane_encoder());
    else
      benchmarks.emplace_back(path, lsmap::parse_qasm(read_file(path)));
  }
  lsmap::CompareMode m = mode == "commutation" ? lsmap::CompareMode::Commutation
                         : mode == "arch"      ? lsmap::CompareMode::Arch
                                               : lsmap::CompareMode::Placement;
  lsmap::ComparisonTable table =
      lsmap::compare_experiment(m, benchmarks, opts.config());
  std::cout << table.to_text();
  if (!csv_path.empty()) write_file(csv_path, table.to_csv());
  if (!json_path.empty()) write_file(json_path, table.to_json());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapper for lattice surgery-based quantum circuits"};
  app.require_subcommand(1);

  // map
  auto* map_cmd = app.add_subcommand("map", "map a circuit onto a fabric");
  ArchOptions map_opts;
  map_opts.attach(map_cmd);
  std::string input;
  std::string output;
  std::string report_path;
  bool with_runtime = false;
  map_cmd->add_option("input", input, "input QASM file")->required();
  map_cmd->add_option("-o,--output", output, "routed QASM output");
  map_cmd->add_option("--report", report_path, "metrics report (JSON)");
  map_cmd->add_flag("--timings", with_runtime,
                    "include wall-clock time in the report");

  // verify
  app.add_subcommand("verify",
                     "check the lattice surgery operator algebra");

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "experiment grids");
  ArchOptions cmp_opts;
  cmp_opts.attach(cmp_cmd);
  std::string mode = "commutation";
  std::vector<std::string> cmp_inputs;
  std::string csv_path;
  std::string json_path;
  cmp_cmd->add_option("--mode", mode, "commutation|arch|placement")
      ->check(CLI::IsMember({"commutation", "arch", "placement"}));
  cmp_cmd->add_option("inputs", cmp_inputs,
                      "QASM files ('steane' for the shipped 7-enc)")
      ->required();
  cmp_cmd->add_option("--csv", csv_path, "write the table as CSV");
  cmp_cmd->add_option("--json", json_path, "write the table as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("map"))
      return cmd_map(map_opts, input, output, report_path, with_runtime);
    if (app.got_subcommand("verify")) return cmd_verify();
    if (app.got_subcommand("compare"))
      return cmd_compare(cmp_opts, mode, cmp_inputs, csv_path, json_path);
  } catch (const std::exception& e) {
    std::cerr << "lsmap: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
