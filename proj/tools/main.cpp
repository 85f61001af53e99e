#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "willmore/runner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

int write_outputs(const willmore::RunResult& res, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create output directory '" << out_dir
              << "': " << ec.message() << "\n";
    return 1;
  }
  for (const auto& [name, content] : res.files) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << content)) {
      std::cerr << "cannot write '" << path.string() << "'\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification runner for the comparison-geometry toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<double> tol;

  std::optional<double> p_flag, q_flag;
  std::vector<double> eps_grid_flag, b_grid_flag;

  const char* commands[] = {"lemma21", "lemma22",      "lemma31", "thm11",
                            "thm12",   "riccati-blowup", "sweep"};
  for (const char* name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_dir, "output directory for CSV/plot files");
    sub->add_option("--tol", tol, "relative pass tolerance override");
    if (std::string(name) == "lemma31") {
      sub->add_option("--p", p_flag, "exponent p > 1");
      sub->add_option("--q", q_flag, "exponent q > p - 1");
      sub->add_option("--eps-grid", eps_grid_flag, "eps values to sweep");
      sub->add_option("--b-grid", b_grid_flag, "b values for the pointwise check");
    }
  }

  CLI11_PARSE(app, argc, argv);

  // TOOL_SEED is accepted and ignored: nothing here is randomized.
  // TOOL_THREADS caps sweep/kernel parallelism.
#ifdef _OPENMP
  if (const char* threads = std::getenv("TOOL_THREADS")) {
    const int cap = std::atoi(threads);
    if (cap >= 1) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
  }
#endif

  std::string config_text;
  if (!config_path.empty()) {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot read config '" << config_path << "'\n";
      return 1;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    config_text = ss.str();
  }

  const std::string command = app.get_subcommands().front()->get_name();

  // lemma31 flags overlay the config document
  if (command == "lemma31" &&
      (p_flag || q_flag || !eps_grid_flag.empty() || !b_grid_flag.empty())) {
    try {
      nlohmann::json cfg = config_text.empty()
                               ? nlohmann::json::object()
                               : nlohmann::json::parse(config_text);
      if (p_flag) cfg["p"] = *p_flag;
      if (q_flag) cfg["q"] = *q_flag;
      if (!eps_grid_flag.empty()) cfg["eps_grid"] = eps_grid_flag;
      if (!b_grid_flag.empty()) cfg["b_grid"] = b_grid_flag;
      config_text = cfg.dump();
    } catch (const nlohmann::json::parse_error&) {
      // leave the malformed text for the runner's line-numbered diagnostics
    }
  }

  const auto res = willmore::run_command(command, config_text, tol);
  if (res.exit_code == 1) {
    std::cerr << "error: " << res.error << "\n";
    return 1;
  }
  if (const int rc = write_outputs(res, out_dir); rc != 0) return rc;
  for (const auto& [name, content] : res.files)
    if (name.ends_with(".csv")) std::cout << content;
  return res.exit_code;
}
