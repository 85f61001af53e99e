#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace willmore {

// Outcome of one CLI run: the files it wants written (relative name ->
// content) and the process exit code. Kept in-memory so the determinism
// checks can compare whole runs byte for byte without touching the
// filesystem.
//
// Exit codes: 0 all checks passed, 1 configuration/precondition error,
// 2 some inequality margin fell below tolerance.
struct RunResult {
  int exit_code = 0;
  std::vector<std::pair<std::string, std::string>> files;
  std::string error;  // set when exit_code == 1
};

// Parse the JSON config text and execute `command` (one of lemma21, lemma22,
// lemma31, riccati-blowup, thm11, thm12, sweep). A "command" key in the
// config must agree with the argument when present. tol_override replaces the
// config's "tol" (relative pass tolerance for the theorem margins).
RunResult run_command(const std::string& command, const std::string& config_text,
                      std::optional<double> tol_override = {});

// Two-column plot file: one header line naming the quantity, then
// "x y" rows at 17 significant digits. Empty or length-mismatched series are
// invalid.
std::string format_plot_series(const std::string& name,
                               const std::vector<double>& x,
                               const std::vector<double>& y);

// "%.17g" rendering used for every CSV/plot number.
std::string fmt17(double v);

}  // namespace willmore
