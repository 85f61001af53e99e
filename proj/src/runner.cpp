#include "willmore/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "willmore/inequality_constants.hpp"
#include "willmore/numerics.hpp"
#include "willmore/model_manifold.hpp"
#include "willmore/ode_comparison.hpp"
#include "willmore/profiles.hpp"
#include "willmore/tube_geometry.hpp"
#include "willmore/willmore_verifier.hpp"

namespace willmore {

namespace {

using nlohmann::json;

double jnum(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number())
    throw std::invalid_argument("config key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

int jint(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer())
    throw std::invalid_argument("config key '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

DecayProfile parse_profile(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("profile object needs a 'family' key");
  const std::string family = j.at("family").get<std::string>();
  if (family == "zero") return DecayProfile::zero();
  if (family == "exponential" || family == "exp")
    return DecayProfile::exponential(jnum(j, "a", 1.0), jnum(j, "c", 1.0));
  if (family == "power")
    return DecayProfile::power(jnum(j, "a", 1.0), jnum(j, "s", 2.0));
  if (family == "smooth_bump" || family == "bump")
    return DecayProfile::smooth_bump(jnum(j, "a", 0.1), jnum(j, "t_lo", 1.0),
                                     jnum(j, "t_hi", 2.0));
  throw std::invalid_argument("unknown profile family '" + family + "'");
}

RotSymManifold parse_manifold(const json& cfg, int n, double r_max,
                              double step) {
  if (!cfg.contains("warp") || cfg.at("warp") == json("hyperbolic"))
    return RotSymManifold::hyperbolic(n, r_max, step);
  const json& w = cfg.at("warp");
  if (w.is_object() && w.contains("psi1"))
    return RotSymManifold::psi1_generated(n, parse_profile(w.at("psi1")),
                                          r_max, step);
  throw std::invalid_argument(
      "config key 'warp' must be \"hyperbolic\" or {\"psi1\": <profile>}");
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.') ? c : '_';
  return out;
}

constexpr const char* kCsvVersion = "# willmore csv v1";

struct CheckRow {
  std::string profile;
  std::string check;
  std::string kind;  // "min_slack" (value >= threshold) | "max_resid" (<=)
  double value;
  double threshold;

  bool pass() const {
    return kind == "min_slack" ? value >= threshold : value <= threshold;
  }
};

std::string check_csv(const std::string& command,
                      const std::vector<CheckRow>& rows) {
  std::string out = std::string(kCsvVersion) + " " + command + "\n" +
                    "profile,check,kind,value,threshold,pass\n";
  for (const auto& r : rows)
    out += r.profile + "," + r.check + "," + r.kind + "," + fmt17(r.value) +
           "," + fmt17(r.threshold) + "," + (r.pass() ? "1" : "0") + "\n";
  return out;
}

std::string thm_csv_header() {
  return std::string(kCsvVersion) +
         " theorem\n"
         "theorem,n,p,r0,profile,lhs,rhs,margin,rv,rv_spread,b,rho_norm,"
         "C_total,pass\n";
}

std::string thm_csv_row(const WillmoreReport& r) {
  std::ostringstream os;
  os << r.theorem << "," << r.n << "," << fmt17(r.p) << "," << fmt17(r.r0)
     << "," << r.profile_id << "," << fmt17(r.lhs) << "," << fmt17(r.rhs)
     << "," << fmt17(r.margin) << "," << fmt17(r.rv) << ","
     << fmt17(r.rv_spread) << "," << fmt17(r.b) << "," << fmt17(r.rho_norm)
     << "," << fmt17(r.c_total) << "," << (r.pass ? "1" : "0") << "\n";
  return os.str();
}

std::vector<DecayProfile> parse_profile_list(const json& cfg) {
  std::vector<DecayProfile> out;
  if (cfg.contains("profiles")) {
    for (const auto& p : cfg.at("profiles")) out.push_back(parse_profile(p));
  } else if (cfg.contains("profile")) {
    out.push_back(parse_profile(cfg.at("profile")));
  } else {
    out = {DecayProfile::zero(), DecayProfile::exponential(1.0, 1.0),
           DecayProfile::exponential(0.5, 2.0), DecayProfile::power(1.0, 2.0)};
  }
  return out;
}

void emit_tube_plots(RunResult& res, const std::string& command,
                     const GeodesicBallDomain& domain, double step) {
  const double t_max =
      std::min(10.0, domain.manifold().r_max() - domain.r0() - step);
  const auto ev = evolve_tube(domain, t_max, step);
  res.files.emplace_back("plot_" + command + "_m.dat",
                         format_plot_series("mean_curvature_m", ev.grid, ev.m));
  res.files.emplace_back(
      "plot_" + command + "_logJ.dat",
      format_plot_series("log_jacobian", ev.grid, ev.logJ));
}

RunResult run_lemma21(const json& cfg) {
  RunResult res;
  const double t_max = jnum(cfg, "t_max", 20.0);
  const double step = jnum(cfg, "step", 1e-3);
  const bool plot = cfg.value("plot", false);
  std::vector<CheckRow> rows;
  for (const auto& prof : parse_profile_list(cfg)) {
    if (!prof.monotone())
      throw std::invalid_argument("lemma21 needs non-increasing profiles");
    const PsiPair pair(lambda_fn(prof), t_max, step);
    const auto rep = check_lemma21(pair, lambda_fn(prof), prof.total_mass());
    const std::string id = prof.id();
    rows.push_back({id, "sinh_lower", "min_slack", rep.sinh_lower, -1e-9});
    rows.push_back({id, "int_upper", "min_slack", rep.int_upper, -1e-9});
    rows.push_back({id, "cosh_lower", "min_slack", rep.cosh_lower, -1e-9});
    rows.push_back({id, "exp_upper", "min_slack", rep.exp_upper, -1e-9});
    rows.push_back(
        {id, "ratio_monotone", "min_slack", rep.ratio_monotone, -1e-9});
    rows.push_back(
        {id, "cap_pointwise", "min_slack", rep.cap_pointwise, -1e-9});
    rows.push_back({id, "cap_total", "min_slack", rep.cap_total, -1e-9});
    rows.push_back(
        {id, "wronskian_drift", "max_resid", rep.wronskian_drift, 1e-8});
    if (plot) {
      std::vector<double> t, ratio;
      for (std::size_t i = 1; i < pair.size(); ++i) {
        t.push_back(pair.grid()[i]);
        ratio.push_back(to_double(pair.psi1()[i]) / std::sinh(pair.grid()[i]));
      }
      res.files.emplace_back("plot_lemma21_" + sanitize(id) + ".dat",
                             format_plot_series("psi1_over_sinh", t, ratio));
    }
  }
  res.files.emplace_back("lemma21.csv", check_csv("lemma21", rows));
  for (const auto& r : rows)
    if (!r.pass()) res.exit_code = 2;
  return res;
}

RunResult run_lemma22(const json& cfg) {
  RunResult res;
  const double t_max = jnum(cfg, "t_max", 20.0);
  const double step = jnum(cfg, "step", 1e-3);
  const bool plot = cfg.value("plot", false);
  std::vector<CheckRow> rows;
  for (const auto& prof : parse_profile_list(cfg)) {
    if (!prof.monotone())
      throw std::invalid_argument("lemma22 needs non-increasing profiles");
    const PsiPair pair(lambda_fn(prof), t_max, step);
    const auto rep = check_lemma22(pair, lambda_fn(prof));
    const std::string id = prof.id();
    rows.push_back({id, "bound", "min_slack", rep.bound, -1e-9});
    rows.push_back(
        {id, "ratio_monotone", "min_slack", rep.ratio_monotone, -1e-9});
    rows.push_back({id, "deriv_identity_signed", "max_resid",
                    rep.deriv_identity_signed_max, 1e-6});
    rows.push_back({id, "deriv_identity_abs", "max_resid",
                    rep.deriv_identity_abs_max, 1e-6});
    rows.push_back({id, "limit_bound", "min_slack", rep.limit_bound, -1e-9});
    rows.push_back(
        {id, "wronskian_drift", "max_resid", rep.wronskian_drift, 1e-8});
    if (plot) {
      std::vector<double> t, ratio;
      for (std::size_t i = 1; i < pair.size(); ++i) {
        t.push_back(pair.grid()[i]);
        ratio.push_back(pair.ratio21(i));
      }
      res.files.emplace_back("plot_lemma22_" + sanitize(id) + ".dat",
                             format_plot_series("psi2_over_psi1", t, ratio));
    }
  }
  res.files.emplace_back("lemma22.csv", check_csv("lemma22", rows));
  for (const auto& r : rows)
    if (!r.pass()) res.exit_code = 2;
  return res;
}

RunResult run_lemma31(const json& cfg) {
  RunResult res;
  const double p = jnum(cfg, "p", 2.0);
  const double q = jnum(cfg, "q", 3.0);
  std::vector<double> eps_grid{1.0, 0.1, 0.01, 1e-4, 1e-6};
  if (cfg.contains("eps_grid"))
    eps_grid = cfg.at("eps_grid").get<std::vector<double>>();
  std::vector<double> b_grid;
  if (cfg.contains("b_grid") && cfg.at("b_grid").is_array())
    b_grid = cfg.at("b_grid").get<std::vector<double>>();
  else
    b_grid = log_grid(1e-8, 1e8, 60);

  std::string csv = std::string(kCsvVersion) +
                    " lemma31\n"
                    "p,q,eps,b_tilde,C,C_numeric,sup_rel_diff,min_margin,pass\n";
  for (double eps : eps_grid) {
    const Lemma31Params params(p, q, eps);  // throws on bad hypotheses
    const double bt = critical_point(params);
    const double C = constant_C(params);
    const double Cn = numeric_sup_F(params);
    const double rel = std::fabs(C - Cn) / std::max(C, 1e-300);
    const double margin = verify_pointwise(params, b_grid);
    const bool pass = margin >= -1e-9 && rel <= 1e-8;
    if (!pass) res.exit_code = 2;
    csv += fmt17(p) + "," + fmt17(q) + "," + fmt17(eps) + "," + fmt17(bt) +
           "," + fmt17(C) + "," + fmt17(Cn) + "," + fmt17(rel) + "," +
           fmt17(margin) + "," + (pass ? "1" : "0") + "\n";
  }
  res.files.emplace_back("lemma31.csv", csv);
  return res;
}

RunResult run_riccati_blowup(const json& cfg) {
  RunResult res;
  const int n = jint(cfg, "n", 2);
  const double t_max = jnum(cfg, "t_max", 5.0);
  const double step = jnum(cfg, "step", 1e-3);
  const bool plot = cfg.value("plot", false);

  std::vector<std::pair<double, double>> cases;  // (two_b, H0_over_n)
  if (cfg.contains("cases")) {
    for (const auto& c : cfg.at("cases"))
      cases.emplace_back(jnum(c, "two_b", 0.0), jnum(c, "H0_over_n", -2.0));
  } else if (cfg.contains("two_b") || cfg.contains("H0_over_n")) {
    cases.emplace_back(jnum(cfg, "two_b", 0.0), jnum(cfg, "H0_over_n", -2.0));
  } else {
    cases = {{0.0, -1.5}, {0.0, -3.0}, {2.0, -3.5}, {2.0, -5.0}};
  }

  std::string csv = std::string(kCsvVersion) +
                    " riccati-blowup\n"
                    "n,two_b,H0_over_n,blow_up,t0,pass\n";
  int idx = 0;
  for (const auto& [two_b, h0n] : cases) {
    // The decay seen along the geodesic carries total mass 2b; an
    // exponential with that mass concentrates it where the focal argument
    // needs it.
    auto Lambda = [two_b](double t) { return two_b * std::exp(-t); };
    const double t0 = focal_bound_check(two_b, h0n);
    const auto ev = evolve_riccati_free(Lambda, h0n * static_cast<double>(n),
                                        n, t_max, step);
    const bool pass = ev.blow_up.has_value() && *ev.blow_up <= t0 + 1e-6;
    if (!pass) res.exit_code = 2;
    csv += std::to_string(n) + "," + fmt17(two_b) + "," + fmt17(h0n) + "," +
           (ev.blow_up ? fmt17(*ev.blow_up) : std::string("inf")) + "," +
           fmt17(t0) + "," + (pass ? "1" : "0") + "\n";
    if (plot) {
      res.files.emplace_back(
          "plot_riccati_" + std::to_string(idx) + "_m.dat",
          format_plot_series("riccati_m", ev.grid, ev.m));
    }
    ++idx;
  }
  res.files.emplace_back("riccati-blowup.csv", csv);
  return res;
}

WillmoreReport run_one_thm(const json& cfg, const std::string& theorem, int n,
                           double r0, double tol) {
  const double step = jnum(cfg, "step", 1e-3);
  const double r_eval = jnum(cfg, "r_eval", 40.0);
  if (theorem == "thm11") {
    const double r_max = jnum(cfg, "r_max", r0 + r_eval + 1.0);
    GeodesicBallDomain domain(parse_manifold(cfg, n, r_max, step), r0);
    DecayProfile prof = cfg.contains("profile")
                            ? parse_profile(cfg.at("profile"))
                            : DecayProfile::zero();
    return verify_thm11(domain, prof, r_eval, tol);
  }
  if (theorem == "thm12") {
    const double r_cut = jnum(cfg, "r_cut", 20.0);
    const double p = jnum(cfg, "p", 2.0);
    const double r_max =
        jnum(cfg, "r_max", std::max(r0 + r_eval + 1.0, r_cut + 1.0));
    GeodesicBallDomain domain(parse_manifold(cfg, n, r_max, step), r0);
    return verify_thm12(domain, p, r_eval, r_cut, tol);
  }
  throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

RunResult run_thm(const json& cfg, const std::string& theorem, double tol) {
  RunResult res;
  const int n = jint(cfg, "n", 2);
  const double r0 = jnum(cfg, "r0", 1.0);
  const auto rep = run_one_thm(cfg, theorem, n, r0, tol);
  res.files.emplace_back(theorem + ".csv", thm_csv_header() + thm_csv_row(rep));
  if (!rep.pass) res.exit_code = 2;
  if (cfg.value("plot", false)) {
    const double step = jnum(cfg, "step", 1e-3);
    const double r_eval = jnum(cfg, "r_eval", 40.0);
    const double r_max = jnum(cfg, "r_max", r0 + r_eval + 1.0);
    GeodesicBallDomain domain(parse_manifold(cfg, n, r_max, step), r0);
    emit_tube_plots(res, theorem, domain, step);
  }
  return res;
}

RunResult run_sweep(const json& cfg, double tol) {
  RunResult res;
  const std::string theorem = cfg.value("theorem", std::string("thm11"));
  std::vector<int> ns{1, 2, 3};
  std::vector<double> r0s{0.5, 1.0, 2.0};
  if (cfg.contains("sweep")) {
    const json& s = cfg.at("sweep");
    if (s.contains("n")) ns = s.at("n").get<std::vector<int>>();
    if (s.contains("r0")) r0s = s.at("r0").get<std::vector<double>>();
  }

  struct Slot {
    std::string row;
    std::string error;
    bool pass = true;
  };
  const std::size_t total = ns.size() * r0s.size();
  std::vector<Slot> slots(total);

  // Runs are independent; fan out and buffer rows in config order so the CSV
  // is deterministic regardless of the thread count.
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(total); ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    const int n = ns[i / r0s.size()];
    const double r0 = r0s[i % r0s.size()];
    try {
      const auto rep = run_one_thm(cfg, theorem, n, r0, tol);
      slots[i].row = thm_csv_row(rep);
      slots[i].pass = rep.pass;
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  }

  std::string csv = thm_csv_header();
  for (const auto& s : slots) {
    if (!s.error.empty()) {
      res.exit_code = 1;
      res.error = s.error;
      return res;
    }
    csv += s.row;
    if (!s.pass) res.exit_code = 2;
  }
  res.files.emplace_back("sweep.csv", csv);
  return res;
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_plot_series(const std::string& name,
                               const std::vector<double>& x,
                               const std::vector<double>& y) {
  require(!x.empty(), "plot series '" + name + "' is empty");
  require(x.size() == y.size(),
          "plot series '" + name + "' has mismatched column lengths");
  std::string out = "# " + name + "\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    out += fmt17(x[i]) + " " + fmt17(y[i]) + "\n";
  return out;
}

RunResult run_command(const std::string& command, const std::string& config_text,
                      std::optional<double> tol_override) {
  RunResult res;
  try {
    json cfg = config_text.empty() ? json::object() : json::parse(config_text);
    if (!cfg.is_object())
      throw std::invalid_argument("config must be a JSON object");
    if (cfg.contains("command") &&
        cfg.at("command").get<std::string>() != command)
      throw std::invalid_argument("config 'command' key (" +
                                  cfg.at("command").get<std::string>() +
                                  ") disagrees with the invoked command (" +
                                  command + ")");
    double tol = jnum(cfg, "tol", 1e-6);
    if (tol_override) tol = *tol_override;
    require(tol > 0.0, "tol must be positive");

    if (command == "lemma21") return run_lemma21(cfg);
    if (command == "lemma22") return run_lemma22(cfg);
    if (command == "lemma31") return run_lemma31(cfg);
    if (command == "riccati-blowup") return run_riccati_blowup(cfg);
    if (command == "thm11" || command == "thm12")
      return run_thm(cfg, command, tol);
    if (command == "sweep") return run_sweep(cfg, tol);
    throw std::invalid_argument("unknown command '" + command + "'");
  } catch (const json::parse_error& e) {
    res.exit_code = 1;
    res.error = std::string("config parse error: ") + e.what();
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.error = e.what();
  }
  return res;
}

}  // namespace willmore
