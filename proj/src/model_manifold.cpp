#include "willmore/model_manifold.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "willmore/numerics.hpp"

namespace willmore {

struct RotSymManifold::Data {
  int n = 2;
  bool hyperbolic = true;
  DecayProfile profile = DecayProfile::zero();
  double r_max = 0.0;
  double h = 0.0;
  // Solve grid (psi1_generated only): values at r_i = i h.
  std::vector<double> f, df, q;

  long steps() const { return static_cast<long>(f.size()) - 1; }

  // Interval containing r, for Hermite interpolation.
  struct Cell {
    std::size_t k;
    double a;
  };
  Cell locate(double r) const {
    long k = static_cast<long>(r / h);
    if (k >= steps()) k = steps() - 1;
    if (k < 0) k = 0;
    return {static_cast<std::size_t>(k), static_cast<double>(k) * h};
  }
};

RotSymManifold::RotSymManifold(std::shared_ptr<const Data> data)
    : data_(std::move(data)) {}

RotSymManifold RotSymManifold::hyperbolic(int n, double r_max, double step) {
  require(n >= 1, "manifold needs boundary dimension n >= 1");
  require(r_max > 0.0 && r_max <= 680.0,
          "r_max must lie in (0, 680] (raw e^r representability)");
  require(step > 0.0 && step <= 1e-2, "step must lie in (0, 1e-2]");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->hyperbolic = true;
  d->r_max = r_max;
  d->h = step;
  return RotSymManifold(std::move(d));
}

RotSymManifold RotSymManifold::psi1_generated(int n,
                                              const DecayProfile& profile,
                                              double r_max, double step) {
  require(n >= 1, "manifold needs boundary dimension n >= 1");
  require(r_max > 0.0 && r_max <= 680.0,
          "r_max must lie in (0, 680] (raw e^r representability)");
  require(step > 0.0 && step <= 1e-2, "step must lie in (0, 1e-2]");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->hyperbolic = false;
  d->profile = profile;

  const long steps = grid_steps(r_max, step);
  d->h = r_max / static_cast<double>(steps);
  d->r_max = r_max;
  d->f.reserve(steps + 1);
  d->df.reserve(steps + 1);
  d->q.reserve(steps + 1);

  auto rhs = [&profile](double r, const std::array<double, 3>& y,
                        std::array<double, 3>& dy) {
    const double lam = profile(r);
    dy[0] = y[1];
    dy[1] = (1.0 + lam) * y[0];
    dy[2] = 2.0 * lam * y[0] * y[1];
  };
  std::array<double, 3> y0{0.0, 1.0, 0.0};
  rk4_integrate<double, 3>(rhs, y0, 0.0, d->h, steps,
                           [&d](long, double, const std::array<double, 3>& y) {
                             d->f.push_back(y[0]);
                             d->df.push_back(y[1]);
                             d->q.push_back(y[2]);
                           });

  for (std::size_t i = 1; i < d->f.size(); ++i)
    if (!(d->f[i] > 0.0) || !(d->df[i] > 0.0))
      throw std::domain_error(
          "warp solve lost positivity of f or f' -- manifold not admissible");

  return RotSymManifold(std::move(d));
}

int RotSymManifold::n() const { return data_->n; }
double RotSymManifold::r_max() const { return data_->r_max; }
double RotSymManifold::step() const { return data_->h; }
bool RotSymManifold::is_hyperbolic() const { return data_->hyperbolic; }
const DecayProfile& RotSymManifold::profile() const { return data_->profile; }

double RotSymManifold::f(double r) const {
  require_range(r >= 0.0 && r <= data_->r_max + 1e-9,
                "r outside the warp solve range");
  if (data_->hyperbolic) return std::sinh(r);
  const auto c = data_->locate(r);
  return hermite_value(r, c.a, data_->h, data_->f[c.k], data_->f[c.k + 1],
                       data_->df[c.k], data_->df[c.k + 1]);
}

double RotSymManifold::df(double r) const {
  require_range(r >= 0.0 && r <= data_->r_max + 1e-9,
                "r outside the warp solve range");
  if (data_->hyperbolic) return std::cosh(r);
  const auto c = data_->locate(r);
  // f'' = (1 + lambda) f supplies the derivative data for f'.
  const double dd0 = (1.0 + data_->profile(c.a)) * data_->f[c.k];
  const double dd1 = (1.0 + data_->profile(c.a + data_->h)) * data_->f[c.k + 1];
  return hermite_value(r, c.a, data_->h, data_->df[c.k], data_->df[c.k + 1],
                       dd0, dd1);
}

double RotSymManifold::log_f(double r) const { return std::log(f(r)); }

double RotSymManifold::lambda_at(double r) const {
  return data_->hyperbolic ? 0.0 : data_->profile(r);
}

double RotSymManifold::q_at(double r) const {
  require_range(r >= 0.0 && r <= data_->r_max + 1e-9,
                "r outside the warp solve range");
  if (data_->hyperbolic) return 0.0;
  const auto c = data_->locate(r);
  auto qdot = [this](std::size_t i, double rr) {
    return 2.0 * data_->profile(rr) * data_->f[i] * data_->df[i];
  };
  return hermite_value(r, c.a, data_->h, data_->q[c.k], data_->q[c.k + 1],
                       qdot(c.k, c.a), qdot(c.k + 1, c.a + data_->h));
}

std::string RotSymManifold::warp_id() const {
  return data_->hyperbolic ? "hyperbolic" : "psi1(" + data_->profile.id() + ")";
}

GeodesicBallDomain::GeodesicBallDomain(RotSymManifold manifold, double r0)
    : manifold_(std::move(manifold)), r0_(r0) {
  require(r0 > 0.0 && r0 < manifold_.r_max(),
          "ball radius r0 must lie in (0, r_max)");
}

double sphere_volume_constant(int n) {
  if (n < 1) throw std::domain_error("sphere_volume_constant needs n >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

RicciPair ricci_extremes(const RotSymManifold& m, double r) {
  require_range(r > 0.0 && r <= m.r_max() + 1e-9, "r outside the solve grid");
  const double lam = m.lambda_at(r);
  const int n = m.n();
  const double fr = m.f(r);
  // 1 - f'^2 = -(Q + f^2) removes the large-r cancellation.
  const double tang =
      -static_cast<double>(n) - lam -
      static_cast<double>(n - 1) * m.q_at(r) / (fr * fr);
  return {-static_cast<double>(n) * (1.0 + lam), tang};
}

double rho_at(const RotSymManifold& m, double r) {
  require_range(r >= 0.0 && r <= m.r_max() + 1e-9, "r outside the solve grid");
  const int n = m.n();
  if (r == 0.0) return static_cast<double>(n) * m.lambda_at(0.0);
  const auto ric = ricci_extremes(m, r);
  const double deficit = -static_cast<double>(n) - std::min(ric.radial, ric.tangential);
  return std::max(0.0, deficit);
}

CurvatureBoundReport verify_curvature_bound(const RotSymManifold& m,
                                            const DecayProfile& profile) {
  const int n = m.n();
  const double h = m.step();
  const long steps = grid_steps(m.r_max(), h);
  CurvatureBoundReport rep{};
  rep.min_margin = rep.radial = rep.tangential =
      std::numeric_limits<double>::infinity();
  rep.argmin_r = 0.0;
  for (long i = 1; i <= steps; ++i) {
    const double r = std::min(static_cast<double>(i) * h, m.r_max());
    const double cap = static_cast<double>(n) * profile(r);
    const auto ric = ricci_extremes(m, r);
    const double rad = ric.radial + static_cast<double>(n) + cap;
    const double tan = ric.tangential + static_cast<double>(n) + cap;
    rep.radial = std::min(rep.radial, rad);
    rep.tangential = std::min(rep.tangential, tan);
    if (std::min(rad, tan) < rep.min_margin) {
      rep.min_margin = std::min(rad, tan);
      rep.argmin_r = r;
    }
  }
  return rep;
}

double lp_norm_rho(const RotSymManifold& m, double p, double r_cut) {
  require(p > 0.5 * (m.n() + 1),
          "lp_norm_rho requires p > (n+1)/2");
  require_range(r_cut > 0.0 && r_cut <= m.r_max() + 1e-9,
                "r_cut outside the solve range");
  const int n = m.n();
  auto integrand = [&](double r) {
    const double rho = rho_at(m, r);
    if (rho == 0.0) return 0.0;
    return std::exp(p * std::log(rho) + static_cast<double>(n) * m.log_f(r));
  };
  const long intervals = grid_steps(r_cut, m.step());
  const double hq = r_cut / static_cast<double>(intervals);
  const double integral =
      simpson_integral(integrand, 0.0, hq, intervals) * sphere_volume_constant(n);
  return std::pow(integral, 1.0 / p);
}

double boundary_mean_curvature(const GeodesicBallDomain& domain) {
  const auto& m = domain.manifold();
  return static_cast<double>(m.n()) * m.df(domain.r0()) / m.f(domain.r0());
}

double tube_volume_log(const GeodesicBallDomain& domain, double r) {
  require(r >= 0.0, "tube width r must be nonnegative");
  const auto& m = domain.manifold();
  const double upper = domain.r0() + r;
  require_range(upper <= m.r_max() + 1e-9,
                "tube reaches past the warp solve range");
  auto log_g = [&](double s) {
    return s == 0.0 ? -std::numeric_limits<double>::infinity()
                    : static_cast<double>(m.n()) * m.log_f(s);
  };
  return simpson_log_integral_to(log_g, upper, m.step()) +
         std::log(sphere_volume_constant(m.n()));
}

}  // namespace willmore
