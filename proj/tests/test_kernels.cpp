#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "willmore/kernels.hpp"

namespace k = willmore::kernels;

namespace {

// Deterministic fill, no <random> so the values are stable everywhere.
std::vector<double> lcg_fill(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  std::uint64_t s = seed;
  for (auto& x : v) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    x = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
  }
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("parallel reductions match the serial reference bitwise") {
  for (std::size_t n : {0UL, 1UL, 7UL, 4095UL, 4096UL, 4097UL, 100000UL}) {
    const auto v = lcg_fill(n, 42 + n);
    CHECK(k::sum(v) == k::sum_serial(v));
    CHECK(k::min(v) == k::min_serial(v));
    CHECK(k::max(v) == k::max_serial(v));
  }
}

TEST_CASE("sum agrees with a long-double reference") {
  const auto v = lcg_fill(100000, 7);
  long double acc = 0.0L;
  for (double x : v) acc += static_cast<long double>(x);
  CHECK(std::fabs(k::sum(v) - static_cast<double>(acc)) <=
        1e-12 * std::max(1.0, std::fabs(static_cast<double>(acc))));
}

TEST_CASE("min/max identities") {
  CHECK(k::min({}) == std::numeric_limits<double>::infinity());
  CHECK(k::max({}) == -std::numeric_limits<double>::infinity());
  const std::vector<double> v{3.0, -1.0, 2.5};
  CHECK(k::min(v) == -1.0);
  CHECK(k::max(v) == 3.0);
}

TEST_CASE("log-sum-exp accumulation") {
  const double inf = std::numeric_limits<double>::infinity();
  {
    std::vector<double> logs{0.0, 0.0}, w{1.0, 1.0};
    CHECK(k::log_sum_exp_weighted(logs, w) == doctest::Approx(std::log(2.0)));
  }
  {
    // -inf entries and zero weights contribute nothing
    std::vector<double> logs{-inf, 700.0, 710.0}, w{1.0, 2.0, 0.0};
    CHECK(k::log_sum_exp_weighted(logs, w) ==
          doctest::Approx(700.0 + std::log(2.0)));
  }
  {
    std::vector<double> logs{-inf, -inf}, w{1.0, 1.0};
    CHECK(k::log_sum_exp_weighted(logs, w) == -inf);
  }
  {
    // huge exponents stay finite in log space
    std::vector<double> logs{5000.0, 5000.0 + std::log(3.0)}, w{1.0, 1.0};
    CHECK(k::log_sum_exp_weighted(logs, w) ==
          doctest::Approx(5000.0 + std::log(4.0)));
    CHECK(k::log_sum_exp_weighted(logs, w) ==
          k::log_sum_exp_weighted_serial(logs, w));
  }
}

TEST_SUITE_END();
