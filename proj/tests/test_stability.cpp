#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "slspec/errors.hpp"
#include "slspec/forward.hpp"
#include "slspec/kernels.hpp"
#include "slspec/potential.hpp"
#include "slspec/spectral.hpp"
#include "slspec/stability.hpp"

using cplx = std::complex<double>;

namespace {

template <class E>
std::string thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const E& e) {
    return e.code();
  } catch (...) {
  }
  return "";
}

sl::CharacteristicPD flat_pd(std::size_t cells, double p, double d) {
  sl::CharacteristicPD pd;
  pd.grid = sl::Grid(cells);
  pd.P.assign(pd.grid.points(), p);
  pd.D = d;
  return pd;
}

}  // namespace

TEST_CASE("characteristic from boundary traces: hand values") {
  const sl::CharacteristicPD model = flat_pd(100, 0.0, 0.0);
  CHECK(std::abs(sl::char_from_pd(model, 2.25) - 1.5) <= 1e-12);
  CHECK(sl::char_from_pd(model, 0.0) == cplx(0.0, 0.0));  // pinned zero, exact

  const sl::CharacteristicPD pd = flat_pd(100, -1.0, 1.0);
  CHECK(std::abs(sl::char_from_pd(pd, 1.0) - (-1.0)) <= 1e-12);

  // complex lambda against the closed form -rho sin(rho pi) + cos(rho pi)
  const cplx lam(2.0, 1.0);
  const cplx rho = sl::rho_of_lambda(lam);
  const cplx ref = -rho * std::sin(rho * sl::kPi) + std::cos(rho * sl::kPi);
  CHECK(std::abs(sl::char_from_pd(pd, lam) - ref) <= 1e-12 * (1.0 + std::abs(ref)));
}

TEST_CASE("boundary-trace shape is validated") {
  sl::CharacteristicPD pd = flat_pd(64, 0.0, 0.0);
  pd.P.pop_back();
  CHECK(thrown_code<sl::ValidationError>([&] {
          (void)sl::char_from_pd(pd, 1.0);
        }) == "shape");
}

TEST_CASE("zeros of the model traces sit at the integers") {
  const sl::CharacteristicPD model = flat_pd(100, 0.0, 0.0);
  const auto zeros = sl::zeros_from_pd(model, 6);
  REQUIRE(zeros.size() == 6);
  CHECK(std::abs(zeros[0]) <= 1e-9);
  for (std::size_t n = 1; n < zeros.size(); ++n) {
    CHECK(std::abs(zeros[n].real() - double(n)) <= 1e-9);
    CHECK(std::abs(zeros[n].imag()) <= 1e-9);
  }
}

TEST_CASE("trace zeros track the true spectrum") {
  sl::Grid g(200);
  const sl::Potential sigma =
      sl::sampled_potential(g, [](double x) { return 0.3 * std::sin(x); });
  const double H = 0.2;
  const sl::KernelTriple k = sl::build_kernels(sigma, 1e-10);
  const sl::CharacteristicPD pd = sl::delta_representation(k, sigma, H);
  const auto zeros = sl::zeros_from_pd(pd, 5);
  const std::vector<double> lam = sl::eigenvalues(sigma, H, 5);
  for (std::size_t n = 0; n < 5; ++n) {
    const cplx ref = sl::rho_of_lambda(lam[n]);
    CHECK(std::abs(zeros[n] - ref) <= 2e-2);
  }
}

TEST_CASE("perturbation experiment: deterministic, bounded, seed-sensitive") {
  const sl::CharacteristicPD model = flat_pd(100, 0.0, 0.0);
  const sl::PerturbationSummary a = sl::perturbation_experiment(model, 6, 1e-3, 6, 3);
  REQUIRE(a.trials.size() == 6);
  CHECK(a.delta == 1e-3);
  CHECK(a.seed == 3);
  double worst = 0.0;
  for (const auto& t : a.trials) {
    CHECK(t.rhs == 1e-3);  // P-only perturbation, normalized to delta
    CHECK(t.lhs >= 0.0);
    CHECK(std::isfinite(t.ratio));
    worst = std::max(worst, t.ratio);
  }
  CHECK(a.max_ratio == worst);

  const sl::PerturbationSummary b = sl::perturbation_experiment(model, 6, 1e-3, 6, 3);
  for (std::size_t i = 0; i < 6; ++i) CHECK(a.trials[i].lhs == b.trials[i].lhs);

  const sl::PerturbationSummary c = sl::perturbation_experiment(model, 6, 1e-3, 6, 4);
  bool differs = false;
  for (std::size_t i = 0; i < 6; ++i) differs = differs || (a.trials[i].lhs != c.trials[i].lhs);
  CHECK(differs);
}

TEST_CASE("perturbation ratios stay in the linear regime across delta") {
  const sl::CharacteristicPD model = flat_pd(100, 0.0, 0.0);
  const sl::PerturbationSummary big = sl::perturbation_experiment(model, 8, 1e-2, 6, 1);
  const sl::PerturbationSummary small = sl::perturbation_experiment(model, 8, 1e-3, 6, 1);
  const double lo = std::min(big.max_ratio, small.max_ratio);
  const double hi = std::max(big.max_ratio, small.max_ratio);
  CHECK(lo > 0.0);
  CHECK(hi <= 1.5 * lo);
}

TEST_CASE("coefficient perturbations shrink the spectral distance") {
  sl::Grid g(100);
  const sl::Potential sigma = sl::constant_potential(g, 0.2);
  const auto pts =
      sl::coefficient_stability_experiment(sigma, 0.1, {0.2, 0.1}, 8);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].s == 0.2);
  CHECK(pts[1].s == 0.1);
  CHECK(pts[0].spec_dist > pts[1].spec_dist);
  CHECK(pts[1].spec_dist > 0.0);
  // near-linear response: halving s roughly halves the distance
  const double ratio = pts[1].spec_dist / pts[0].spec_dist;
  CHECK(ratio >= 0.35);
  CHECK(ratio <= 0.65);
}
