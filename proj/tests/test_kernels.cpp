#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "detail/entire_trig.hpp"
#include "slspec/errors.hpp"
#include "slspec/forward.hpp"
#include "slspec/kernels.hpp"
#include "slspec/potential.hpp"
#include "slspec/quasi_ode.hpp"
#include "slspec/serialization.hpp"
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

sl::Potential sine_sigma(const sl::Grid& g, double amp = 0.3) {
  return sl::sampled_potential(g, [amp](double x) { return amp * std::sin(x); });
}

// max error of the kernel representation against the ODE solution over a
// (lambda, grid-index) probe
double rep_error(const sl::KernelTriple& kr, const sl::Potential& sigma) {
  double worst = 0.0;
  const sl::Grid& g = kr.grid;
  for (cplx lam : {cplx(2.5, 0.0), cplx(-1.2, 0.0), cplx(7.3, 0.0)}) {
    const auto tr = sl::trace_phi(sigma, lam);
    for (std::size_t j = g.cells() / 4; j <= g.cells(); j += g.cells() / 4) {
      const sl::RepValue rv = sl::rep_phi(kr, lam, g.point(j));
      worst = std::max(worst, std::abs(rv.phi - tr.y[j]));
      worst = std::max(worst, std::abs(rv.phi1 - tr.y1[j]));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("seed kernels for constant sigma are the closed-form averages") {
  sl::Grid g(40);
  const double c = 0.7;
  const sl::KernelTriple k0 = sl::kernel_seed(sl::constant_potential(g, c));
  REQUIRE(k0.K.size() == g.points());
  for (std::size_t j = 0; j < g.points(); ++j) {
    REQUIRE(k0.K[j].size() == j + 1);
    const double x = g.point(j);
    CHECK(std::abs(k0.C[j] - (-c * c * x)) <= 1e-13);
    for (std::size_t i = 0; i <= j; ++i) {
      const double t = g.point(i);
      CHECK(std::abs(k0.K[j][i] - (c - c * c * x / 2)) <= 1e-13);
      CHECK(std::abs(k0.Nk[j][i] - (c * c * x - c * c * t / 2)) <= 1e-13);
    }
  }
}

TEST_CASE("zero sigma is a fixed point reached in one step") {
  sl::Grid g(64);
  const sl::KernelTriple k = sl::build_kernels(sl::constant_potential(g, 0.0), 1e-12);
  CHECK(k.iterations == 1);
  CHECK(k.residual <= 1e-15);
  for (std::size_t j = 0; j < g.points(); ++j) {
    CHECK(std::abs(k.C[j]) == 0.0);
    for (std::size_t i = 0; i <= j; ++i) {
      CHECK(std::abs(k.K[j][i]) == 0.0);
      CHECK(std::abs(k.Nk[j][i]) == 0.0);
    }
  }
}

TEST_CASE("iteration converges quickly for moderate sigma") {
  sl::Grid g(200);
  const sl::KernelTriple k = sl::build_kernels(sl::constant_potential(g, 0.4), 1e-8);
  CHECK(k.iterations <= 25);
  CHECK(k.residual <= 1e-8);
}

TEST_CASE("iteration failure modes") {
  sl::Grid g(64);
  CHECK(thrown_code<sl::NumericalError>([&] {
          (void)sl::build_kernels(sl::constant_potential(g, 0.4), 1e-16, 3);
        }) == "iteration-budget");

  // a huge sigma puts the fixed-point map outside its contraction regime
  const std::string code = thrown_code<sl::NumericalError>(
      [&] { (void)sl::build_kernels(sl::constant_potential(g, 30.0), 1e-10); });
  CHECK((code == "divergence" || code == "iteration-budget"));

  const sl::KernelTriple seed = sl::kernel_seed(sl::constant_potential(sl::Grid(100), 0.3));
  CHECK(thrown_code<sl::ValidationError>([&] {
          (void)sl::picard_step(seed, sl::constant_potential(sl::Grid(200), 0.3));
        }) == "grid");
}

TEST_CASE("kernel representation reproduces the ODE solution") {
  sl::Grid g(200);
  const sl::Potential sigma = sine_sigma(g);
  const sl::KernelTriple k = sl::build_kernels(sigma, 1e-10);
  CHECK(rep_error(k, sigma) <= 5e-3);

  CHECK(thrown_code<sl::ValidationError>([&] {
          (void)sl::rep_phi(k, cplx(2.0, 0.0), 1.0);  // not a grid point
        }) == "grid");
}

TEST_CASE("representation error improves under grid refinement") {
  sl::Grid coarse(100), fine(200);
  const sl::Potential sc = sine_sigma(coarse), sf = sine_sigma(fine);
  const double ec = rep_error(sl::build_kernels(sc, 1e-10), sc);
  const double ef = rep_error(sl::build_kernels(sf, 1e-10), sf);
  CHECK(ef * 1.5 <= ec);
}

TEST_CASE("phi remainder stays bounded as rho grows") {
  // phi(x) - cos(rho x) is a uniformly small remainder: its max over the
  // grid must not grow with rho (it decays once rho passes the sigma band)
  sl::Grid g(200);
  const sl::Potential sigma = sine_sigma(g);
  auto max_rem = [&](double rho) {
    const auto tr = sl::trace_phi(sigma, cplx(rho * rho, 0.0));
    double worst = 0.0;
    for (std::size_t j = 0; j <= g.cells(); ++j)
      worst = std::max(worst, std::abs(tr.y[j] - std::cos(rho * g.point(j))));
    return worst;
  };
  double low = 0.0, high = 0.0;
  for (int r = 1; r <= 5; ++r) low = std::max(low, max_rem(r));
  for (int r = 6; r <= 12; ++r) high = std::max(high, max_rem(r));
  CHECK(high <= 1.1 * low);
}

TEST_CASE("boundary traces for zero sigma are linear in H") {
  sl::Grid g(64);
  const sl::Potential zero = sl::constant_potential(g, 0.0);
  const sl::KernelTriple k = sl::build_kernels(zero, 1e-12);

  const sl::CharacteristicPD pd0 = sl::delta_representation(k, zero, 0.0);
  CHECK(pd0.D == 0.0);
  for (double p : pd0.P) CHECK(p == 0.0);

  const sl::CharacteristicPD pd1 = sl::delta_representation(k, zero, 1.0);
  CHECK(std::abs(pd1.D - 1.0) <= 1e-14);
  for (double p : pd1.P) CHECK(std::abs(p + 1.0) <= 1e-14);
}

TEST_CASE("product-free characteristic matches the forward one") {
  sl::Grid g(200);
  const double H = 0.3;
  const sl::Potential sigma = sl::constant_potential(g, 0.5);
  const sl::KernelTriple k = sl::build_kernels(sigma, 1e-10);
  const sl::CharacteristicPD pd = sl::delta_representation(k, sigma, H);
  for (double lam : {-1.5, 0.0, 0.7, 2.2, 5.1, 9.4}) {
    const cplx ref = sl::characteristic(sigma, H, lam).value;
    const cplx got = sl::char_from_pd(pd, lam);
    CHECK(std::abs(got - ref) <= 5e-3);
  }
}

TEST_CASE("kernel csv layout") {
  sl::Grid g(16);
  const sl::KernelTriple k = sl::build_kernels(sl::constant_potential(g, 0.2), 1e-10);
  const std::string csv = sl::kernels_to_csv(k);
  CHECK(csv.rfind("x,t,K,N,C\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  std::size_t expect = 1 + g.points();  // header + one C row per x
  for (std::size_t j = 0; j < g.points(); ++j) expect += j + 1;
  CHECK(rows == expect);
}
