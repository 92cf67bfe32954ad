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
#include "slspec/potential.hpp"
#include "slspec/quasi_ode.hpp"
#include "slspec/spectral.hpp"

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

// closed-form characteristic for constant sigma (pure Robin problem):
// phi = cos(rho x) + c*sin(rho x)/rho with rho^2 = lambda,
// Delta = -(lambda + c^2)*sin(rho pi)/rho + H*(cos(rho pi) + c*sin(rho pi)/rho)
cplx const_sigma_delta(double c, double H, cplx lambda) {
  const cplx rs = sl::detail::rs(lambda, sl::kPi);
  const cplx rc = sl::detail::rc(lambda, sl::kPi);
  return -(lambda + c * c) * rs + H * (rc + c * rs);
}

sl::Potential step_potential(const sl::Grid& g) {
  return sl::sampled_potential(g, [](double x) { return x > sl::kPi / 2 ? 1.0 : 0.0; });
}

}  // namespace

TEST_CASE("cell propagation preserves the phi-S wronskian exactly") {
  // rough alternating sigma stresses the per-cell matrix exponentials
  sl::Grid g(200);
  std::vector<double> v(g.cells());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = (j % 2 ? 0.8 : -0.8) + 0.1;
  const sl::Potential sigma(g, v);

  for (cplx lam : {cplx(2.7, 0.0), cplx(-3.2, 0.0), cplx(15.1, 2.0), cplx(-25.0, 0.0)}) {
    const auto phi = sl::trace_phi(sigma, lam);
    const auto s = sl::trace_s(sigma, lam);
    for (std::size_t j = 0; j <= g.cells(); j += 10) {
      const cplx w = phi.y[j] * s.y1[j] - phi.y1[j] * s.y[j];
      const double scale = std::abs(phi.y[j] * s.y1[j]) + std::abs(phi.y1[j] * s.y[j]) + 1.0;
      CHECK(std::abs(w - 1.0) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("constant sigma: characteristic matches the closed form") {
  sl::Grid g(200);
  const double c = 0.5, H = 0.3;
  const sl::Potential sigma = sl::constant_potential(g, c);
  for (cplx lam : {cplx(3.3, 0.7), cplx(-2.2, 0.0), cplx(0.4, 0.0), cplx(24.7, -1.1)}) {
    const cplx ref = const_sigma_delta(c, H, lam);
    const cplx got = sl::characteristic(sigma, H, lam).value;
    CHECK(std::abs(got - ref) <= 1e-9 * (1.0 + std::abs(ref)));
  }
  // derivative against a central difference of the closed form
  const cplx lam(2.7, 0.0);
  const double dh = 1e-6 * std::max(1.0, std::abs(lam));
  const cplx dref = (const_sigma_delta(c, H, lam + dh) - const_sigma_delta(c, H, lam - dh)) / (2.0 * dh);
  CHECK(std::abs(sl::characteristic(sigma, H, lam).dvalue - dref) <= 1e-6 * (1.0 + std::abs(dref)));
}

TEST_CASE("constant sigma, H=0: exact spectrum -c^2, n^2") {
  sl::Grid g(200);
  const double c = 0.5;
  const sl::Potential sigma = sl::constant_potential(g, c);
  const std::vector<double> lam = sl::eigenvalues(sigma, 0.0, 10);
  REQUIRE(lam.size() == 10);
  CHECK(std::abs(lam[0] + c * c) <= 1e-9);
  for (std::size_t n = 1; n < lam.size(); ++n)
    CHECK(std::abs(lam[n] - double(n) * double(n)) <= 1e-8);
}

TEST_CASE("constant sigma, H=0: weight numbers match the closed form") {
  sl::Grid g(200);
  const double c = 0.5;
  const sl::Potential sigma = sl::constant_potential(g, c);
  const std::vector<double> lam = sl::eigenvalues(sigma, 0.0, 8);
  const sl::WeightNumbersResult w = sl::weight_numbers(sigma, 0.0, lam);
  REQUIRE(w.alpha.size() == 8);

  // alpha_0 = 2c/(e^{2 c pi} - 1); alpha_n = (2/pi) n^2/(n^2 + c^2)
  const double a0 = 2.0 * c / (std::exp(2.0 * c * sl::kPi) - 1.0);
  CHECK(w.alpha[0] == doctest::Approx(a0).epsilon(1e-8));
  for (std::size_t n = 1; n < 8; ++n) {
    const double nn = double(n);
    const double an = (2.0 / sl::kPi) * nn * nn / (nn * nn + c * c);
    CHECK(w.alpha[n] == doctest::Approx(an).epsilon(1e-8));
    CHECK(w.rel_discrepancy[n] <= 1e-6);  // integral vs residue route
  }
}

TEST_CASE("robin-end eigenvalues satisfy the characteristic") {
  sl::Grid g(200);
  const sl::Potential sigma = sl::constant_potential(g, 0.5);
  const double H = 0.3;
  for (double lam : sl::eigenvalues(sigma, H, 7)) {
    const cplx d = const_sigma_delta(0.5, H, lam);
    CHECK(std::abs(d) <= 1e-7 * (1.0 + std::abs(lam)));
  }
}

TEST_CASE("unit step spectrum regression") {
  // the ground state has |lambda_0| > lambda_1: the ascending-real ordering
  // must accept this sequence end to end
  sl::Grid g(200);
  const sl::Potential sigma = step_potential(g);
  const std::vector<double> got = sl::eigenvalues(sigma, 0.0, 7);
  const std::vector<double> frozen = {
      -0.941083074207, 0.615807843091, 3.999999999990, 8.393834867585,
      15.999999999982, 24.374247440354, 35.999999999974};
  REQUIRE(got.size() == frozen.size());
  for (std::size_t n = 0; n < frozen.size(); ++n)
    CHECK(std::abs(got[n] - frozen[n]) <= 1e-8);

  CHECK_NOTHROW(sl::forward_spectral_data(sigma, 0.0, 6));
}

TEST_CASE("model forward data and remainders") {
  sl::Grid g(200);
  const sl::Potential zero = sl::constant_potential(g, 0.0);
  const sl::SpectralSequence data = sl::forward_spectral_data(zero, 0.0, 8);
  REQUIRE(data.size() == 9);
  for (std::size_t n = 0; n < data.size(); ++n) {
    CHECK(data[n].n == int(n));
    CHECK(std::abs(data[n].lambda - double(n) * double(n)) <= 1e-10 * (1.0 + double(n) * double(n)));
    const double ref = n == 0 ? 1.0 / sl::kPi : 2.0 / sl::kPi;
    CHECK(std::abs(data[n].alpha - ref) <= 1e-9);
    CHECK(data[n].source == sl::DatumSource::measured);
  }

  const sl::RemainderReport rem = sl::asymptotic_remainders(data);
  REQUIRE(rem.rho_remainder.size() == 9);
  for (const cplx& r : rem.rho_remainder) CHECK(std::abs(r) <= 1e-9);
  CHECK(std::abs(rem.alpha_remainder[0] + 1.0 / sl::kPi) <= 1e-9);
  for (std::size_t n = 1; n < 9; ++n) CHECK(std::abs(rem.alpha_remainder[n]) <= 1e-9);
  CHECK(rem.alpha_tail_l2 == doctest::Approx(1.0 / sl::kPi).epsilon(1e-7));
  CHECK(rem.alpha_last_half_share <= 1e-12);
}

TEST_CASE("smooth sigma: rho remainders decay like an l2 sequence") {
  sl::Grid g(200);
  const sl::Potential sigma = sl::sampled_potential(
      g, [](double x) { return 0.3 * std::sin(x) - 0.15 * std::cos(3.0 * x); });
  const sl::SpectralSequence data = sl::forward_spectral_data(sigma, 0.1, 40);
  const sl::RemainderReport rem = sl::asymptotic_remainders(data);
  for (std::size_t n = 5; n < data.size(); ++n)
    CHECK(std::abs(rem.rho_remainder[n]) <= 2.0 / double(n));
  CHECK(rem.rho_last_half_share <= 0.25);
  CHECK(rem.alpha_last_half_share <= 0.25);
}

TEST_CASE("weyl function: model closed form and pole guard") {
  sl::Grid g(200);
  const sl::Potential zero = sl::constant_potential(g, 0.0);
  // M(-1) = -coth(pi) for the model
  const cplx m = sl::weyl_value(zero, 0.0, -1.0);
  CHECK(m.real() == doctest::Approx(-1.0 / std::tanh(sl::kPi)).epsilon(1e-10));
  CHECK(std::abs(m.imag()) <= 1e-12);

  CHECK(thrown_code<sl::NumericalError>([&] { (void)sl::weyl_value(zero, 0.0, 4.0); }) ==
        "pole-proximity");
}

TEST_CASE("weyl residues: (lambda - lambda_n) M -> alpha_n") {
  sl::Grid g(200);
  const sl::Potential sigma = sl::constant_potential(g, 0.5);
  const sl::SpectralSequence data = sl::forward_spectral_data(sigma, 0.0, 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    const cplx lam = data[n].lambda + 1e-5;
    const cplx res = (lam - data[n].lambda) * sl::weyl_value(sigma, 0.0, lam);
    CHECK(std::abs(res - data[n].alpha) <= 1e-3 * std::abs(data[n].alpha));
  }
}

TEST_CASE("weyl partial-fraction series with exact model tail telescopes") {
  std::vector<sl::SpectralDatum> items;
  for (int n = 0; n <= 12; ++n)
    items.push_back({n, double(n) * double(n),
                     n == 0 ? 1.0 / sl::kPi : 2.0 / sl::kPi,
                     sl::DatumSource::measured});
  const sl::SpectralSequence model{items};

  const cplx lam(2.5, 0.0);
  const cplx rho = sl::rho_of_lambda(lam);
  const cplx ref = std::cos(rho * sl::kPi) * rho / (lam * std::sin(rho * sl::kPi));
  const cplx got = sl::weyl_series_with_model_tail(model, lam);
  CHECK(std::abs(got - ref) <= 1e-12 * std::abs(ref));
}

TEST_CASE("wronskian of phi and the weyl solution") {
  sl::Grid g(200);
  const sl::Potential zero = sl::constant_potential(g, 0.0);
  CHECK(std::abs(sl::wronskian_check(zero, 0.0, 2.0, 1.0) - 1.0) <= 1e-12);
  CHECK(sl::wronskian_check(zero, 0.0, 2.0, 0.0) == cplx(1.0, 0.0));  // exact at x=0

  const sl::Potential sigma = sl::constant_potential(g, 0.5);
  CHECK(std::abs(sl::wronskian_check(sigma, 0.3, 2.7, sl::kPi / 3) - 1.0) <= 1e-8);

  CHECK(thrown_code<sl::ValidationError>([&] {
          (void)sl::wronskian_check(zero, 0.0, 2.0, 3.5);
        }) == "grid");
}

TEST_CASE("eigenvalue count contract") {
  sl::Grid g(64);
  const sl::Potential sigma = sl::constant_potential(g, 0.2);
  CHECK(sl::eigenvalues(sigma, 0.0, 0).empty());
  CHECK(sl::eigenvalues(sigma, 0.0, 3).size() == 3);
}
