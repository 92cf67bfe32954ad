#include "slspec/forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/entire_trig.hpp"
#include "detail/root_scan.hpp"
#include "slspec/errors.hpp"
#include "slspec/quadrature.hpp"

namespace sl {
namespace {

// Real-lambda fast path used by the zero scan: Delta(lambda) with no
// derivative bookkeeping.
double delta_real(const Potential& sigma, double H, double lambda) {
  const auto tr =
      integrate_quasi_system(sigma, lambda, 1.0, 0.0, Direction::forward);
  return tr.y1.back() + H * tr.y.back();
}

std::complex<double> delta_complex(const Potential& sigma, double H,
                                   std::complex<double> lambda) {
  const auto tr = trace_phi(sigma, lambda);
  return tr.y1.back() + H * tr.y.back();
}

double scan_window_left(const Potential& sigma, double H) {
  double sup = 0.0;
  for (double v : sigma.values()) sup = std::max(sup, std::abs(v));
  const double b = 1.0 + sup + std::abs(H);
  return b * b + 1.0;
}

}  // namespace

CharacteristicSample characteristic(const Potential& sigma, double H,
                                    std::complex<double> lambda) {
  CharacteristicSample out;
  out.lambda = lambda;
  const double step = 1e-6 * std::max(1.0, std::abs(lambda));
  if (lambda.imag() == 0.0) {
    const double x = lambda.real();
    out.value = delta_real(sigma, H, x);
    out.dvalue = (delta_real(sigma, H, x + step) -
                  delta_real(sigma, H, x - step)) /
                 (2.0 * step);
  } else {
    out.value = delta_complex(sigma, H, lambda);
    out.dvalue = (delta_complex(sigma, H, lambda + step) -
                  delta_complex(sigma, H, lambda - step)) /
                 (2.0 * step);
  }
  return out;
}

std::vector<double> eigenvalues(const Potential& sigma, double H,
                                std::size_t count) {
  auto f = [&sigma, H](double lam) { return delta_real(sigma, H, lam); };
  return detail::scan_real_roots(f, count, scan_window_left(sigma, H));
}

WeightNumbersResult weight_numbers(const Potential& sigma, double H,
                                   const std::vector<double>& lambdas) {
  WeightNumbersResult out;
  out.alpha.reserve(lambdas.size());
  out.residue_alpha.reserve(lambdas.size());
  out.rel_discrepancy.reserve(lambdas.size());
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    const std::complex<double> lam(lambdas[n], 0.0);
    const auto phi = trace_phi(sigma, lam);
    const std::complex<double> nrm = phi_squared_integral(sigma, lam, phi);
    const double alpha = 1.0 / nrm.real();

    const auto psi = trace_psi(sigma, H, lam);
    const auto ch = characteristic(sigma, H, lam);
    const double residue = -psi.y.front().real() / ch.dvalue.real();

    const double rel = std::abs(alpha - residue) / std::abs(alpha);
    out.alpha.push_back(alpha);
    out.residue_alpha.push_back(residue);
    out.rel_discrepancy.push_back(rel);
    if (!(rel <= 1e-4))
      throw NumericalError(
          "cross-check",
          "weight number " + std::to_string(n) +
              ": normalization and residue routes disagree (relative " +
              std::to_string(rel) + ")");
  }
  return out;
}

SpectralSequence forward_spectral_data(const Potential& sigma, double H,
                                       std::size_t N) {
  const auto lams = eigenvalues(sigma, H, N + 1);
  const auto wn = weight_numbers(sigma, H, lams);
  std::vector<SpectralDatum> data(lams.size());
  for (std::size_t n = 0; n < lams.size(); ++n) {
    data[n].n = static_cast<int>(n);
    data[n].lambda = lams[n];
    data[n].alpha = wn.alpha[n];
    data[n].source = DatumSource::measured;
  }
  return SpectralSequence(std::move(data));
}

std::complex<double> weyl_value(const Potential& sigma, double H,
                                std::complex<double> lambda) {
  const auto ch = characteristic(sigma, H, lambda);
  // Newton-step distance to the nearest zero of Delta.
  const double prox = std::abs(ch.value) /
                      std::max(std::abs(ch.dvalue), 1e-300);
  if (prox < 1e-8)
    throw NumericalError("pole-proximity",
                         "lambda is within 1e-8 of a pole of the Weyl "
                         "function (Newton-step estimate)");
  const auto psi = trace_psi(sigma, H, lambda);
  return -psi.y.front() / ch.value;
}

namespace {

// Propagates (y, y^[1]) from 0 to an arbitrary x: full cells, then one
// partial step inside the cell containing x (sigma is constant there, so
// the cell propagator stays exact).
std::pair<std::complex<double>, std::complex<double>> propagate_to(
    const Potential& sigma, std::complex<double> lambda, double x,
    std::complex<double> y, std::complex<double> y1) {
  const Grid& g = sigma.grid();
  const double h = g.spacing();
  const std::size_t m = g.cells();
  auto step = [&](double c, double len) {
    std::complex<double> ct, st;
    detail::ct_st(lambda, len, ct, st);
    const std::complex<double> ny = ct * y + st * (c * y + y1);
    const std::complex<double> ny1 =
        ct * y1 + st * (-(lambda + c * c) * y - c * y1);
    y = ny;
    y1 = ny1;
  };
  std::size_t full = static_cast<std::size_t>(std::floor(x / h + 1e-12));
  full = std::min(full, m);
  for (std::size_t j = 0; j < full; ++j) step(sigma.values()[j], h);
  const double rem = x - static_cast<double>(full) * h;
  if (rem > 1e-12 && full < m) step(sigma.values()[full], rem);
  return {y, y1};
}

}  // namespace

std::complex<double> wronskian_check(const Potential& sigma, double H,
                                     std::complex<double> lambda, double x) {
  if (!(x >= 0.0 && x <= kPi + 1e-12))
    throw ValidationError("grid", "wronskian probe x outside [0, pi]");
  const std::complex<double> M = weyl_value(sigma, H, lambda);
  const auto [phi, phi1] = propagate_to(sigma, lambda, x, 1.0, 0.0);
  const auto [s, s1] = propagate_to(sigma, lambda, x, 0.0, 1.0);
  const std::complex<double> big_phi = s + M * phi;
  const std::complex<double> big_phi1 = s1 + M * phi1;
  return phi * big_phi1 - phi1 * big_phi;
}

namespace {

double last_half_share(const std::vector<std::complex<double>>& r) {
  double total = 0.0, tail = 0.0;
  for (std::size_t n = 0; n < r.size(); ++n) {
    const double m = std::norm(r[n]);
    total += m;
    if (n >= r.size() / 2) tail += m;
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace

RemainderReport asymptotic_remainders(const SpectralSequence& data) {
  RemainderReport rep;
  rep.rho_remainder.assign(data.size(), {});
  rep.alpha_remainder.assign(data.size(), {});
  for (std::size_t n = 0; n < data.size(); ++n) {
    rep.rho_remainder[n] = data[n].rho() - static_cast<double>(n);
    rep.alpha_remainder[n] = data[n].alpha - 2.0 / kPi;
  }
  rep.rho_tail_l2 = l2_remainder_norm(rep.rho_remainder);
  rep.alpha_tail_l2 = l2_remainder_norm(rep.alpha_remainder);
  rep.rho_last_half_share = last_half_share(rep.rho_remainder);
  rep.alpha_last_half_share = last_half_share(rep.alpha_remainder);
  return rep;
}

std::complex<double> weyl_series_with_model_tail(const SpectralSequence& data,
                                                 std::complex<double> lambda) {
  std::complex<double> acc = 0.0;
  for (const auto& d : data) acc += d.alpha / (lambda - d.lambda);
  // Closed-form unit-model Weyl function minus its first N+1 partial
  // fractions: appends the exact model tail beyond the data.
  const std::complex<double> model =
      detail::rc(lambda, kPi) / (lambda * detail::rs(lambda, kPi));
  std::complex<double> partial = 1.0 / (kPi * lambda);
  for (std::size_t n = 1; n < data.size(); ++n) {
    const double nn = static_cast<double>(n);
    partial += (2.0 / kPi) / (lambda - nn * nn);
  }
  return acc + (model - partial);
}

}  // namespace sl
