#include "slspec/quasi_ode.hpp"

#include <cmath>

#include "detail/entire_trig.hpp"
#include "slspec/errors.hpp"

namespace sl {
namespace {

void check_range(std::complex<double> lambda) {
  const double im_rho = std::abs(std::imag(std::sqrt(lambda)));
  if (im_rho * kPi > 700.0)
    throw NumericalError("range",
                         "|Im rho|*pi exceeds the floating-point range of the "
                         "hyperbolic propagator");
}

// One cell of u' = c u + v, v' = -(lambda + c^2) u - c v.  The cell matrix A
// satisfies A^2 = -lambda I, so exp(+-hA) = ct(lambda,h) I +- st(lambda,h) A.
template <class S, class L>
void step_cell(S& u, S& v, double c, const L& lambda, double h, bool forward) {
  L ct, st;
  detail::ct_st(lambda, h, ct, st);
  if (!forward) st = -st;
  const S au = c * u + v;
  const S av = -(lambda + c * c) * u - c * v;
  const S nu = ct * u + st * au;
  const S nv = ct * v + st * av;
  u = nu;
  v = nv;
}

template <class S, class L>
SolutionTrace<S> integrate_impl(const Potential& sigma, const L& lambda,
                                const S& y0, const S& y10, Direction dir) {
  const Grid& g = sigma.grid();
  const std::size_t m = g.cells();
  SolutionTrace<S> tr;
  tr.grid = g;
  tr.lambda = std::complex<double>(lambda);
  tr.y.resize(m + 1);
  tr.y1.resize(m + 1);
  const double h = g.spacing();
  if (dir == Direction::forward) {
    S u = y0, v = y10;
    tr.y[0] = u;
    tr.y1[0] = v;
    for (std::size_t j = 0; j < m; ++j) {
      step_cell(u, v, sigma.cell(j), lambda, h, true);
      tr.y[j + 1] = u;
      tr.y1[j + 1] = v;
    }
  } else {
    S u = y0, v = y10;
    tr.y[m] = u;
    tr.y1[m] = v;
    for (std::size_t j = m; j-- > 0;) {
      step_cell(u, v, sigma.cell(j), lambda, h, false);
      tr.y[j] = u;
      tr.y1[j] = v;
    }
  }
  return tr;
}

}  // namespace

SolutionTrace<double> integrate_quasi_system(const Potential& sigma,
                                             double lambda, double y0,
                                             double y10, Direction dir) {
  check_range(lambda);
  return integrate_impl<double, double>(sigma, lambda, y0, y10, dir);
}

SolutionTrace<std::complex<double>> integrate_quasi_system(
    const Potential& sigma, std::complex<double> lambda,
    std::complex<double> y0, std::complex<double> y10, Direction dir) {
  check_range(lambda);
  return integrate_impl<std::complex<double>, std::complex<double>>(
      sigma, lambda, y0, y10, dir);
}

SolutionTrace<std::complex<double>> trace_phi(const Potential& sigma,
                                              std::complex<double> lambda) {
  return integrate_quasi_system(sigma, lambda, {1.0, 0.0}, {0.0, 0.0},
                                Direction::forward);
}

SolutionTrace<std::complex<double>> trace_s(const Potential& sigma,
                                            std::complex<double> lambda) {
  return integrate_quasi_system(sigma, lambda, {0.0, 0.0}, {1.0, 0.0},
                                Direction::forward);
}

SolutionTrace<std::complex<double>> trace_psi(const Potential& sigma, double H,
                                              std::complex<double> lambda) {
  return integrate_quasi_system(sigma, lambda, {1.0, 0.0}, {-H, 0.0},
                                Direction::backward);
}

std::complex<double> phi_squared_integral(
    const Potential& sigma, std::complex<double> lambda,
    const SolutionTrace<std::complex<double>>& tr) {
  const Grid& g = sigma.grid();
  if (!(g == tr.grid))
    throw ValidationError("shape", "trace and potential grids differ");
  const double h = g.spacing();
  std::complex<double> ct, st;
  detail::ct_st(lambda, h, ct, st);
  // On each cell y = a cos(rho s) + b sin(rho s)/rho with a = y(left),
  // b = y'(left); the three moment integrals are cell-size exact.
  const std::complex<double> icc = 0.5 * h + 0.5 * st * ct;
  const std::complex<double> ics = 0.5 * st * st;
  std::complex<double> iss;
  const std::complex<double> q = lambda * (h * h);
  if (std::abs(q) < 1e-6)
    iss = h * h * h *
          (1.0 / 3.0 - q / 15.0 + 2.0 * q * q / 315.0);
  else
    iss = (h - st * ct) / (2.0 * lambda);
  std::complex<double> total = 0.0;
  for (std::size_t j = 0; j < g.cells(); ++j) {
    const std::complex<double> a = tr.y[j];
    const std::complex<double> b = sigma.cell(j) * tr.y[j] + tr.y1[j];
    total += a * a * icc + 2.0 * a * b * ics + b * b * iss;
  }
  return total;
}

}  // namespace sl
