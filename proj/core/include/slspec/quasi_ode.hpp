#ifndef SLSPEC_QUASI_ODE_HPP
#define SLSPEC_QUASI_ODE_HPP

#include <complex>
#include <vector>

#include "slspec/grid.hpp"
#include "slspec/potential.hpp"

namespace sl {

// Sampled solution (y, y^[1]) of -(y^[1])' - sigma*y^[1] - sigma^2*y = lambda*y
// along the grid, where y^[1] = y' - sigma*y is the quasi-derivative.  The
// first-order form u' = sigma*u + v, v' = -(lambda + sigma^2)*u - sigma*v has
// constant coefficients on each cell, so propagation is exact per cell (no
// scheme order to tune).
template <class S>
struct SolutionTrace {
  Grid grid{8};
  std::complex<double> lambda{};
  std::vector<S> y;
  std::vector<S> y1;
};

enum class Direction { forward, backward };

// Propagates initial values (y0, y10) from x=0 (forward) or x=pi (backward)
// across every cell; returns point values at all m+1 grid points.
SolutionTrace<double> integrate_quasi_system(const Potential& sigma,
                                             double lambda, double y0,
                                             double y10,
                                             Direction dir = Direction::forward);
SolutionTrace<std::complex<double>> integrate_quasi_system(
    const Potential& sigma, std::complex<double> lambda,
    std::complex<double> y0, std::complex<double> y10,
    Direction dir = Direction::forward);

// phi: y(0) = 1, y^[1](0) = 0.    S: y(0) = 0, y^[1](0) = 1.
// psi: y(pi) = 1, y^[1](pi) = -H (integrated backward).
SolutionTrace<std::complex<double>> trace_phi(const Potential& sigma,
                                              std::complex<double> lambda);
SolutionTrace<std::complex<double>> trace_s(const Potential& sigma,
                                            std::complex<double> lambda);
SolutionTrace<std::complex<double>> trace_psi(const Potential& sigma, double H,
                                              std::complex<double> lambda);

// Integral of y^2 over [0, pi], cell-exact for the piecewise-constant-sigma
// propagator (trapezoid would cap the attainable weight-number accuracy).
std::complex<double> phi_squared_integral(const Potential& sigma,
                                          std::complex<double> lambda,
                                          const SolutionTrace<std::complex<double>>& tr);

}  // namespace sl

#endif
