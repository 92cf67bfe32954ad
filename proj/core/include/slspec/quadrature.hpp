#ifndef SLSPEC_QUADRATURE_HPP
#define SLSPEC_QUADRATURE_HPP

#include <complex>
#include <span>
#include <vector>

#include "slspec/grid.hpp"
#include "slspec/potential.hpp"

namespace sl {

// Composite trapezoid over the full grid; samples are point values at the
// m+1 grid points.
double integrate_grid(std::span<const double> samples, const Grid& grid);

// Plain l2 norm of a remainder sequence.
double l2_remainder_norm(std::span<const double> r);
double l2_remainder_norm(std::span<const std::complex<double>> r);

// Exact L2(0,pi) distance between two piecewise-constant potentials on one
// grid.
double sigma_l2_distance(const Potential& a, const Potential& b);

}  // namespace sl

#endif
