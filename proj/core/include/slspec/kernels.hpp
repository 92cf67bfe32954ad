#ifndef SLSPEC_KERNELS_HPP
#define SLSPEC_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "slspec/forward.hpp"
#include "slspec/potential.hpp"

namespace sl {

// Transformation-operator kernels on the triangle 0 <= t <= x <= pi:
// K[j][i] and Nk[j][i] hold the kernel values at (x_j, t_i), i <= j; C[j]
// is the boundary-trace function at x_j.  They furnish the representations
//   phi(x,lambda)    = cos(rho x) + int_0^x K(x,t) cos(rho t) dt,
//   phi^[1](x,lambda) = -rho sin(rho x) + rho int_0^x Nk(x,t) sin(rho t) dt
//                       + C(x).
struct KernelTriple {
  Grid grid{8};
  std::vector<std::vector<double>> K;
  std::vector<std::vector<double>> Nk;
  std::vector<double> C;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Zeroth iterate: explicit sigma-averages (closed form, no iteration).
KernelTriple kernel_seed(const Potential& sigma);

// One fixed-point update of the kernel system; residual is the max over the
// three components of the sup-grid-norm change against `prev`.
KernelTriple picard_step(const KernelTriple& prev, const Potential& sigma);

// Iterates picard_step from kernel_seed until residual <= tol.  Errors:
// residual growth beyond 1e3x the first residual is divergence; exceeding
// max_iter is an iteration-budget failure.
KernelTriple build_kernels(const Potential& sigma, double tol = 1e-10,
                           std::size_t max_iter = 60);

struct RepValue {
  std::complex<double> phi;
  std::complex<double> phi1;  // quasi-derivative phi' - sigma*phi
};

// Evaluates both representations above at a grid point x (trapezoid in t).
RepValue rep_phi(const KernelTriple& kernels, std::complex<double> lambda,
                 double x);

struct CharacteristicPD {
  Grid grid{8};
  std::vector<double> P;  // P(t) on grid points
  double D = 0.0;
};

// Characteristic function in product-free form:
//   Delta(lambda) = -rho sin(rho pi) + rho int_0^pi P(t) sin(rho t) dt + D,
// with P(t) = Nk(pi,t) - H*(1 + int_t^pi K(pi,s) ds) and
// D = C(pi) + H*(1 + int_0^pi K(pi,s) ds).
CharacteristicPD delta_representation(const KernelTriple& kernels,
                                      const Potential& sigma, double H);

}  // namespace sl

#endif
