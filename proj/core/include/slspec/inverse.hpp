#ifndef SLSPEC_INVERSE_HPP
#define SLSPEC_INVERSE_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "slspec/grid.hpp"
#include "slspec/potential.hpp"
#include "slspec/spectral.hpp"

namespace sl {

// Measured data paired with the unit-model data it is compared against:
// sheet 0 carries (lambda_n, alpha_n), sheet 1 the model values
// (n^2, 2/pi) (and (0, 1/pi) for n = 0).
struct TwoSheetData {
  SpectralSequence measured;
  SpectralSequence model;

  std::size_t size() const { return measured.size(); }
};

TwoSheetData with_model_sheet(const SpectralSequence& measured);

// Kernel of the model transform, closed form:
//   D(x,lambda,mu) = int_0^x cos(rho t) cos(theta t) dt
//                  = sin((rho-theta)x)/(2(rho-theta)) + sin((rho+theta)x)/(2(rho+theta)),
// with series branches near vanishing denominators.
std::complex<double> dtilde(double x, std::complex<double> lambda,
                            std::complex<double> mu);

// Dense main-equation system at one x in difference-weighted coordinates:
// unknowns ordered u_0, d_0, u_1, d_1, ... with u_n = phi_n0(x) and
// d_n = chi_n*(phi_n0(x) - phi_n1(x)), chi_n = 1/|rho_n0 - rho_n1|.
// A collapsed pair (identical rho on both sheets) keeps an identity d-row.
struct MainEquationSystem {
  double x = 0.0;
  std::vector<double> matrix;  // row-major, dim = 2*(N+1)
  std::vector<double> rhs;
  std::size_t dim = 0;
  double cond_estimate = 0.0;

  double at(std::size_t r, std::size_t c) const { return matrix[r * dim + c]; }
};

MainEquationSystem build_main_system(double x, const TwoSheetData& data);

// Raw (unweighted) variant over unknowns phi_n0, phi_n1, with the standalone
// phi term bound to the node value: data with a coincident sheet pair makes
// the matrix exactly singular, nearly-coincident pairs make it
// ill-conditioned.  Kept for the conditioning comparison.
MainEquationSystem build_raw_system(double x, const TwoSheetData& data);

struct PhiTable {
  Grid grid{8};
  // phi[sheet][n][j]: solution value at x_j for eigen-index n on sheet 0/1.
  std::vector<std::vector<double>> phi0;
  std::vector<std::vector<double>> phi1;
  std::vector<double> cond;  // per-x condition estimate of the weighted system
};

PhiTable solve_main_equation(const Grid& grid, const TwoSheetData& data);

struct ReconstructionResult {
  Potential sigma;
  double H = 0.0;
  PhiTable phi_table;
  double crosscheck_l2 = 0.0;  // series route vs derivative route, L2(0,pi)
  double crosscheck_H = 0.0;
  double max_cond = 0.0;
};

// (sigma, H) from the solved phi-table via the finite reconstruction
// series; an independent derivative-and-integrate route must agree to
// 1e-1 in L2 or the result is rejected as inconsistent (smooth data
// agree to ~1e-4; a jump in sigma costs a few 1e-2 at the kink).
ReconstructionResult reconstruct(const PhiTable& phi_table,
                                 const TwoSheetData& data, const Grid& grid);

// Full pipeline: data -> kernels-free main equation -> (sigma, H).
ReconstructionResult recover_potential(const SpectralSequence& data,
                                       const Grid& grid);

struct ValidationReport {
  bool realness = true;          // (i) lambda real, alpha > 0, distinct
  bool asymptotics = true;       // (ii) remainder tail small enough to trust
  double tail_fraction = 0.0;    // share of the remainder l2 mass in the
                                 // last half of the indices (<= 0.25 passes)
  std::vector<std::string> notes;

  bool ok() const { return realness && asymptotics; }
};

// Report-only screening of measured data against the solvability conditions:
// realness/positivity/simplicity, and the l2 asymptotic remainder behaviour.
ValidationReport validate_data(const SpectralSequence& data);

}  // namespace sl

#endif
