#ifndef SLSPEC_STABILITY_HPP
#define SLSPEC_STABILITY_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "slspec/kernels.hpp"
#include "slspec/potential.hpp"

namespace sl {

// Delta(lambda) evaluated from a (P, D) pair; quadrature is exact for
// piecewise-linear P so the sin(rho t) moments are done in closed form
// per cell (plain trapezoid is not accurate enough near sign changes).
std::complex<double> char_from_pd(const CharacteristicPD& pd,
                                  std::complex<double> lambda);

// rho-values of the first `count` real-lambda zeros of char_from_pd, each
// bracketed in a 0.05-wide rho-scan (a fixed negative-lambda window covers
// rho near the origin) and bisected to width 1e-11.  A zero with lambda < 0
// sits on the lower imaginary rho-axis.
std::vector<std::complex<double>> zeros_from_pd(const CharacteristicPD& pd,
                                                std::size_t count);

struct PerturbationTrial {
  double lhs = 0.0;    // sqrt(sum |rho_n - rho_n~|^2) over matched zeros
  double rhs = 0.0;    // ||dP||_L2 + |dD| (dD = 0 here, see below)
  double ratio = 0.0;  // lhs / rhs
};

struct PerturbationSummary {
  std::vector<PerturbationTrial> trials;
  double delta = 0.0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  std::uint64_t seed = 0;
};

// Draws `trials` random trigonometric-polynomial perturbations (degree <= 8,
// L2-normalized to `delta`) of P, recomputes the zeros, matches them
// one-to-one within rho-distance 0.1, and reports the lhs/rhs stability
// ratios.  D stays fixed: a D shift moves a zero sitting at rho = 0 by
// O(sqrt(delta)), which is the known non-Lipschitz corner of the bound, so
// the experiment probes the P direction where the linear estimate applies.
// Requires the base zeros to be separated by at least 1e-3 in rho.
PerturbationSummary perturbation_experiment(const CharacteristicPD& base,
                                            std::size_t trials, double delta,
                                            std::size_t count,
                                            std::uint64_t seed = 1);

struct CoefficientStabilityPoint {
  double s = 0.0;       // perturbation size applied to (sigma, H)
  double spec_dist = 0.0;  // sqrt(sum (|drho_n| + |dalpha_n|)^2), index-paired
};

// Perturbs sigma by s * (normalized bump) and H by s, recomputes spectra,
// and reports the paired spectral distance for each requested size.
std::vector<CoefficientStabilityPoint> coefficient_stability_experiment(
    const Potential& sigma, double H, const std::vector<double>& sizes,
    std::size_t count);

}  // namespace sl

#endif
