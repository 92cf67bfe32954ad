#ifndef SLSPEC_FORWARD_HPP
#define SLSPEC_FORWARD_HPP

#include <complex>
#include <vector>

#include "slspec/potential.hpp"
#include "slspec/quasi_ode.hpp"
#include "slspec/spectral.hpp"

namespace sl {

struct CharacteristicSample {
  std::complex<double> lambda{};
  std::complex<double> value{};   // Delta(lambda) = phi^[1](pi) + H*phi(pi)
  std::complex<double> dvalue{};  // d/dlambda Delta, central difference
};

// Delta and its lambda-derivative (central difference, step 1e-6*max(1,|lambda|)).
CharacteristicSample characteristic(const Potential& sigma, double H,
                                    std::complex<double> lambda);

// First `count` eigenvalues (indices 0..count-1), ascending.  Scans the
// characteristic function along the real line (negative window plus a
// rho-grid up to count-1+0.75) and bisects each bracket.
std::vector<double> eigenvalues(const Potential& sigma, double H,
                                std::size_t count);

struct WeightNumbersResult {
  std::vector<double> alpha;            // 1 / int_0^pi phi(x,lambda_n)^2 dx
  std::vector<double> residue_alpha;    // -psi(0,lambda_n) / Delta'(lambda_n)
  std::vector<double> rel_discrepancy;  // |alpha - residue_alpha| / |alpha|
};

// Weight numbers by normalization integral, cross-checked against the residue
// route through psi and Delta'; a relative discrepancy beyond 1e-4 on any
// index is a numerical cross-check failure.
WeightNumbersResult weight_numbers(const Potential& sigma, double H,
                                   const std::vector<double>& lambdas);

// Convenience: full spectral data set for indices 0..N.
SpectralSequence forward_spectral_data(const Potential& sigma, double H,
                                       std::size_t N);

// M(lambda) = -psi(0,lambda) / Delta(lambda).  Guards against evaluation
// within 1e-8 of an eigenvalue (pole), via a Newton-step proximity estimate.
std::complex<double> weyl_value(const Potential& sigma, double H,
                                std::complex<double> lambda);

// Wronskian phi*Phi^[1] - phi^[1]*Phi evaluated at an arbitrary x in
// [0, pi], where Phi = S + M(lambda)*phi is the Weyl solution.  Equals 1
// identically; deviation measures accumulated integration error.  Inherits
// the pole-proximity error from weyl_value.
std::complex<double> wronskian_check(const Potential& sigma, double H,
                                     std::complex<double> lambda, double x);

struct RemainderReport {
  std::vector<std::complex<double>> rho_remainder;    // rho_n - n
  std::vector<std::complex<double>> alpha_remainder;  // alpha_n - 2/pi
  double rho_tail_l2 = 0.0;
  double alpha_tail_l2 = 0.0;
  // Plateau report: share of the squared l2 mass carried by indices
  // n >= size/2.  A remainder sequence that genuinely decays keeps this
  // small; mass still arriving in the last half means the asymptotic
  // regime has not been reached.
  double rho_last_half_share = 0.0;
  double alpha_last_half_share = 0.0;
};

// Remainder sequences of rho_n = n + kappa_n and alpha_n = 2/pi + kappa_n
// (kappa_n in l2 -- for this singular class there is no 1/n leading term;
// a constant sigma leaves lambda_n = n^2 exactly).  Note alpha_0 - 2/pi
// includes the structural -1/pi of the model's double-size first weight.
RemainderReport asymptotic_remainders(const SpectralSequence& data);

// Partial-fraction Weyl sum over the data, with the unit-model tail for
// indices beyond the data: sum_{n<=N} alpha_n/(lambda-lambda_n)
// + [tail of 1/(pi*lambda) + sum 2/pi/(lambda-n^2)] in closed form.
std::complex<double> weyl_series_with_model_tail(const SpectralSequence& data,
                                                 std::complex<double> lambda);

}  // namespace sl

#endif
