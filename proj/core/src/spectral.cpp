#include "slspec/spectral.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace sl {

std::complex<double> rho_of_lambda(std::complex<double> lambda) {
  std::complex<double> r = std::sqrt(lambda);
  // Fold onto arg(rho) in [-pi/2, pi/2): the principal square root lands in
  // (-pi/2, pi/2], so only the positive imaginary axis needs the flip.
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() > 0.0)) r = -r;
  return r;
}

SpectralSequence::SpectralSequence(std::vector<SpectralDatum> data)
    : data_(std::move(data)) {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i].n != static_cast<int>(i))
      throw ValidationError("index",
                            "spectral data must be indexed contiguously from 0");
    if (std::abs(data_[i].alpha) == 0.0)
      throw ValidationError("weight", "weight number " + std::to_string(i) +
                                          " must be nonzero");
  }
  // Ascending real parts: the natural enumeration lambda_0 < lambda_1 < ...
  // (a plain modulus ordering would reject spectra whose lowest eigenvalue
  // is negative with |lambda_0| > lambda_1, which legitimately happens).
  for (std::size_t i = 0; i + 1 < data_.size(); ++i) {
    const double a = data_[i].lambda.real();
    if (data_[i + 1].lambda.real() < a - 1e-9 * std::max(1.0, std::abs(a)))
      throw ValidationError(
          "ordering", "eigenvalues must be ordered by ascending real part");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    for (std::size_t j = i + 1; j < data_.size(); ++j) {
      const double scale =
          std::max(1.0, std::max(std::abs(data_[i].lambda),
                                 std::abs(data_[j].lambda)));
      if (std::abs(data_[i].lambda - data_[j].lambda) <= 1e-14 * scale)
        throw ValidationError("distinctness",
                              "eigenvalues " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
    }
  }
}

}  // namespace sl
