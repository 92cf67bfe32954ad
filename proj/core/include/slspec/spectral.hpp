#ifndef SLSPEC_SPECTRAL_HPP
#define SLSPEC_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "slspec/errors.hpp"

namespace sl {

enum class DatumSource { measured, model_tail };

// Square roots of eigenvalues are taken with arg rho in [-pi/2, pi/2), so a
// negative eigenvalue maps to the lower imaginary axis.
std::complex<double> rho_of_lambda(std::complex<double> lambda);

struct SpectralDatum {
  int n = 0;
  std::complex<double> lambda{};
  std::complex<double> alpha{};
  DatumSource source = DatumSource::measured;

  std::complex<double> rho() const { return rho_of_lambda(lambda); }
};

// Eigenvalue/weight-number pairs indexed 0..N.  Construction validates:
// contiguous indices from 0, eigenvalues ascending (small floating slack),
// pairwise-distinct eigenvalues, nonzero weights.
class SpectralSequence {
public:
  SpectralSequence() = default;
  explicit SpectralSequence(std::vector<SpectralDatum> data);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  const SpectralDatum& operator[](std::size_t i) const { return data_[i]; }
  const std::vector<SpectralDatum>& items() const noexcept { return data_; }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

private:
  std::vector<SpectralDatum> data_;
};

}  // namespace sl

#endif
