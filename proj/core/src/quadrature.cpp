#include "slspec/quadrature.hpp"

#include <cmath>

#include "slspec/errors.hpp"

namespace sl {

double integrate_grid(std::span<const double> samples, const Grid& grid) {
  if (samples.size() != grid.points())
    throw ValidationError("shape", "sample count must match grid points");
  double s = 0.5 * (samples.front() + samples.back());
  for (std::size_t j = 1; j + 1 < samples.size(); ++j) s += samples[j];
  return s * grid.spacing();
}

double l2_remainder_norm(std::span<const double> r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s);
}

double l2_remainder_norm(std::span<const std::complex<double>> r) {
  double s = 0.0;
  for (const auto& v : r) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace sl
