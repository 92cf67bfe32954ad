#include "slspec/potential.hpp"

#include <cmath>

#include "slspec/quadrature.hpp"

namespace sl {

double sigma_l2_distance(const Potential& a, const Potential& b) {
  if (!(a.grid() == b.grid()))
    throw ValidationError("shape", "potentials must share one grid");
  double s = 0.0;
  for (std::size_t j = 0; j < a.grid().cells(); ++j) {
    const double d = a.cell(j) - b.cell(j);
    s += d * d;
  }
  return std::sqrt(s * a.grid().spacing());
}

}  // namespace sl
