#ifndef SLSPEC_POTENTIAL_HPP
#define SLSPEC_POTENTIAL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "slspec/errors.hpp"
#include "slspec/grid.hpp"

namespace sl {

// Piecewise-constant antiderivative sigma of the distributional potential,
// one value per grid cell, plus the absorbed left-boundary constant.  The
// cell-constant representation is what makes the quasi-derivative system
// exactly integrable per cell.
template <class T>
class BasicPotential {
public:
  BasicPotential(Grid grid, std::vector<T> cell_values, T shift = T{})
      : grid_(std::move(grid)), values_(std::move(cell_values)), shift_(shift) {
    if (values_.size() != grid_.cells())
      throw ValidationError("shape", "potential needs one value per grid cell");
  }

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<T>& values() const noexcept { return values_; }
  T shift() const noexcept { return shift_; }
  T cell(std::size_t j) const { return values_[j]; }

  // Value at an arbitrary point: cell values are anchored at cell midpoints
  // and interpolated linearly between them, clamped at the ends.  Keeps
  // half-cell point evaluations (x +- t)/2 well defined.
  T at(double x) const {
    const double h = grid_.spacing();
    const std::size_t m = grid_.cells();
    const double u = x / h - 0.5;  // midpoint index coordinate
    if (u <= 0.0) return values_.front();
    if (u >= static_cast<double>(m - 1)) return values_.back();
    const auto j = static_cast<std::size_t>(u);
    const double w = u - static_cast<double>(j);
    return values_[j] * (1.0 - w) + values_[j + 1] * w;
  }

  double l2_norm() const {
    double s = 0.0;
    for (const T& v : values_) s += std::norm(std::complex<double>(v));
    return std::sqrt(s * grid_.spacing());
  }

private:
  Grid grid_;
  std::vector<T> values_;
  T shift_;
};

using Potential = BasicPotential<double>;
using ComplexPotential = BasicPotential<std::complex<double>>;

inline Potential constant_potential(const Grid& g, double c, double shift = 0.0) {
  return Potential(g, std::vector<double>(g.cells(), c), shift);
}

inline Potential sampled_potential(const Grid& g, const std::function<double(double)>& f,
                                   double shift = 0.0) {
  std::vector<double> v(g.cells());
  for (std::size_t j = 0; j < g.cells(); ++j) v[j] = f(g.midpoint(j));
  return Potential(g, std::move(v), shift);
}

}  // namespace sl

#endif
