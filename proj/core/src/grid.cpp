#include "slspec/grid.hpp"

#include <cmath>

#include "slspec/errors.hpp"

namespace sl {

Grid::Grid(std::size_t cells) : m_(cells), h_(kPi / static_cast<double>(cells)) {
  if (cells < 8) throw ValidationError("shape", "grid needs at least 8 cells");
}

Grid Grid::from_points(const std::vector<double>& points) {
  if (points.size() < 9)
    throw ValidationError("shape", "grid needs at least 8 cells");
  const std::size_t m = points.size() - 1;
  if (std::abs(points.front()) > 1e-12 || std::abs(points.back() - kPi) > 1e-12)
    throw ValidationError("shape", "grid must span [0, pi]");
  const double h = kPi / static_cast<double>(m);
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    if (std::abs((points[j + 1] - points[j]) - h) > 1e-12 * kPi)
      throw ValidationError("shape", "grid spacing must be uniform");
  }
  return Grid(m);
}

std::vector<double> Grid::all_points() const {
  std::vector<double> p(m_ + 1);
  for (std::size_t j = 0; j <= m_; ++j) p[j] = point(j);
  return p;
}

}  // namespace sl
