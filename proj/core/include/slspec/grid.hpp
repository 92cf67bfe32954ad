#ifndef SLSPEC_GRID_HPP
#define SLSPEC_GRID_HPP

#include <cstddef>
#include <numbers>
#include <vector>

namespace sl {

inline constexpr double kPi = std::numbers::pi_v<double>;

// Uniform grid on [0, pi]: m cells, m+1 points.  All discretized objects in
// the library live on one of these.
class Grid {
public:
  explicit Grid(std::size_t cells);

  // Validates spacing uniformity (relative 1e-12) and endpoints.
  static Grid from_points(const std::vector<double>& points);

  std::size_t cells() const noexcept { return m_; }
  std::size_t points() const noexcept { return m_ + 1; }
  double spacing() const noexcept { return h_; }
  double point(std::size_t j) const noexcept { return j == m_ ? kPi : h_ * static_cast<double>(j); }
  double midpoint(std::size_t cell) const noexcept { return h_ * (static_cast<double>(cell) + 0.5); }
  std::vector<double> all_points() const;

  bool operator==(const Grid& other) const noexcept { return m_ == other.m_; }

private:
  std::size_t m_;
  double h_;
};

}  // namespace sl

#endif
