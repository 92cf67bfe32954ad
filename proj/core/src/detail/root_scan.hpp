#ifndef SLSPEC_DETAIL_ROOT_SCAN_HPP
#define SLSPEC_DETAIL_ROOT_SCAN_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "slspec/errors.hpp"
#include "slspec/spectral.hpp"

namespace sl::detail {

// Real-line zero finder shared by the direct characteristic function and its
// PD representation.  Two sweeps:
//   1. a fixed 2000-point lambda window [-window_left, rho_min^2] that
//      captures the lowest zero even when it is negative or sits at
//      lambda = 0 (where a rho-sweep cannot bracket);
//   2. a rho sweep from rho_min up to count-1+0.75 in steps <= 0.05.
// Window-phase brackets are bisected in lambda down to
// max(1e-19, 2*sqrt(|lambda|)*1e-11) so that rho is pinned to ~1e-11 even
// across lambda = 0; sweep-phase brackets are bisected in rho to 1e-11.
inline std::vector<double> scan_real_roots(
    const std::function<double(double)>& f, std::size_t count,
    double window_left) {
  if (count == 0) return {};
  constexpr double rho_min = 0.02;
  std::vector<double> roots;

  auto bisect_lambda = [&f](double a, double b, double fa, double fb) {
    for (int it = 0; it < 220; ++it) {
      const double scale = std::sqrt(std::max(std::abs(a), std::abs(b)));
      if (b - a <= std::max(1e-19, 2.0 * scale * 1e-11)) break;
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double fm = f(mid);
      if (fm == 0.0) return mid;
      if ((fa < 0.0) != (fm < 0.0)) {
        b = mid;
        fb = fm;
      } else {
        a = mid;
        fa = fm;
      }
    }
    (void)fb;
    return 0.5 * (a + b);
  };

  // Phase 1: negative/near-zero lambda window.
  {
    const std::size_t npts = 2000;
    const double lo = -window_left, hi = rho_min * rho_min;
    std::vector<double> vals(npts);
    for (std::size_t k = 0; k < npts; ++k) {
      const double x = lo + (hi - lo) * double(k) / double(npts - 1);
      vals[k] = f(x);
    }
    for (std::size_t k = 0; k + 1 < npts; ++k) {
      const double a = lo + (hi - lo) * double(k) / double(npts - 1);
      const double b = lo + (hi - lo) * double(k + 1) / double(npts - 1);
      if (vals[k] == 0.0) {
        if (k == 0)
          throw NumericalError("search-window",
                               "zero at the left edge of the lambda window; "
                               "the window may be truncating the spectrum");
        roots.push_back(a);
        continue;
      }
      if ((vals[k] < 0.0) != (vals[k + 1] < 0.0)) {
        if (k == 0)
          throw NumericalError("search-window",
                               "sign change in the leftmost window interval; "
                               "the window may be truncating the spectrum");
        roots.push_back(bisect_lambda(a, b, vals[k], vals[k + 1]));
      }
    }
  }

  // Phase 2: rho sweep.
  {
    const double cap = double(count - 1) + 0.75;
    if (cap > rho_min) {
      const auto nstep =
          std::size_t(std::ceil((cap - rho_min) / 0.05)) + 1;
      const double hr = (cap - rho_min) / double(nstep);
      auto g = [&f](double r) { return f(r * r); };
      double ra = rho_min, ga = g(ra);
      for (std::size_t k = 1; k <= nstep; ++k) {
        const double rb = rho_min + hr * double(k);
        const double gb = g(rb);
        if (ga == 0.0) {
          roots.push_back(ra * ra);
        } else if ((ga < 0.0) != (gb < 0.0)) {
          double a = ra, b = rb, fa = ga, fb = gb;
          for (int it = 0; it < 80 && b - a > 1e-11; ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = g(mid);
            if (fm == 0.0) {
              a = b = mid;
              break;
            }
            if ((fa < 0.0) != (fm < 0.0)) {
              b = mid;
              fb = fm;
            } else {
              a = mid;
              fa = fm;
            }
          }
          (void)fb;
          const double r = 0.5 * (a + b);
          roots.push_back(r * r);
        }
        ra = rb;
        ga = gb;
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  // Merge duplicates found by both sweeps near the window seam.
  std::vector<double> unique_roots;
  for (double lam : roots) {
    if (!unique_roots.empty()) {
      const auto r1 = rho_of_lambda(unique_roots.back());
      const auto r2 = rho_of_lambda(lam);
      if (std::abs(r2 - r1) < 1e-8) continue;
    }
    unique_roots.push_back(lam);
  }

  if (unique_roots.size() < count)
    throw NumericalError(
        "search-window",
        "found " + std::to_string(unique_roots.size()) + " of " +
            std::to_string(count) + " requested zeros in the scan range");
  unique_roots.resize(count);

  for (std::size_t i = 0; i + 1 < unique_roots.size(); ++i) {
    const auto r1 = rho_of_lambda(unique_roots[i]);
    const auto r2 = rho_of_lambda(unique_roots[i + 1]);
    if (std::abs(r2 - r1) < 1e-6)
      throw NumericalError("multiplicity",
                           "zeros " + std::to_string(i) + " and " +
                               std::to_string(i + 1) +
                               " are closer than 1e-6 in rho; the solver "
                               "requires simple, separated zeros");
  }
  return unique_roots;
}

}  // namespace sl::detail

#endif
