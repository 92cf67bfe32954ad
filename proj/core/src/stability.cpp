#include "slspec/stability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detail/entire_trig.hpp"
#include "detail/root_scan.hpp"
#include "slspec/errors.hpp"
#include "slspec/forward.hpp"
#include "slspec/quadrature.hpp"

namespace sl {
namespace {

// Delta from (P, D) for real lambda, all-real arithmetic (the zero scan
// calls this thousands of times).
double char_from_pd_real(const CharacteristicPD& pd, double lambda) {
  const Grid& g = pd.grid;
  double v = 0.0;
  double rcu = detail::rc(lambda, 0.0), rsu = detail::rs(lambda, 0.0);
  for (std::size_t j = 0; j < g.cells(); ++j) {
    const double u = g.point(j), w = g.point(j + 1);
    const double rcv = detail::rc(lambda, w), rsv = detail::rs(lambda, w);
    const double b = (pd.P[j + 1] - pd.P[j]) / (w - u);
    const double a = pd.P[j] - b * u;
    v += a * (rcu - rcv) + b * (u * rcu - w * rcv + rsv - rsu);
    rcu = rcv;
    rsu = rsv;
  }
  return -lambda * detail::rs(lambda, kPi) + v + pd.D;
}

double pd_window_left(const CharacteristicPD& pd) {
  std::vector<double> p2(pd.P.size());
  for (std::size_t j = 0; j < pd.P.size(); ++j) p2[j] = pd.P[j] * pd.P[j];
  const double pnorm = std::sqrt(integrate_grid(p2, pd.grid));
  const double b = 1.0 + pnorm + std::abs(pd.D);
  return b * b + 1.0;
}

// Deterministic U(-1, 1) independent of library distribution internals.
double unit_draw(std::mt19937_64& rng) {
  const double u =
      static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  return 2.0 * u - 1.0;
}

}  // namespace

std::complex<double> char_from_pd(const CharacteristicPD& pd,
                                  std::complex<double> lambda) {
  if (pd.P.size() != pd.grid.points())
    throw ValidationError("shape", "P needs one value per grid point");
  if (lambda.imag() == 0.0) return char_from_pd_real(pd, lambda.real());
  const Grid& g = pd.grid;
  std::complex<double> v = 0.0;
  std::complex<double> rcu = detail::rc(lambda, 0.0);
  std::complex<double> rsu = detail::rs(lambda, 0.0);
  for (std::size_t j = 0; j < g.cells(); ++j) {
    const double u = g.point(j), w = g.point(j + 1);
    const std::complex<double> rcv = detail::rc(lambda, w);
    const std::complex<double> rsv = detail::rs(lambda, w);
    const double b = (pd.P[j + 1] - pd.P[j]) / (w - u);
    const double a = pd.P[j] - b * u;
    v += a * (rcu - rcv) + b * (u * rcu - w * rcv + rsv - rsu);
    rcu = rcv;
    rsu = rsv;
  }
  return -lambda * detail::rs(lambda, kPi) + v + pd.D;
}

std::vector<std::complex<double>> zeros_from_pd(const CharacteristicPD& pd,
                                                std::size_t count) {
  if (pd.P.size() != pd.grid.points())
    throw ValidationError("shape", "P needs one value per grid point");
  auto f = [&pd](double lam) { return char_from_pd_real(pd, lam); };
  const auto lams = detail::scan_real_roots(f, count, pd_window_left(pd));
  std::vector<std::complex<double>> rhos(lams.size());
  for (std::size_t n = 0; n < lams.size(); ++n)
    rhos[n] = rho_of_lambda(lams[n]);
  return rhos;
}

PerturbationSummary perturbation_experiment(const CharacteristicPD& base,
                                            std::size_t trials, double delta,
                                            std::size_t count,
                                            std::uint64_t seed) {
  const auto z0 = zeros_from_pd(base, count);
  for (std::size_t n = 0; n + 1 < z0.size(); ++n)
    if (std::abs(z0[n + 1] - z0[n]) < 1e-3)
      throw ValidationError("separation",
                            "base zeros closer than 1e-3 in rho cannot be "
                            "matched reliably");

  const Grid& g = base.grid;
  PerturbationSummary out;
  out.delta = delta;
  out.seed = seed;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
    double ac[9], bc[8];
    for (double& c : ac) c = unit_draw(rng);
    for (double& c : bc) c = unit_draw(rng);

    std::vector<double> bump(g.points());
    for (std::size_t j = 0; j < g.points(); ++j) {
      const double t = g.point(j);
      double p = 0.0;
      for (int k = 0; k <= 8; ++k) p += ac[k] * std::cos(k * t);
      for (int k = 1; k <= 8; ++k) p += bc[k - 1] * std::sin(k * t);
      bump[j] = p;
    }
    std::vector<double> b2(bump.size());
    for (std::size_t j = 0; j < bump.size(); ++j) b2[j] = bump[j] * bump[j];
    const double norm = std::sqrt(integrate_grid(b2, g));
    const double scale = delta / norm;

    CharacteristicPD pert = base;
    for (std::size_t j = 0; j < g.points(); ++j)
      pert.P[j] += scale * bump[j];

    const auto z1 = zeros_from_pd(pert, count);
    if (z1.size() != z0.size())
      throw NumericalError("zero-matching",
                           "perturbed zero count differs from the base");

    // One-to-one nearest matching within rho-radius 0.1.
    std::vector<std::size_t> match(z0.size());
    std::vector<bool> taken(z1.size(), false);
    for (std::size_t n = 0; n < z0.size(); ++n) {
      std::size_t hits = 0, pick = 0;
      for (std::size_t k = 0; k < z1.size(); ++k) {
        if (std::abs(z1[k] - z0[n]) <= 0.1) {
          ++hits;
          pick = k;
        }
      }
      if (hits != 1 || taken[pick])
        throw NumericalError("zero-matching",
                             "zero matching is not one-to-one within "
                             "rho-radius 0.1");
      taken[pick] = true;
      match[n] = pick;
    }

    PerturbationTrial t;
    double acc = 0.0;
    for (std::size_t n = 0; n < z0.size(); ++n) {
      const double d = std::abs(z1[match[n]] - z0[n]);
      acc += d * d;
    }
    t.lhs = std::sqrt(acc);
    t.rhs = delta;  // ||dP||_L2 by construction; dD = 0
    t.ratio = t.lhs / t.rhs;
    out.trials.push_back(t);
    out.max_ratio = std::max(out.max_ratio, t.ratio);
    out.mean_ratio += t.ratio;
  }
  if (!out.trials.empty())
    out.mean_ratio /= static_cast<double>(out.trials.size());
  return out;
}

std::vector<CoefficientStabilityPoint> coefficient_stability_experiment(
    const Potential& sigma, double H, const std::vector<double>& sizes,
    std::size_t count) {
  const Grid& g = sigma.grid();
  const SpectralSequence base = forward_spectral_data(sigma, H, count);

  std::vector<double> bump(g.cells());
  double nrm2 = 0.0;
  for (std::size_t c = 0; c < g.cells(); ++c) {
    bump[c] = std::sin(g.midpoint(c));
    nrm2 += bump[c] * bump[c] * g.spacing();
  }
  const double nrm = std::sqrt(nrm2);
  for (double& v : bump) v /= nrm;

  std::vector<CoefficientStabilityPoint> out;
  for (double s : sizes) {
    std::vector<double> vals = sigma.values();
    for (std::size_t c = 0; c < vals.size(); ++c) vals[c] += s * bump[c];
    const Potential sig_s(g, std::move(vals), sigma.shift());
    const SpectralSequence pert = forward_spectral_data(sig_s, H + s, count);

    double acc = 0.0;
    for (std::size_t n = 0; n < base.size(); ++n) {
      const double d = std::abs(pert[n].rho() - base[n].rho()) +
                       std::abs(pert[n].alpha - base[n].alpha);
      acc += d * d;
    }
    out.push_back({s, std::sqrt(acc)});
  }
  return out;
}

}  // namespace sl
