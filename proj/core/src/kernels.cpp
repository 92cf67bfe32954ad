#include "slspec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "detail/entire_trig.hpp"
#include "slspec/errors.hpp"

namespace sl {
namespace {

// Shared sample tables: sigma on the half-step grid (arguments (x+-t)/2 land
// there), its cumulative square integral, and plain node samples.
struct SigmaTables {
  std::vector<double> fine;   // sigma at k*h/2, k = 0..2m
  std::vector<double> fine2;  // sigma^2 at k*h/2
  std::vector<double> s2cum;  // int_0^{k h/2} sigma^2
  std::vector<double> node;   // sigma at k*h,  k = 0..m
  std::vector<double> node2;  // sigma^2 at nodes
  double h = 0.0;
  std::size_t m = 0;
};

SigmaTables make_tables(const Potential& sigma) {
  SigmaTables t;
  t.m = sigma.grid().cells();
  t.h = sigma.grid().spacing();
  const double hf = 0.5 * t.h;
  t.fine.resize(2 * t.m + 1);
  t.fine2.resize(2 * t.m + 1);
  for (std::size_t k = 0; k < t.fine.size(); ++k) {
    t.fine[k] = sigma.at(static_cast<double>(k) * hf);
    t.fine2[k] = t.fine[k] * t.fine[k];
  }
  t.s2cum.assign(t.fine.size(), 0.0);
  for (std::size_t k = 1; k < t.fine.size(); ++k)
    t.s2cum[k] = t.s2cum[k - 1] +
                 0.5 * hf * (t.fine[k - 1] * t.fine[k - 1] +
                             t.fine[k] * t.fine[k]);
  t.node.resize(t.m + 1);
  t.node2.resize(t.m + 1);
  for (std::size_t k = 0; k <= t.m; ++k) {
    t.node[k] = t.fine[2 * k];
    t.node2[k] = t.node[k] * t.node[k];
  }
  return t;
}

// Trapezoid over node indices [ka, kb]; empty ranges integrate to zero.
template <class F>
double trapz(std::size_t ka, std::size_t kb, double h, F f) {
  if (kb <= ka) return 0.0;
  double acc = 0.5 * (f(ka) + f(kb));
  for (std::size_t k = ka + 1; k < kb; ++k) acc += f(k);
  return acc * h;
}

double triple_abs_change(const KernelTriple& a, const KernelTriple& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.K.size(); ++j) {
    for (std::size_t i = 0; i < a.K[j].size(); ++i) {
      worst = std::max(worst, std::abs(a.K[j][i] - b.K[j][i]));
      worst = std::max(worst, std::abs(a.Nk[j][i] - b.Nk[j][i]));
    }
    worst = std::max(worst, std::abs(a.C[j] - b.C[j]));
  }
  return worst;
}

}  // namespace

KernelTriple kernel_seed(const Potential& sigma) {
  const SigmaTables t = make_tables(sigma);
  KernelTriple out;
  out.grid = sigma.grid();
  out.K.resize(t.m + 1);
  out.Nk.resize(t.m + 1);
  out.C.assign(t.m + 1, 0.0);
  for (std::size_t j = 0; j <= t.m; ++j) {
    out.K[j].resize(j + 1);
    out.Nk[j].resize(j + 1);
    for (std::size_t i = 0; i <= j; ++i) {
      const double sp = t.fine[j + i], sm = t.fine[j - i];
      const double qp = t.s2cum[j + i], qm = t.s2cum[j - i];
      out.K[j][i] = 0.5 * (sp + sm) - 0.5 * (qm + qp);
      out.Nk[j][i] = 0.5 * (sp - sm) + t.s2cum[2 * j] + 0.5 * (qm - qp);
    }
    out.C[j] = -t.s2cum[2 * j];
  }
  return out;
}

KernelTriple picard_step(const KernelTriple& prev, const Potential& sigma) {
  if (!(prev.grid == sigma.grid()))
    throw ValidationError("grid", "kernel iterate and sigma share one grid");
  const SigmaTables t = make_tables(sigma);
  const std::size_t m = t.m;
  const double h = t.h;
  KernelTriple next = kernel_seed(sigma);

  // cs[e] = int_0^{e h} C(s) sigma(s) ds, used by every row.
  std::vector<double> cs(m + 1, 0.0);
  for (std::size_t e = 1; e <= m; ++e)
    cs[e] = cs[e - 1] + 0.5 * h * (prev.C[e - 1] * t.node[e - 1] +
                                   prev.C[e] * t.node[e]);

  // The three oblique line integrals through a triangular table F along the
  // characteristics of the wave operator; wn holds node weights (sigma for
  // the direct terms, sigma^2 inside the xi blocks), wf the same weight on
  // the half-step table.  Lines 2 and 3 start at (x -+ t)/2, which falls
  // mid-cell whenever the node distance d is odd; that endpoint lies on the
  // triangle diagonal, so the opening half-cell is closed with the
  // interpolated diagonal value (dropping it costs a first-order error).
  const auto& K = prev.K;
  const auto& N = prev.Nk;
  auto half_open = [&](const std::vector<std::vector<double>>& F,
                       std::size_t d, const std::vector<double>& wn,
                       const std::vector<double>& wf) {
    const std::size_t lo = d / 2;
    const double fa = 0.5 * (F[lo][lo] + F[lo + 1][lo + 1]) * wf[d];
    const double fb = F[lo + 1][d - lo - 1] * wn[lo + 1];
    return 0.25 * h * (fa + fb);
  };
  auto line1 = [&](const std::vector<std::vector<double>>& F, std::size_t j,
                   std::size_t i, const std::vector<double>& wn) {
    return trapz(j - i, j, h,
                 [&](std::size_t k) { return F[k][i + k - j] * wn[k]; });
  };
  auto line2 = [&](const std::vector<std::vector<double>>& F, std::size_t j,
                   std::size_t i, const std::vector<double>& wn,
                   const std::vector<double>& wf) {
    const std::size_t d = j - i;
    double acc = trapz((d + 1) / 2, d, h,
                       [&](std::size_t k) { return F[k][d - k] * wn[k]; });
    if (d % 2 == 1) acc += half_open(F, d, wn, wf);
    return acc;
  };
  auto line3 = [&](const std::vector<std::vector<double>>& F, std::size_t j,
                   std::size_t i, const std::vector<double>& wn,
                   const std::vector<double>& wf) {
    const std::size_t d = j + i;
    double acc = trapz((d + 1) / 2, j, h,
                       [&](std::size_t k) { return F[k][d - k] * wn[k]; });
    if (d % 2 == 1) acc += half_open(F, d, wn, wf);
    return acc;
  };

  std::vector<double> gk(m + 1), gn(m + 1), qk(m + 1), qn(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    // xi blocks: the same three lines through K weighted by sigma^2,
    // integrated once more in xi from t up to x (reverse cumulative).
    for (std::size_t e = 0; e <= j; ++e) {
      const double g1 = line1(K, j, e, t.node2);
      const double g2 = line2(K, j, e, t.node2, t.fine2);
      const double g3 = line3(K, j, e, t.node2, t.fine2);
      gk[e] = g1 + g2 - g3;
      gn[e] = g1 + g2 + g3;
    }
    qk[j] = qn[j] = 0.0;
    for (std::size_t e = j; e-- > 0;) {
      qk[e] = qk[e + 1] + 0.5 * h * (gk[e] + gk[e + 1]);
      qn[e] = qn[e + 1] + 0.5 * h * (gn[e] + gn[e + 1]);
    }
    for (std::size_t i = 0; i <= j; ++i) {
      const double k1 = line1(K, j, i, t.node);
      const double k2 = line2(K, j, i, t.node, t.fine);
      const double k3 = line3(K, j, i, t.node, t.fine);
      const double n1 = line1(N, j, i, t.node);
      const double n2 = line2(N, j, i, t.node, t.fine);
      const double n3 = line3(N, j, i, t.node, t.fine);
      next.K[j][i] += 0.5 * (k1 + k2 + k3) - 0.5 * qk[i] +
                      0.5 * (n1 - n2 - n3) - cs[j - i];
      next.Nk[j][i] += 0.5 * (-k1 - k2 + k3) + 0.5 * qn[i] +
                       0.5 * (-n1 + n2 - n3) + cs[j - i];
    }
    next.C[j] += -0.5 * qn[0] - cs[j];
  }

  next.iterations = prev.iterations + 1;
  next.residual = triple_abs_change(next, prev);
  return next;
}

KernelTriple build_kernels(const Potential& sigma, double tol,
                           std::size_t max_iter) {
  KernelTriple cur = kernel_seed(sigma);
  double first = -1.0;
  for (std::size_t n = 1; n <= max_iter; ++n) {
    KernelTriple next = picard_step(cur, sigma);
    if (first < 0.0) first = std::max(next.residual, 1e-300);
    if (next.residual > 1e3 * first)
      throw NumericalError("divergence",
                           "kernel iteration residual grew by more than 1e3 "
                           "over its first value");
    cur = std::move(next);
    if (cur.residual <= tol) return cur;
  }
  throw NumericalError("iteration-budget",
                       "kernel iteration did not reach tolerance within the "
                       "iteration budget");
}

RepValue rep_phi(const KernelTriple& kernels, std::complex<double> lambda,
                 double x) {
  const Grid& g = kernels.grid;
  const double h = g.spacing();
  const auto jj = static_cast<long long>(std::llround(x / h));
  if (jj < 0 || jj > static_cast<long long>(g.cells()) ||
      std::abs(x - static_cast<double>(jj) * h) > 1e-9)
    throw ValidationError("grid", "rep_phi wants a grid-point abscissa");
  const auto j = static_cast<std::size_t>(jj);

  std::complex<double> ik = 0.0, in = 0.0;
  if (j > 0) {
    auto fk = [&](std::size_t i) {
      return kernels.K[j][i] * detail::rc(lambda, g.point(i));
    };
    auto fn = [&](std::size_t i) {
      return kernels.Nk[j][i] * detail::rs(lambda, g.point(i));
    };
    ik = 0.5 * (fk(0) + fk(j));
    in = 0.5 * (fn(0) + fn(j));
    for (std::size_t i = 1; i < j; ++i) {
      ik += fk(i);
      in += fn(i);
    }
    ik *= h;
    in *= h;
  }
  RepValue out;
  out.phi = detail::rc(lambda, x) + ik;
  out.phi1 = -lambda * detail::rs(lambda, x) + lambda * in + kernels.C[j];
  return out;
}

CharacteristicPD delta_representation(const KernelTriple& kernels,
                                      const Potential& sigma, double H) {
  if (!(kernels.grid == sigma.grid()))
    throw ValidationError("grid", "kernels and sigma share one grid");
  const Grid& g = kernels.grid;
  const std::size_t m = g.cells();
  const double h = g.spacing();

  // tail[i] = int_{t_i}^{pi} K(pi, s) ds.
  std::vector<double> tail(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;)
    tail[i] = tail[i + 1] + 0.5 * h * (kernels.K[m][i] + kernels.K[m][i + 1]);

  CharacteristicPD out;
  out.grid = g;
  out.P.resize(m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    out.P[i] = kernels.Nk[m][i] - H * (1.0 + tail[i]);
  out.D = kernels.C[m] + H * (1.0 + tail[0]);
  return out;
}

}  // namespace sl
