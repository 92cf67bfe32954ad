#ifndef SLSPEC_DETAIL_ENTIRE_TRIG_HPP
#define SLSPEC_DETAIL_ENTIRE_TRIG_HPP

#include <cmath>
#include <complex>

// Entire functions of lambda = rho^2 built from cos/sin; every branch below
// is chosen so that no expression divides by a small rho.

namespace sl::detail {

using cplx = std::complex<double>;

// ct = cos(rho*h), st = sin(rho*h)/rho.  Series kicks in for |lambda*h^2|
// below 1e-6 where the truncation error is ~1e-30 relative.
inline void ct_st(double lambda, double h, double& ct, double& st) {
  const double q = lambda * h * h;
  if (std::abs(q) < 1e-6) {
    ct = 1.0 - 0.5 * q * (1.0 - q / 12.0 * (1.0 - q / 30.0));
    st = h * (1.0 - q / 6.0 * (1.0 - q / 20.0 * (1.0 - q / 42.0)));
    return;
  }
  if (lambda > 0.0) {
    const double r = std::sqrt(lambda);
    ct = std::cos(r * h);
    st = std::sin(r * h) / r;
  } else {
    const double k = std::sqrt(-lambda);
    ct = std::cosh(k * h);
    st = std::sinh(k * h) / k;
  }
}

inline void ct_st(const cplx& lambda, double h, cplx& ct, cplx& st) {
  const cplx q = lambda * (h * h);
  if (std::abs(q) < 1e-6) {
    ct = 1.0 - 0.5 * q * (1.0 - q / 12.0 * (1.0 - q / 30.0));
    st = h * (1.0 - q / 6.0 * (1.0 - q / 20.0 * (1.0 - q / 42.0)));
    return;
  }
  const cplx r = std::sqrt(lambda);  // ct, st are even in rho: branch-free
  ct = std::cos(r * h);
  st = std::sin(r * h) / r;
}

inline double rc(double lambda, double x) {
  double c, s;
  ct_st(lambda, x, c, s);
  return c;
}
inline double rs(double lambda, double x) {
  double c, s;
  ct_st(lambda, x, c, s);
  return s;
}
inline cplx rc(const cplx& lambda, double x) {
  cplx c, s;
  ct_st(lambda, x, c, s);
  return c;
}
inline cplx rs(const cplx& lambda, double x) {
  cplx c, s;
  ct_st(lambda, x, c, s);
  return s;
}

// sin(u)/u.
inline cplx sin_over(const cplx& u) {
  if (std::abs(u) < 1e-6) {
    const cplx u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  }
  return std::sin(u) / u;
}

// g(w) = sin(w*x)/(2w): the half-kernel of int_0^x cos(rho t)cos(theta t) dt.
// Even and entire in w.
inline cplx g_even(const cplx& w, double x) {
  if (std::abs(w) < 1e-6) {
    const cplx u2 = w * w * (x * x);
    return 0.5 * x * (1.0 - u2 / 6.0 * (1.0 - u2 / 20.0));
  }
  return std::sin(w * x) / (2.0 * w);
}

// dg/dw.  The closed form cancels catastrophically for small |w|, so a power
// series (terms (wx)^{2k}, fast for |w| < 1/2 and x <= pi) takes over there.
inline cplx g_prime(const cplx& w, double x) {
  if (std::abs(w) >= 0.5) {
    const cplx c = std::cos(w * x), s = std::sin(w * x);
    return x * c / (2.0 * w) - s / (2.0 * w * w);
  }
  const cplx w2 = w * w;
  cplx acc = 0.0;
  // 0.5 * sum_{k>=1} (-1)^k 2k w^{2k-1} x^{2k+1} / (2k+1)!
  cplx pw = w;  // w^{2k-1}
  double xp = x * x * x, fact = 6.0;  // x^{2k+1}, (2k+1)!
  double sign = -1.0;
  for (int k = 1; k <= 40; ++k) {
    const cplx term = sign * (2.0 * k) * pw * (xp / fact) * 0.5;
    acc += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
    pw *= w2;
    xp *= x * x;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    sign = -sign;
  }
  return acc;
}

// d^3g/dw^3, same branch structure.
inline cplx g_treble(const cplx& w, double x) {
  if (std::abs(w) >= 0.5) {
    const cplx c = std::cos(w * x), s = std::sin(w * x);
    const cplx w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
    return -x * x * x * c / (2.0 * w) + 1.5 * x * x * s / w2 +
           3.0 * x * c / w3 - 3.0 * s / w4;
  }
  const cplx w2 = w * w;
  cplx acc = 0.0;
  // 0.5 * sum_{k>=2} (-1)^k 2k(2k-1)(2k-2) w^{2k-3} x^{2k+1} / (2k+1)!
  cplx pw = w;  // w^{2k-3}
  double xp = x * x * x * x * x, fact = 120.0;  // x^{2k+1}, (2k+1)!
  double sign = 1.0;
  for (int k = 2; k <= 40; ++k) {
    const double c3 = 2.0 * k * (2.0 * k - 1.0) * (2.0 * k - 2.0);
    const cplx term = sign * c3 * pw * (xp / fact) * 0.5;
    acc += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
    pw *= w2;
    xp *= x * x;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    sign = -sign;
  }
  return acc;
}

// Divided difference (g(w1) - g(w2)) / (w1 - w2) without cancellation: for
// nearly equal arguments it switches to the midpoint expansion
// g'(m) + d^2 g'''(m)/24 (error O(d^4)).
inline cplx gdd(const cplx& w1, const cplx& w2, double x) {
  const cplx d = w1 - w2;
  const cplx m = 0.5 * (w1 + w2);
  if (std::abs(d) <= 1e-4 * std::max(1.0, std::abs(m))) {
    return g_prime(m, x) + d * d * g_treble(m, x) / 24.0;
  }
  return (g_even(w1, x) - g_even(w2, x)) / d;
}

// Divided difference (cos(r0 x) - cos(r1 x)) / (r0 - r1) via the product
// formula; exact for every gap size.
inline cplx cos_dd(const cplx& r0, const cplx& r1, double x) {
  const cplx m = 0.5 * (r0 + r1);
  return -std::sin(m * x) * x * sin_over(0.5 * (r0 - r1) * x);
}

}  // namespace sl::detail

#endif
