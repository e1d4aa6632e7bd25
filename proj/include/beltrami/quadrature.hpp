#ifndef BELTRAMI_QUADRATURE_HPP
#define BELTRAMI_QUADRATURE_HPP

#include <cmath>
#include <utility>
#include <vector>

namespace beltrami {

// Gauss-Legendre nodes/weights on [a,b], Newton on the Legendre recurrence.
struct GaussRule {
  std::vector<double> x, w;
};

inline GaussRule gauss_legendre(int n, double a, double b) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  const double eps = 1e-15;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = t;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < eps) break;
    }
    p0 = 1.0;
    p1 = t;
    for (int k = 2; k <= n; ++k) {
      double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    double wi = 2.0 / ((1.0 - t * t) * dp * dp);
    double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    r.x[i] = xm - xl * t;
    r.x[n - 1 - i] = xm + xl * t;
    r.w[i] = r.w[n - 1 - i] = xl * wi;
  }
  return r;
}

template <class Fn>
double gauss_integrate(const Fn& f, int n, double a, double b) {
  GaussRule r = gauss_legendre(n, a, b);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += r.w[i] * f(r.x[i]);
  return acc;
}

// Periodic trapezoid on [0, 2pi); spectrally accurate for smooth periodic f.
template <class Fn>
double trapezoid_periodic(const Fn& f, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += f(2.0 * M_PI * i / n);
  return acc * 2.0 * M_PI / n;
}

}  // namespace beltrami

#endif
