#include "beltrami/spherical_harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace beltrami {

double Poly3::eval(const Vec3& u) const {
  double acc = 0.0;
  for (const auto& [e, c] : c_)
    acc += c * std::pow(u[0], e[0]) * std::pow(u[1], e[1]) *
           std::pow(u[2], e[2]);
  return acc;
}

Vec3 Poly3::grad(const Vec3& u) const {
  Vec3 g{0, 0, 0};
  for (const auto& [e, c] : c_) {
    double m0 = std::pow(u[0], e[0]), m1 = std::pow(u[1], e[1]),
           m2 = std::pow(u[2], e[2]);
    if (e[0] > 0) g[0] += c * e[0] * std::pow(u[0], e[0] - 1) * m1 * m2;
    if (e[1] > 0) g[1] += c * e[1] * m0 * std::pow(u[1], e[1] - 1) * m2;
    if (e[2] > 0) g[2] += c * e[2] * m0 * m1 * std::pow(u[2], e[2] - 1);
  }
  return g;
}

Poly3 Poly3::operator*(double a) const {
  Poly3 r;
  for (const auto& [e, c] : c_) r.add(e[0], e[1], e[2], c * a);
  return r;
}

Poly3 Poly3::operator+(const Poly3& o) const {
  Poly3 r = *this;
  for (const auto& [e, c] : o.c_) r.add(e[0], e[1], e[2], c);
  return r;
}

namespace {

Poly3 poly_mul(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      r.add(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ca * cb);
  return r;
}

// Re/Im of (x+iy)^m via the binomial expansion.
Poly3 sector_poly(int m, bool imaginary) {
  Poly3 r;
  double binom = 1.0;
  for (int j = 0; j <= m; ++j) {
    // i^j contributes to Re when j even, Im when j odd
    int quarter = j % 4;
    double sign = (quarter == 0 || quarter == 1) ? 1.0 : -1.0;
    bool is_im = (j % 2 == 1);
    if (is_im == imaginary) r.add(m - j, j, 0, sign * binom);
    binom = binom * (m - j) / (j + 1);
  }
  return r;
}

}  // namespace

Poly3 solid_harmonic(int k, int m) {
  if (k < 0 || std::abs(m) > k)
    throw std::invalid_argument("solid_harmonic: need 0 <= |m| <= k");
  int mm = std::abs(m);
  // homogenized associated Legendre factor Phat_k^m(z, r^2), degree k-m:
  //   (k-m) Phat_k = (2k-1) z Phat_{k-1} - (k+m-1) r^2 Phat_{k-2}
  Poly3 r2;
  r2.add(2, 0, 0, 1.0);
  r2.add(0, 2, 0, 1.0);
  r2.add(0, 0, 2, 1.0);
  double dfact = 1.0;
  for (int j = 3; j <= 2 * mm - 1; j += 2) dfact *= j;
  Poly3 pm2;  // Phat_{mm}^{mm}
  pm2.add(0, 0, 0, dfact);
  if (k == mm) return poly_mul(sector_poly(mm, m < 0), pm2);
  Poly3 z;
  z.add(0, 0, 1, 1.0);
  Poly3 pm1 = poly_mul(z, pm2) * (2.0 * mm + 1.0);  // Phat_{mm+1}^{mm}
  for (int kk = mm + 2; kk <= k; ++kk) {
    Poly3 pk = (poly_mul(z, pm1) * (2.0 * kk - 1.0) +
                poly_mul(r2, pm2) * (-(kk + mm - 1.0))) *
               (1.0 / (kk - mm));
    pm2 = pm1;
    pm1 = pk;
  }
  return poly_mul(sector_poly(mm, m < 0), pm1);
}

S2Harmonic s2_eigenfunction(int k, const std::vector<double>& coeffs) {
  if (k < 0) throw std::invalid_argument("s2_eigenfunction: k must be >= 0");
  if (coeffs.size() != static_cast<std::size_t>(2 * k + 1))
    throw std::invalid_argument("s2_eigenfunction: need 2k+1 coefficients");
  S2Harmonic h;
  h.degree = k;
  for (int m = -k; m <= k; ++m) {
    double c = coeffs[m + k];
    if (c != 0.0) h.P = h.P + solid_harmonic(k, m) * c;
  }
  return h;
}

Vec3 hopf_map(const Vec4& x) {
  return {2.0 * (x[0] * x[2] + x[1] * x[3]), 2.0 * (x[1] * x[2] - x[0] * x[3]),
          x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3]};
}

Vec3 hopf_map_push(const Vec4& x, const Vec4& v) {
  return {2.0 * (v[0] * x[2] + x[0] * v[2] + v[1] * x[3] + x[1] * v[3]),
          2.0 * (v[1] * x[2] + x[1] * v[2] - v[0] * x[3] - x[0] * v[3]),
          2.0 * (x[0] * v[0] + x[1] * v[1] - x[2] * v[2] - x[3] * v[3])};
}

}  // namespace beltrami
