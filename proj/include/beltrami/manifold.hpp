#ifndef BELTRAMI_MANIFOLD_HPP
#define BELTRAMI_MANIFOLD_HPP

#include <array>
#include <cmath>
#include <functional>
#include <optional>

namespace beltrami {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

// Hopf coordinates (s, phi1, phi2): the unit 3-sphere point is
// (cos s e^{i phi1}, sin s e^{i phi2}), s in [0, pi/2].
struct HopfPoint {
  double s = 0.0, phi1 = 0.0, phi2 = 0.0;
  Vec4 embed() const {
    return {std::cos(s) * std::cos(phi1), std::cos(s) * std::sin(phi1),
            std::sin(s) * std::cos(phi2), std::sin(s) * std::sin(phi2)};
  }
  bool valid() const { return s >= 0.0 && s <= M_PI / 2; }
};

// Point on the flat torus R^3/(2pi Z)^3; construction reduces mod 2pi.
struct TorusPoint {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
  TorusPoint() = default;
  TorusPoint(double a, double b, double c)
      : x1(reduce(a)), x2(reduce(b)), x3(reduce(c)) {}
  static double reduce(double x) {
    double r = std::fmod(x, 2.0 * M_PI);
    return r < 0 ? r + 2.0 * M_PI : r;
  }
  Vec3 coords() const { return {x1, x2, x3}; }
};

// Components of a vector field along the orthonormal global frame {R, X1, X2}.
struct FrameVector {
  double f = 0.0, f1 = 0.0, f2 = 0.0;
  double norm_sq() const { return f * f + f1 * f1 + f2 * f2; }
  double norm() const { return std::sqrt(norm_sq()); }
  Vec3 as_vec3() const { return {f, f1, f2}; }
};

// Orientation: {R, X1, X2} is a positive frame, so the Riemannian volume
// form carries the coefficient -sin s cos s in ds ^ dphi1 ^ dphi2.  Every
// sign in curl and in the Whitehead integral descends from this constant.
inline double orientation_coefficient(double s) {
  return -std::sin(s) * std::cos(s);
}

// The frame fields R, X1, X2 at a point, in embedding coordinates (each a
// rotation of the Hopf field).  Pairwise orthonormal everywhere.
std::array<Vec4, 3> frame_at(const HopfPoint& p);

// Hopf and anti-Hopf fields in embedding coordinates.
Vec4 hopf_R(const Vec4& x);
Vec4 anti_hopf_Rp(const Vec4& x);

using SphereScalar = std::function<double(const HopfPoint&)>;
using SphereSampler = std::function<FrameVector(const HopfPoint&)>;

enum class FdOrder { two, four };

// components (a, b, c) of the dual 1-form V^flat in (ds, dphi1, dphi2),
// from the frame components via the round metric
std::array<double, 3> one_form_s3(const SphereSampler& V, const HopfPoint& p);

// Finite-difference curl from i_{curl V} vol = d(V^flat) in Hopf
// coordinates.  The chart degenerates at s in {0, pi/2}; points whose
// stencil would leave the chart are rejected.
FrameVector curl_s3_numeric(const SphereSampler& V, const HopfPoint& p,
                            double h = 1e-3, FdOrder order = FdOrder::two);

// Laplace-Beltrami of a scalar on S^3,
//   f_ss + 2 cot(2s) f_s + f_{p1 p1}/cos^2 s + f_{p2 p2}/sin^2 s.
double laplace_beltrami_s3(const SphereScalar& f, const HopfPoint& p,
                           double h = 1e-3, FdOrder order = FdOrder::two);

// Integral of f over S^3 against the (positive) Riemannian measure:
// Gauss-Legendre in s with weight sin s cos s, trapezoid in the angles.
double quadrature_s3(const SphereScalar& f, int ns = 64, int nangle = 32);

// Integral of the 3-form  c(s,phi1,phi2) ds ^ dphi1 ^ dphi2  over oriented
// S^3.  The Hopf chart is negatively oriented, hence the global sign.
double integrate_form_s3(
    const std::function<double(double, double, double)>& coeff, int ns = 64,
    int nangle = 32);

// Integral over the flat torus, trapezoid in all three directions.
double quadrature_t3(const std::function<double(const TorusPoint&)>& f,
                     int n = 32);

// Callable vector field on T^3; grad[i], when present, returns the exact
// gradient of component i and is preferred over finite differences.
struct TorusCallableField {
  std::array<std::function<double(const TorusPoint&)>, 3> comp;
  std::array<std::function<Vec3(const TorusPoint&)>, 3> grad{};
  bool has_grad = false;
  Vec3 eval(const TorusPoint& p) const {
    return {comp[0](p), comp[1](p), comp[2](p)};
  }
};

// Standard curl on the flat torus; exact when analytic gradients are
// attached, otherwise central differences.
Vec3 curl_t3_at(const TorusCallableField& V, const TorusPoint& p,
                double h = 1e-4, FdOrder order = FdOrder::four);

// S^3 volume 2 pi^2 and T^3 volume (2 pi)^3.
inline constexpr double kSphereVolume = 2.0 * M_PI * M_PI;
inline constexpr double kTorusVolume = 8.0 * M_PI * M_PI * M_PI;

}  // namespace beltrami

#endif
