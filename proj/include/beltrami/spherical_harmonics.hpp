#ifndef BELTRAMI_SPHERICAL_HARMONICS_HPP
#define BELTRAMI_SPHERICAL_HARMONICS_HPP

#include <map>
#include <vector>

#include "beltrami/manifold.hpp"

namespace beltrami {

// Small trivariate polynomial, monomial map (i,j,k) -> coefficient.
// Degrees stay in the single digits here, so a map is plenty.
class Poly3 {
public:
  void add(int i, int j, int k, double c) {
    if (c != 0.0) c_[{i, j, k}] += c;
  }
  double eval(const Vec3& u) const;
  Vec3 grad(const Vec3& u) const;
  Poly3 operator*(double a) const;
  Poly3 operator+(const Poly3& o) const;
  bool empty() const { return c_.empty(); }
  const std::map<std::array<int, 3>, double>& terms() const { return c_; }

private:
  std::map<std::array<int, 3>, double> c_;
};

// Real solid harmonic of degree k and order m in {-k..k}: homogeneous
// harmonic polynomial on R^3 whose restriction to the unit sphere is a
// Laplace eigenfunction with eigenvalue k(k+1).  Unnormalized:
//   m >= 0:  Re[(x+iy)^m] * Phat_k^m(z, r^2)
//   m <  0:  Im[(x+iy)^{|m|}] * Phat_k^{|m|}(z, r^2)
Poly3 solid_harmonic(int k, int m);

// Eigenfunction on the unit 2-sphere given as a combination of degree-k
// harmonics; carries its own degree for eigenvalue bookkeeping.
struct S2Harmonic {
  int degree = 0;
  Poly3 P;
  double eval(const Vec3& u) const { return P.eval(u); }
  // derivative along a tangent vector w at u (exact: the homogeneous
  // extension differentiates along curves on the sphere)
  double dir_deriv(const Vec3& u, const Vec3& w) const {
    Vec3 g = P.grad(u);
    return dot(g, w);
  }
  Vec3 sphere_grad(const Vec3& u) const {
    Vec3 g = P.grad(u);
    double gn = dot(g, u);
    return {g[0] - gn * u[0], g[1] - gn * u[1], g[2] - gn * u[2]};
  }
  double eigenvalue() const { return degree * (degree + 1.0); }
};

S2Harmonic s2_eigenfunction(int k, const std::vector<double>& coeffs);

// Hopf map h : S^3 -> S^2 (unit target), invariant under the circle action
// generated by R:  h = (2(x1 x2 + y1 y2), 2(y1 x2 - x1 y2), |z1|^2 - |z2|^2).
Vec3 hopf_map(const Vec4& x);
// differential of h applied to a tangent vector of S^3
Vec3 hopf_map_push(const Vec4& x, const Vec4& v);

}  // namespace beltrami

#endif
