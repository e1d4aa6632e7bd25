#ifndef BELTRAMI_TORUS_FIELDS_HPP
#define BELTRAMI_TORUS_FIELDS_HPP

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "beltrami/manifold.hpp"
#include "beltrami/nodal.hpp"
#include "beltrami/polynomial.hpp"

namespace beltrami {

// Scalar in Q(sqrt(L)): p + q sqrt(L).  The curl spectrum on the torus is
// {+-|k|}, usually irrational, so eigenvalue algebra is done with the
// radicand L = lambda^2 kept symbolic and comparisons made exactly.
struct QuadExt {
  Rational p{0}, q{0};
  bool is_zero() const { return p == 0 && q == 0; }
  QuadExt operator+(const QuadExt& o) const { return {p + o.p, q + o.q}; }
  QuadExt operator-(const QuadExt& o) const { return {p - o.p, q - o.q}; }
  QuadExt operator*(const Rational& a) const { return {p * a, q * a}; }
  // multiply by (u + v sqrt(L)) for the ambient radicand L
  QuadExt mul(const QuadExt& o, const Rational& L) const {
    return {p * o.p + q * o.q * L, p * o.q + q * o.p};
  }
  bool operator==(const QuadExt& o) const { return p == o.p && q == o.q; }
  double value(double sqrtL) const { return to_double(p) + to_double(q) * sqrtL; }
};

// Vector field on T^3 whose components are trigonometric polynomials over
// Q(sqrt(L)).  Curl, eigenvalue checks and Gauss-map identities are exact;
// doubles appear only at evaluation.
class TorusTrigField {
public:
  explicit TorusTrigField(Rational lambda_sq = 1);

  const Rational& lambda_sq() const { return lam2_; }
  double sqrt_lambda() const { return std::sqrt(to_double(lam2_)); }

  // accumulate  c_cos cos(k.x) + c_sin sin(k.x)  into component comp
  void add_term(int comp, std::array<int, 3> k, QuadExt c_cos, QuadExt c_sin);

  Vec3 eval(const TorusPoint& p) const;
  double component(int i, const TorusPoint& p) const;
  Vec3 component_grad(int i, const TorusPoint& p) const;

  TorusTrigField curl() const;
  TorusTrigField scaled(const QuadExt& a) const;  // a may carry sqrt(L)
  TorusTrigField operator+(const TorusTrigField& o) const;
  TorusTrigField operator-(const TorusTrigField& o) const;
  bool is_zero() const;
  bool operator==(const TorusTrigField& o) const;

  // max over a grid of | |V| - c | for constant-norm checks
  double norm_deviation(double c, int grid = 24) const;
  // energy density of the normalized Gauss map, sum_i |grad V_i|^2 / |V|^2
  double energy_density(const TorusPoint& p) const;

  TorusCallableField callable() const;  // with exact gradients attached

  struct Term {
    std::array<int, 3> k;
    QuadExt c_cos, c_sin;
  };
  std::vector<Term> terms(int comp) const;

  std::string name;

private:
  using Key = std::array<int, 3>;
  Rational lam2_;
  std::array<std::map<Key, std::pair<QuadExt, QuadExt>>, 3> comp_;
  struct DTerm {
    double k1, k2, k3, cc, cs;
  };
  mutable std::array<std::vector<DTerm>, 3> cache_;
  mutable bool cached_ = false;
  void build_cache() const;
};

// Plane-wave spec: integer wave vector k != 0 and rational amplitude b != 0
// with b.k = 0 checked exactly.
struct WaveSpec {
  std::array<int, 3> k{};
  std::array<Rational, 3> b{};
  WaveSpec(std::array<int, 3> kk, std::array<Rational, 3> bb);
  long long k_norm_sq() const;
  double b_norm() const;
};

// V_k = cos(k.x) b + sin(k.x) (b x k)/|k|;  curl V_k = |k| V_k exactly and
// |V_k| = |b| pointwise.
TorusTrigField build_Vk(const WaveSpec& spec);

// dual field of eta_m = sin(m x3) dx1 + cos(m x3) dx2, curl = m (any sign)
TorusTrigField eta_field(int m);

// the x3-invariant lift of a torus eigenfunction:
//   V = f_{x2} d1 - f_{x1} d2 + sqrt(L) f d3,  curl V = sqrt(L) V exactly
TorusTrigField build_from_t2_eigenfunction(const T2Eigenfunction& f);

// companion pair used for collinearity examples: V dual to
// sin(m x3)dx1 + cos(m x3)dx2 and W dual to -sin(m x2)dx1 + cos(m x2)dx3
std::pair<TorusTrigField, TorusTrigField> torus_example_pair(int m);

// exact residual check curl V = (p + q sqrt(L)) V
bool is_curl_eigenfield(const TorusTrigField& V, const QuadExt& lambda);

// Unit-norm Beltrami field with nonconstant factor:
//   V = cos(F(x3) - pi/4) d1 + sin(F(x3) - pi/4) d2,  curl V = -F'(x3) V.
// F' must be periodic and strictly negative; both are verified on a grid.
struct NonconstantBeltrami {
  TorusCallableField field;
  std::function<double(double)> factor;  // of x3
  std::string name;
};
NonconstantBeltrami build_nonconstant_example(
    const std::function<double(double)>& F,
    const std::function<double(double)>& Fprime, int check_grid = 512);

void sample_csv_t3(const TorusTrigField& v, int n, std::ostream& out);

}  // namespace beltrami

#endif
