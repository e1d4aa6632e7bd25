#ifndef BELTRAMI_SPHERE_FIELDS_HPP
#define BELTRAMI_SPHERE_FIELDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include "beltrami/manifold.hpp"
#include "beltrami/orthopoly.hpp"
#include "beltrami/spherical_harmonics.hpp"

namespace beltrami {

// Rotationally symmetric field V = F(cos^2 s) R + G(cos^2 s) R' with
// polynomial profiles; the algebra below is exact in the variable z = cos^2 s.
class AxisymmetricField {
public:
  AxisymmetricField() = default;
  AxisymmetricField(Polynomial F, Polynomial G,
                    std::optional<double> lambda = std::nullopt,
                    std::string name = "");

  const Polynomial& F() const { return F_; }
  const Polynomial& G() const { return G_; }
  std::optional<double> lambda() const { return lambda_; }
  const std::string& name() const { return name_; }

  // frame components (f, f1, f2). Smooth across the Hopf link: at s = 0 and
  // s = pi/2 the X1/X2 parts carry the factor sin 2s = 0.
  FrameVector eval_frame(const HopfPoint& p) const;
  // coefficients of V along (d/dphi1, d/dphi2)
  std::pair<double, double> phi_coefficients(double s) const;
  double norm_at(double s) const;

  // |V|^2 = F^2 + 2(2z-1) F G + G^2 as an exact polynomial in z
  Polynomial norm_sq_poly() const;

  SphereSampler sampler() const;

  AxisymmetricField operator*(const Rational& a) const {
    return {F_ * a, G_ * a, std::nullopt, name_};
  }
  bool same_coefficients(const AxisymmetricField& o) const {
    return F_ == o.F_ && G_ == o.G_;
  }

private:
  Polynomial F_, G_;
  std::vector<double> fd_, gd_;  // cached double coefficients
  std::optional<double> lambda_;
  std::string name_;
};

// General C^2 field by frame components, plus whatever exact structure the
// constructor happened to know.
struct FrameField {
  std::string name;
  std::optional<double> lambda;
  SphereSampler at;
  std::optional<AxisymmetricField> axi;
  FrameVector operator()(const HopfPoint& p) const { return at(p); }
};

FrameField frame_field_of(const AxisymmetricField& v);

// Jacobi-profile eigenfields: lambda = 2m for m >= 2, and the swapped pair
// (G, F) with lambda = -2|m| for m <= -2.  |m| <= 1 is rejected; the lowest
// eigenvalues belong to the Hopf and anti-Hopf fields below.
AxisymmetricField build_Vm(int m);
AxisymmetricField hopf_field();       // F = 1, G = 0, curl = +2
AxisymmetricField anti_hopf_field();  // F = 0, G = 1, curl = -2

// Exact curl of the ansatz:
//   cu V = [(2z-1)F' + 2F + G'] R - [(2z-1)G' + 2G + F'] R'.
AxisymmetricField curl_axisymmetric(const AxisymmetricField& v);

struct MinNormResult {
  double value = 0.0;
  HopfPoint argmin;
};
// 1-D profile minimization (grid + golden section), endpoints included via
// the exact link values |F(1)+G(1)| and |F(0)-G(0)|.
MinNormResult min_norm(const AxisymmetricField& v, int grid = 256);
// grid sweep for general fields
MinNormResult min_norm(const FrameField& v, int grid = 48);

// Nonvanishing interpolation between V_m and the Hopf/anti-Hopf fields:
//   V_m^t = P_{m-1}(1-t) P_{m-1}((t-1)cos 2s) R / m^2
//         + P_m(1-t) P_{m-2}((t-1)cos 2s) R' / (m+1)^2 .
// t is snapped to a dyadic rational so the profile stays exact.
AxisymmetricField homotopy_Vtm(int m, double t);

// Circle-invariant eigenfield from an S^2 eigenfunction fbar of degree k:
//   V = lambda (fbar o h) R + X2(fbar o h) X1 - X1(fbar o h) X2,
// lambda = 2 + 2k (the eigenvalue of fbar on the radius-1/2 sphere is
// 4k(k+1) = lambda(lambda-2)).
FrameField s1_invariant_field(const S2Harmonic& fbar, int k);

// named closed-form fields: hopf, antihopf, v2, v3, nonkkps2
FrameField builtin_example(const std::string& name);

// Beltrami field with nonconstant factor on S^3:
//   V = (l d/dphi1 + k d/dphi2) / (k^2 sin^2 s + l^2 cos^2 s),
//   curl V = f V with f = 2 k l / (k^2 sin^2 s + l^2 cos^2 s) = 2 k l |V|^2.
struct SphereBeltrami {
  FrameField field;
  std::function<double(const HopfPoint&)> factor;
};
SphereBeltrami nonconstant_beltrami_kl(int k, int l);

// CSV sampling: header s,phi1,phi2,f,f1,f2 and n^3 rows.
void sample_csv(const FrameField& v, int n, std::ostream& out);

}  // namespace beltrami

#endif
