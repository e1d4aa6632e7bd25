#ifndef BELTRAMI_HOPF_INVARIANT_HPP
#define BELTRAMI_HOPF_INVARIANT_HPP

#include <functional>

#include "beltrami/sphere_fields.hpp"

namespace beltrami {

// Axisymmetric Gauss-map profile: the unit map S^3 -> S^2 of a field
// F R + G R' factors as
//   phi(s, phi1, phi2) = ( a(s), b(s) e^{i(phi1+phi2-pi/2)} ),
// a = (F + cos 2s G)/H, b = sin 2s G/H, H = sqrt(F^2 + 2 cos 2s F G + G^2),
// so a^2 + b^2 = 1.
struct AxiProfile {
  std::function<double(double)> a, b;
  std::function<double(double)> a_prime;  // analytic when available
  bool analytic = false;
};

AxiProfile gauss_profile(const AxisymmetricField& v);

// Whitehead integral of the axisymmetric map.  The pullback of the S^2 area
// form is w(s) ds ^ (dphi1 + dphi2) with w = -a'; the primitive
// A = c1 dphi1 + c2 dphi2 needs c1(pi/2) = 0 and c2(0) = 0 to stay smooth
// where the respective angle circles collapse.  The value is
//   (1/16 pi^2) Int A ^ dA
// with the global sign fixed by the orientation of the Hopf chart.
struct WhiteheadResult {
  double value = 0.0;
  int nearest = 0;
  double distance = 0.0;       // to the nearest integer
  bool under_resolved = false;  // distance > 0.01
};
WhiteheadResult whitehead_hopf_invariant(const AxiProfile& profile,
                                         int resolution = 1024);

// Closed-form Hopf class of V_m,  (sign(m)(-1)^{m+1} - 1)/2,  cross-checked
// against the Whitehead quadrature and the homotopy endpoint parity; throws
// if the three routes disagree.
int hopf_class_Vm(int m, int quad_resolution = 1024);
int hopf_class_formula(int m);

// Gauss linking integral of two closed curves in R^3 (trapezoid in both
// parameters; spectrally accurate for smooth curves).
double gauss_linking_number(
    const std::function<Vec3(double)>& c1, const std::function<Vec3(double)>& d1,
    const std::function<Vec3(double)>& c2, const std::function<Vec3(double)>& d2,
    int n = 256);

// For the pair (V_m, V_{m+1}): collinearity only on the Hopf link (exact
// polynomial check), aligned on {s=pi/2}, anti-aligned on {s=0}, and the two
// link components have |linking| = 1 by the Gauss integral after
// stereographic projection.
struct LinkingCheck {
  bool sets_on_link_only = false;
  bool plus_at_s_pi2 = false;
  bool minus_at_s_0 = false;
  double gauss_value = 0.0;
  int link_abs = 0;
};
LinkingCheck dufraine_linking_check(int m, int n = 256);

}  // namespace beltrami

#endif
