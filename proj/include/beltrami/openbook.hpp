#ifndef BELTRAMI_OPENBOOK_HPP
#define BELTRAMI_OPENBOOK_HPP

#include <string>
#include <vector>

#include "beltrami/sphere_fields.hpp"

namespace beltrami {

// The two planar open books carrying the lambda = 4 and lambda = 6
// structures:
//   pi_minus(z1, z2) = z1 conj(z2)/|z1 conj(z2)|, binding the negative Hopf
//     link {s=0, phi1=t} u {s=pi/2, phi2=-t}, pages transverse to -3/2 V_2;
//   pi_tilde(z1, z2) = z1 z2 (conj(z1)-conj(z2))^2/(|z1 z2||z1-z2|^2),
//     binding {s=0, phi1=t} u {s=pi/4, phi1=phi2=-t} u {s=pi/2, phi2=t},
//     pages transverse to 2 V_3.
enum class BookKind { pi_minus, pi_tilde };

AxisymmetricField book_field(BookKind kind);  // -3/2 V_2 or 2 V_3

// page angle of pi_tilde, two routes: arg of the complex formula and the
// coordinate expression phi1 + phi2 - 2 arctan(...)
double theta_tilde_complex(const HopfPoint& p);
double theta_tilde_coords(const HopfPoint& p);

// d/dt of Theta along the integral curve of 2 V_3 through (s, 0, 0):
// analytic chain rule through the partials of Theta, and the closed form
// cos^2 2s / (1 - cos(t cos 2s) sin 2s).
double dtheta_dt_chain(double s, double t);
double dtheta_dt_closed(double s, double t);

struct PagePositivity {
  double min_margin = 0.0;
  double max_mismatch = 0.0;  // against the closed-form value
};
// pi_minus: d(alpha) on the (-d/ds, d/dphi1 - d/dphi2) page frame, equal to
// 2 sin 2s; pi_tilde: dTheta/dt along the flow, equal to the closed form.
// Open pages only: the s-grid stays inside (0, pi/2).
PagePositivity page_area_positivity(BookKind kind, int grid = 256);

struct BindingMargin {
  std::string component;
  double pairing = 0.0;    // min over the circle of <V, gamma'>
  double tangency = 0.0;   // max residual of V - (tangential part)
};
std::vector<BindingMargin> binding_positivity(BookKind kind, int grid = 128);

}  // namespace beltrami

#endif
