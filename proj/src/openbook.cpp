#include "beltrami/openbook.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace beltrami {

AxisymmetricField book_field(BookKind kind) {
  if (kind == BookKind::pi_minus)
    return build_Vm(2) * Rational(-3, 2);
  return build_Vm(3) * Rational(2);
}

double theta_tilde_complex(const HopfPoint& p) {
  Vec4 e = p.embed();
  std::complex<double> z1(e[0], e[1]), z2(e[2], e[3]);
  std::complex<double> d = std::conj(z1) - std::conj(z2);
  std::complex<double> val = z1 * z2 * d * d;
  return std::arg(val);
}

double theta_tilde_coords(const HopfPoint& p) {
  double cs = std::cos(p.s), sn = std::sin(p.s);
  double num = cs * std::sin(p.phi1) - sn * std::sin(p.phi2);
  double den = cs * std::cos(p.phi1) - sn * std::cos(p.phi2);
  return p.phi1 + p.phi2 - 2.0 * std::atan2(num, den);
}

namespace {
// partial derivatives of Theta_tilde:
//   dTheta/dphi1 = -cos 2s / (1 - sin 2s cos(phi1 - phi2)),
//   dTheta/dphi2 = +cos 2s / (1 - sin 2s cos(phi1 - phi2)).
double theta_denominator(double s, double dphi) {
  return 1.0 - std::sin(2.0 * s) * std::cos(dphi);
}
}  // namespace

double dtheta_dt_chain(double s, double t) {
  double z = std::cos(s) * std::cos(s);
  // flow of 2 V_3 through (s, 0, 0)
  double w1 = 3.0 / 2 - 6.0 * z + 5.0 * z * z;
  double w2 = 0.5 - 4.0 * z + 5.0 * z * z;
  double phi1 = w1 * t, phi2 = w2 * t;
  double c2s = std::cos(2.0 * s);
  double den = theta_denominator(s, phi1 - phi2);
  return (-c2s * w1 + c2s * w2) / den;
}

double dtheta_dt_closed(double s, double t) {
  double c2s = std::cos(2.0 * s);
  return c2s * c2s / (1.0 - std::cos(t * c2s) * std::sin(2.0 * s));
}

PagePositivity page_area_positivity(BookKind kind, int grid) {
  if (grid < 8) throw std::invalid_argument("page_area_positivity: grid >= 8");
  PagePositivity out;
  out.min_margin = std::numeric_limits<double>::infinity();
  if (kind == BookKind::pi_minus) {
    // alpha restricted to the phi-page is (b + c)(s) dphi1 with
    // b + c = P(z) = F + (2z-1)G of the page field; the page frame value is
    // -d/ds of that, the closed form 2 sin 2s.
    AxisymmetricField v = book_field(kind);
    Polynomial P = v.F() + Polynomial{-1, 2} * v.G();
    Polynomial Pp = P.derivative();
    for (int i = 1; i < grid; ++i) {
      double s = M_PI / 2 * i / grid;
      double z = std::cos(s) * std::cos(s);
      double value = std::sin(2.0 * s) * Pp.eval(z);
      double closed = 2.0 * std::sin(2.0 * s);
      out.min_margin = std::min(out.min_margin, value);
      out.max_mismatch = std::max(out.max_mismatch, std::abs(value - closed));
    }
    return out;
  }
  // pi_tilde: transversality of the flow of 2 V_3 to the pages, away from
  // the binding torus s = pi/4 where cos 2s = 0
  for (int i = 1; i < grid; ++i) {
    double s = M_PI / 2 * i / grid;
    if (std::abs(s - M_PI / 4) < 1e-9) continue;
    for (int j = 0; j <= grid; ++j) {
      double t = 2.0 * M_PI * j / grid;
      double chain = dtheta_dt_chain(s, t);
      double closed = dtheta_dt_closed(s, t);
      out.min_margin = std::min(out.min_margin, chain);
      out.max_mismatch = std::max(out.max_mismatch, std::abs(chain - closed));
    }
  }
  return out;
}

std::vector<BindingMargin> binding_positivity(BookKind kind, int grid) {
  AxisymmetricField v = book_field(kind);
  std::vector<BindingMargin> out;
  struct Circle {
    std::string name;
    double s;
    Vec3 tangent;  // (ds, dphi1, dphi2) of the parametrization
  };
  std::vector<Circle> circles;
  if (kind == BookKind::pi_minus) {
    circles.push_back({"s=0, phi1=t", 0.0, {0, 1, 0}});
    circles.push_back({"s=pi/2, phi2=-t", M_PI / 2, {0, 0, -1}});
  } else {
    circles.push_back({"s=0, phi1=t", 0.0, {0, 1, 0}});
    circles.push_back({"s=pi/4, phi1=phi2=-t", M_PI / 4, {0, -1, -1}});
    circles.push_back({"s=pi/2, phi2=t", M_PI / 2, {0, 0, 1}});
  }
  for (const auto& c : circles) {
    BindingMargin m;
    m.component = c.name;
    m.pairing = std::numeric_limits<double>::infinity();
    auto [p, q] = v.phi_coefficients(c.s);
    double cs2 = std::cos(c.s) * std::cos(c.s);
    double sn2 = std::sin(c.s) * std::sin(c.s);
    // metric pairing of V = p dphi1 + q dphi2 with the binding tangent
    double pair = p * cs2 * c.tangent[1] + q * sn2 * c.tangent[2];
    (void)grid;  // the pairing is constant along each circle
    m.pairing = pair;
    // tangency: on the two degenerate circles the field is automatically
    // tangent; on s=pi/4 the coordinate components must be proportional to
    // the tangent vector
    if (std::abs(c.s - M_PI / 4) < 1e-12)
      m.tangency = std::abs(p * c.tangent[2] - q * c.tangent[1]);
    else
      m.tangency = 0.0;
    out.push_back(m);
  }
  return out;
}

}  // namespace beltrami
