#include "beltrami/hopf_invariant.hpp"

#include <cmath>
#include <stdexcept>

#include "beltrami/quadrature.hpp"

namespace beltrami {

AxiProfile gauss_profile(const AxisymmetricField& v) {
  // a = P(z)/sqrt(Q(z)), b = sin 2s G/sqrt(Q), z = cos^2 s,
  // P = F + (2z-1)G, Q = F^2 + 2(2z-1)FG + G^2
  Polynomial P = v.F() + Polynomial{-1, 2} * v.G();
  Polynomial Q = v.norm_sq_poly();
  Polynomial Pp = P.derivative(), Qp = Q.derivative();
  auto Pd = P.coeffs_double();
  auto Qd = Q.coeffs_double();
  auto Ppd = Pp.coeffs_double();
  auto Qpd = Qp.coeffs_double();
  auto Gd = v.G().coeffs_double();
  auto horner = [](const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  AxiProfile prof;
  prof.analytic = true;
  prof.a = [Pd, Qd, horner](double s) {
    double z = std::cos(s) * std::cos(s);
    double q = horner(Qd, z);
    if (q <= 0.0) throw std::domain_error("gauss_profile: field vanishes");
    return horner(Pd, z) / std::sqrt(q);
  };
  prof.b = [Gd, Qd, horner](double s) {
    double z = std::cos(s) * std::cos(s);
    double q = horner(Qd, z);
    if (q <= 0.0) throw std::domain_error("gauss_profile: field vanishes");
    return std::sin(2.0 * s) * horner(Gd, z) / std::sqrt(q);
  };
  // d/ds [P/sqrt(Q)] = -sin 2s (P'Q - P Q'/2) / Q^{3/2}
  prof.a_prime = [Pd, Qd, Ppd, Qpd, horner](double s) {
    double z = std::cos(s) * std::cos(s);
    double q = horner(Qd, z);
    double num = horner(Ppd, z) * q - 0.5 * horner(Pd, z) * horner(Qpd, z);
    return -std::sin(2.0 * s) * num / (q * std::sqrt(q));
  };
  return prof;
}

WhiteheadResult whitehead_hopf_invariant(const AxiProfile& profile,
                                         int resolution) {
  if (resolution < 8)
    throw std::invalid_argument("whitehead_hopf_invariant: resolution >= 8");
  auto w = [&](double s) {
    if (profile.analytic) return -profile.a_prime(s);
    // profiles are smooth functions of cos^2 s, defined for all real s
    const double h = 1e-4;
    return -(-profile.a(s + 2 * h) + 8.0 * profile.a(s + h) -
             8.0 * profile.a(s - h) + profile.a(s - 2 * h)) /
           (12.0 * h);
  };

  // composite Gauss panels with running prefix integrals of w, so that the
  // primitive coefficients c2(s) = Int_0^s w and c1(s) = -Int_s^{pi/2} w are
  // available at every outer node
  const int K = resolution;
  const double L = M_PI / 2;
  GaussRule unit = gauss_legendre(4, 0.0, 1.0);
  std::vector<double> panel_int(K);
  double width = L / K;
  for (int i = 0; i < K; ++i) {
    double a0 = i * width, acc = 0.0;
    for (int g = 0; g < 4; ++g) acc += unit.w[g] * w(a0 + unit.x[g] * width);
    panel_int[i] = acc * width;
  }
  std::vector<double> prefix(K + 1, 0.0);
  for (int i = 0; i < K; ++i) prefix[i + 1] = prefix[i] + panel_int[i];
  const double total = prefix[K];

  double integral = 0.0;  // of w (c2 - c1) ds
  for (int i = 0; i < K; ++i) {
    double a0 = i * width;
    for (int g = 0; g < 4; ++g) {
      double s = a0 + unit.x[g] * width;
      // partial pieces within the panel
      double fwd = 0.0, bwd = 0.0;
      for (int gg = 0; gg < 4; ++gg) {
        fwd += unit.w[gg] * w(a0 + unit.x[gg] * (s - a0));
        bwd += unit.w[gg] * w(s + unit.x[gg] * (a0 + width - s));
      }
      double c2 = prefix[i] + fwd * (s - a0);
      double c1 = -(bwd * (a0 + width - s) + (total - prefix[i + 1]));
      integral += unit.w[g] * width * w(s) * (c2 - c1);
    }
  }
  // (1/16pi^2) Int A ^ dA, with the (2pi)^2 angular factor and the negative
  // orientation of the Hopf chart
  WhiteheadResult res;
  res.value = -integral / 4.0;
  res.nearest = static_cast<int>(std::lround(res.value));
  res.distance = std::abs(res.value - res.nearest);
  res.under_resolved = res.distance > 0.01;
  return res;
}

int hopf_class_formula(int m) {
  if (std::abs(m) < 2)
    throw std::invalid_argument("hopf_class_formula: |m| >= 2 required");
  int sign = m > 0 ? 1 : -1;
  int parity = (std::abs(m) + 1) % 2 == 0 ? 1 : -1;  // (-1)^{m+1}
  return (sign * parity - 1) / 2;
}

int hopf_class_Vm(int m, int quad_resolution) {
  int formula = hopf_class_formula(m);
  AxisymmetricField v = build_Vm(m);
  WhiteheadResult wh = whitehead_hopf_invariant(gauss_profile(v), quad_resolution);
  if (wh.nearest != formula || wh.under_resolved)
    throw std::runtime_error(
        "hopf_class_Vm: Whitehead quadrature disagrees with the closed "
        "formula");
  if (m >= 2) {
    // endpoint of the deformation family: multiple of R for odd m (class 0),
    // of R' for even m (class -1)
    AxisymmetricField end = homotopy_Vtm(m, 1.0);
    bool r_part = !end.F().is_zero();
    bool rp_part = !end.G().is_zero();
    int endpoint_class = r_part && !rp_part ? 0 : (!r_part && rp_part ? -1 : 99);
    if (endpoint_class != formula)
      throw std::runtime_error(
          "hopf_class_Vm: homotopy endpoint parity disagrees with the closed "
          "formula");
  }
  return formula;
}

double gauss_linking_number(
    const std::function<Vec3(double)>& c1, const std::function<Vec3(double)>& d1,
    const std::function<Vec3(double)>& c2, const std::function<Vec3(double)>& d2,
    int n) {
  double acc = 0.0;
  double h = 2.0 * M_PI / n;
  for (int i = 0; i < n; ++i) {
    double t = h * i;
    Vec3 p1 = c1(t), v1 = d1(t);
    for (int j = 0; j < n; ++j) {
      double u = h * j;
      Vec3 p2 = c2(u), v2 = d2(u);
      Vec3 r = {p1[0] - p2[0], p1[1] - p2[1], p1[2] - p2[2]};
      double rn = norm(r);
      acc += dot(cross(v1, v2), r) / (rn * rn * rn);
    }
  }
  return acc * h * h / (4.0 * M_PI);
}

namespace {

// stereographic projection of S^3 from a pole avoiding both link circles
struct Stereo {
  Vec4 pole;
  std::array<Vec4, 3> basis;
  Stereo() {
    pole = {0.5, 0.5, 0.5, 0.5};
    // Gram-Schmidt for an orthonormal basis of pole-perp
    std::array<Vec4, 3> seed = {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0},
                                Vec4{0, 0, 1, 0}};
    int have = 0;
    for (auto v : seed) {
      double c = dot(v, pole);
      for (int i = 0; i < 4; ++i) v[i] -= c * pole[i];
      for (int b = 0; b < have; ++b) {
        double d = dot(v, basis[b]);
        for (int i = 0; i < 4; ++i) v[i] -= d * basis[b][i];
      }
      double nv = norm(v);
      for (int i = 0; i < 4; ++i) v[i] /= nv;
      basis[have++] = v;
    }
  }
  Vec3 project(const Vec4& x) const {
    double denom = 1.0 - dot(x, pole);
    return {dot(x, basis[0]) / denom, dot(x, basis[1]) / denom,
            dot(x, basis[2]) / denom};
  }
  Vec3 push(const Vec4& x, const Vec4& v) const {
    double denom = 1.0 - dot(x, pole);
    double dd = dot(v, pole);
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
      double num = dot(x, basis[i]);
      out[i] = (dot(v, basis[i]) * denom + num * dd) / (denom * denom);
    }
    return out;
  }
};

}  // namespace

LinkingCheck dufraine_linking_check(int m, int n) {
  if (m < 2)
    throw std::invalid_argument("dufraine_linking_check: m must be >= 2");
  LinkingCheck out;
  EigenPair a = eigenpair(m), b = eigenpair(m + 1);
  // collinearity away from the link requires G_m F_{m+1} = F_m G_{m+1}
  Polynomial D = a.G * b.F - a.F * b.G;
  RootSet roots = isolate_roots(D, 0.0, 1.0, 1e-12);
  out.sets_on_link_only = roots.roots.empty();
  if (!out.sets_on_link_only)
    throw std::runtime_error(
        "dufraine_linking_check: collinearity found off the Hopf link");
  // alignment signs on the two link circles
  double vm0 = to_double(a.F.eval(Rational(1)) + a.G.eval(Rational(1)));
  double vp0 = to_double(b.F.eval(Rational(1)) + b.G.eval(Rational(1)));
  double vm1 = to_double(a.F.eval(Rational(0)) - a.G.eval(Rational(0)));
  double vp1 = to_double(b.F.eval(Rational(0)) - b.G.eval(Rational(0)));
  out.minus_at_s_0 = vm0 * vp0 < 0.0;
  out.plus_at_s_pi2 = vm1 * vp1 > 0.0;

  Stereo st;
  auto gamma1 = [&st](double t) {
    return st.project({std::cos(t), std::sin(t), 0.0, 0.0});
  };
  auto dgamma1 = [&st](double t) {
    Vec4 x = {std::cos(t), std::sin(t), 0.0, 0.0};
    Vec4 v = {-std::sin(t), std::cos(t), 0.0, 0.0};
    return st.push(x, v);
  };
  auto gamma2 = [&st](double t) {
    return st.project({0.0, 0.0, std::cos(t), std::sin(t)});
  };
  auto dgamma2 = [&st](double t) {
    Vec4 x = {0.0, 0.0, std::cos(t), std::sin(t)};
    Vec4 v = {0.0, 0.0, -std::sin(t), std::cos(t)};
    return st.push(x, v);
  };
  out.gauss_value = gauss_linking_number(gamma1, dgamma1, gamma2, dgamma2, n);
  out.link_abs = static_cast<int>(std::lround(std::abs(out.gauss_value)));
  return out;
}

}  // namespace beltrami
