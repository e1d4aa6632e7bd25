#include "beltrami/manifold.hpp"

#include <stdexcept>

#include "beltrami/quadrature.hpp"

namespace beltrami {

Vec4 hopf_R(const Vec4& x) { return {-x[1], x[0], -x[3], x[2]}; }
Vec4 anti_hopf_Rp(const Vec4& x) { return {-x[1], x[0], x[3], -x[2]}; }

std::array<Vec4, 3> frame_at(const HopfPoint& p) {
  Vec4 x = p.embed();
  Vec4 R = hopf_R(x);
  Vec4 X1 = {-x[2], x[3], x[0], -x[1]};
  Vec4 X2 = {-x[3], -x[2], x[1], x[0]};
  return {R, X1, X2};
}

namespace {

struct Stencil {
  // first and second derivative of a 1-D callable at 0 with step h
  template <class Fn>
  static double d1(const Fn& f, double h, FdOrder order) {
    if (order == FdOrder::two) return (f(h) - f(-h)) / (2.0 * h);
    return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12.0 * h);
  }
  template <class Fn>
  static double d2(const Fn& f, double h, FdOrder order) {
    if (order == FdOrder::two) return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    return (-f(2 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) -
            f(-2 * h)) /
           (12.0 * h * h);
  }
};

void require_chart_margin(const HopfPoint& p, double h, FdOrder order) {
  double reach = (order == FdOrder::two ? 1.0 : 2.0) * h;
  if (p.s - reach < 0.0 || p.s + reach > M_PI / 2)
    throw std::domain_error(
        "finite differences degenerate at the Hopf link: s must lie in "
        "[reach, pi/2 - reach]");
  if (h <= 0.0) throw std::invalid_argument("step h must be positive");
}

}  // namespace

std::array<double, 3> one_form_s3(const SphereSampler& V, const HopfPoint& p) {
  FrameVector v = V(p);
  double psi = p.phi1 + p.phi2;
  double cs = std::cos(p.s), sn = std::sin(p.s);
  double cp = std::cos(psi), sp = std::sin(psi);
  double t = v.f1 * sp - v.f2 * cp;
  return {v.f1 * cp + v.f2 * sp, cs * cs * v.f + sn * cs * t,
          sn * sn * v.f - sn * cs * t};
}

FrameVector curl_s3_numeric(const SphereSampler& V, const HopfPoint& p,
                            double h, FdOrder order) {
  require_chart_margin(p, h, order);
  auto a_of = [&](double ds, double d1, double d2) {
    return one_form_s3(V, {p.s + ds, p.phi1 + d1, p.phi2 + d2});
  };
  double db_ds = Stencil::d1([&](double t) { return a_of(t, 0, 0)[1]; }, h, order);
  double dc_ds = Stencil::d1([&](double t) { return a_of(t, 0, 0)[2]; }, h, order);
  double da_d1 = Stencil::d1([&](double t) { return a_of(0, t, 0)[0]; }, h, order);
  double da_d2 = Stencil::d1([&](double t) { return a_of(0, 0, t)[0]; }, h, order);
  double db_d2 = Stencil::d1([&](double t) { return a_of(0, 0, t)[1]; }, h, order);
  double dc_d1 = Stencil::d1([&](double t) { return a_of(0, t, 0)[2]; }, h, order);

  double mu = orientation_coefficient(p.s);
  double Ws = (dc_d1 - db_d2) / mu;
  double W1 = -(dc_ds - da_d2) / mu;
  double W2 = (db_ds - da_d1) / mu;

  double psi = p.phi1 + p.phi2;
  double cs = std::cos(p.s), sn = std::sin(p.s);
  double cp = std::cos(psi), sp = std::sin(psi);
  FrameVector w;
  w.f = W1 * cs * cs + W2 * sn * sn;
  w.f1 = Ws * cp + sn * cs * sp * (W1 - W2);
  w.f2 = Ws * sp - sn * cs * cp * (W1 - W2);
  return w;
}

double laplace_beltrami_s3(const SphereScalar& f, const HopfPoint& p,
                           double h, FdOrder order) {
  require_chart_margin(p, h, order);
  auto fs = [&](double t) { return f({p.s + t, p.phi1, p.phi2}); };
  auto f1 = [&](double t) { return f({p.s, p.phi1 + t, p.phi2}); };
  auto f2 = [&](double t) { return f({p.s, p.phi1, p.phi2 + t}); };
  double fss = Stencil::d2(fs, h, order);
  double fs1 = Stencil::d1(fs, h, order);
  double f11 = Stencil::d2(f1, h, order);
  double f22 = Stencil::d2(f2, h, order);
  double cs = std::cos(p.s), sn = std::sin(p.s);
  return fss + 2.0 * std::cos(2.0 * p.s) / std::sin(2.0 * p.s) * fs1 +
         f11 / (cs * cs) + f22 / (sn * sn);
}

double quadrature_s3(const SphereScalar& f, int ns, int nangle) {
  GaussRule gs = gauss_legendre(ns, 0.0, M_PI / 2);
  double acc = 0.0;
  double da = 2.0 * M_PI / nangle;
  for (int i = 0; i < ns; ++i) {
    double s = gs.x[i];
    double weight = gs.w[i] * std::sin(s) * std::cos(s);
    double inner = 0.0;
    for (int j = 0; j < nangle; ++j)
      for (int k = 0; k < nangle; ++k)
        inner += f({s, da * j, da * k});
    acc += weight * inner * da * da;
  }
  return acc;
}

double integrate_form_s3(
    const std::function<double(double, double, double)>& coeff, int ns,
    int nangle) {
  GaussRule gs = gauss_legendre(ns, 0.0, M_PI / 2);
  double acc = 0.0;
  double da = 2.0 * M_PI / nangle;
  for (int i = 0; i < ns; ++i) {
    double inner = 0.0;
    for (int j = 0; j < nangle; ++j)
      for (int k = 0; k < nangle; ++k)
        inner += coeff(gs.x[i], da * j, da * k);
    acc += gs.w[i] * inner * da * da;
  }
  // the chart (s, phi1, phi2) is negatively oriented
  return -acc;
}

double quadrature_t3(const std::function<double(const TorusPoint&)>& f, int n) {
  double acc = 0.0;
  double d = 2.0 * M_PI / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) acc += f(TorusPoint(d * i, d * j, d * k));
  return acc * d * d * d;
}

Vec3 curl_t3_at(const TorusCallableField& V, const TorusPoint& p, double h,
                FdOrder order) {
  std::array<Vec3, 3> J;  // J[i] = grad of component i
  if (V.has_grad) {
    for (int i = 0; i < 3; ++i) J[i] = V.grad[i](p);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto fd = [&](double t) {
          Vec3 q = p.coords();
          q[j] += t;
          return V.comp[i](TorusPoint(q[0], q[1], q[2]));
        };
        J[i][j] = Stencil::d1(fd, h, order);
      }
  }
  return {J[2][1] - J[1][2], J[0][2] - J[2][0], J[1][0] - J[0][1]};
}

}  // namespace beltrami
