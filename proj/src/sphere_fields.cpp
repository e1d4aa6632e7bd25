#include "beltrami/sphere_fields.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>

namespace beltrami {

namespace {
double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}
}  // namespace

AxisymmetricField::AxisymmetricField(Polynomial F, Polynomial G,
                                     std::optional<double> lambda,
                                     std::string name)
    : F_(std::move(F)),
      G_(std::move(G)),
      fd_(F_.coeffs_double()),
      gd_(G_.coeffs_double()),
      lambda_(lambda),
      name_(std::move(name)) {}

FrameVector AxisymmetricField::eval_frame(const HopfPoint& p) const {
  double cs = std::cos(p.s);
  double z = cs * cs;
  double c2s = 2.0 * z - 1.0;
  double s2s = std::sin(2.0 * p.s);
  double F = horner(fd_, z), G = horner(gd_, z);
  double psi = p.phi1 + p.phi2;
  return {F + G * c2s, G * s2s * std::sin(psi), -G * s2s * std::cos(psi)};
}

std::pair<double, double> AxisymmetricField::phi_coefficients(double s) const {
  double z = std::cos(s) * std::cos(s);
  double F = horner(fd_, z), G = horner(gd_, z);
  return {F + G, F - G};
}

double AxisymmetricField::norm_at(double s) const {
  double z = std::cos(s) * std::cos(s);
  double F = horner(fd_, z), G = horner(gd_, z);
  double q = F * F + 2.0 * (2.0 * z - 1.0) * F * G + G * G;
  return std::sqrt(std::max(q, 0.0));
}

Polynomial AxisymmetricField::norm_sq_poly() const {
  return F_ * F_ + Polynomial{-2, 4} * F_ * G_ + G_ * G_;
}

SphereSampler AxisymmetricField::sampler() const {
  AxisymmetricField copy = *this;
  return [copy](const HopfPoint& p) { return copy.eval_frame(p); };
}

FrameField frame_field_of(const AxisymmetricField& v) {
  return {v.name(), v.lambda(), v.sampler(), v};
}

AxisymmetricField build_Vm(int m) {
  if (std::abs(m) < 2)
    throw std::invalid_argument(
        "build_Vm: |m| >= 2 required (use hopf_field / anti_hopf_field for "
        "lambda = +-2)");
  EigenPair p = eigenpair(std::abs(m));
  if (m > 0)
    return {p.F, p.G, 2.0 * m, "V" + std::to_string(m)};
  return {p.G, p.F, 2.0 * m, "V" + std::to_string(m)};
}

AxisymmetricField hopf_field() {
  return {Polynomial{1}, Polynomial{}, 2.0, "hopf"};
}
AxisymmetricField anti_hopf_field() {
  return {Polynomial{}, Polynomial{1}, -2.0, "antihopf"};
}

AxisymmetricField curl_axisymmetric(const AxisymmetricField& v) {
  Polynomial twozm1{-1, 2};
  Polynomial Fp = v.F().derivative(), Gp = v.G().derivative();
  Polynomial newF = twozm1 * Fp + v.F() * Rational(2) + Gp;
  Polynomial newG = -(twozm1 * Gp + v.G() * Rational(2) + Fp);
  return {std::move(newF), std::move(newG), std::nullopt,
          v.name().empty() ? "" : "curl " + v.name()};
}

namespace {
// golden-section minimum of a 1-D callable
template <class Fn>
std::pair<double, double> golden_min(const Fn& f, double a, double b) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  return {x, f(x)};
}
}  // namespace

MinNormResult min_norm(const AxisymmetricField& v, int grid) {
  if (grid < 32) throw std::invalid_argument("min_norm: grid >= 32 required");
  double best = std::numeric_limits<double>::infinity(), best_s = 0.0;
  for (int i = 0; i <= grid; ++i) {
    double s = M_PI / 2 * i / grid;
    double n = v.norm_at(s);
    if (n < best) {
      best = n;
      best_s = s;
    }
  }
  double span = M_PI / 2 / grid;
  auto [s_ref, n_ref] = golden_min([&](double s) { return v.norm_at(s); },
                                   std::max(0.0, best_s - span),
                                   std::min(M_PI / 2, best_s + span));
  if (n_ref < best) {
    best = n_ref;
    best_s = s_ref;
  }
  return {best, HopfPoint{best_s, 0.0, 0.0}};
}

MinNormResult min_norm(const FrameField& v, int grid) {
  MinNormResult r;
  r.value = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    double s = M_PI / 2 * i / grid;
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k < grid; ++k) {
        HopfPoint p{s, 2.0 * M_PI * j / grid, 2.0 * M_PI * k / grid};
        double n = v.at(p).norm();
        if (n < r.value) {
          r.value = n;
          r.argmin = p;
        }
      }
  }
  return r;
}

AxisymmetricField homotopy_Vtm(int m, double t) {
  if (m < 2) throw std::invalid_argument("homotopy_Vtm: m must be >= 2");
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument("homotopy_Vtm: t must lie in [0,1]");
  // dyadic snap keeps the profile polynomials exact
  const long long den = 1LL << 40;
  Rational tr(static_cast<long long>(std::llround(t * den)), den);
  Rational one_m_t = Rational(1) - tr;
  // argument (t-1)cos 2s = (t-1)(2z-1) = (1-t) - 2(1-t) z
  Polynomial pF = jacobi11_poly(m - 1).compose_affine(one_m_t, -2 * one_m_t);
  Polynomial pG = jacobi11_poly(m - 2).compose_affine(one_m_t, -2 * one_m_t);
  Rational aF = jacobi11_poly(m - 1).eval(Rational(1) - tr) /
                Rational(static_cast<long long>(m) * m);
  Rational aG = jacobi11_poly(m).eval(Rational(1) - tr) /
                Rational(static_cast<long long>(m + 1) * (m + 1));
  return {pF * aF, pG * aG, std::nullopt,
          "V" + std::to_string(m) + "^t"};
}

FrameField s1_invariant_field(const S2Harmonic& fbar, int k) {
  if (k < 0) throw std::invalid_argument("s1_invariant_field: k must be >= 0");
  if (fbar.degree != k)
    throw std::invalid_argument(
        "s1_invariant_field: eigenfunction degree does not match k (the S^2 "
        "eigenvalue must be of the form 4k(k+1))");
  double lambda = 2.0 + 2.0 * k;
  S2Harmonic fb = fbar;
  SphereSampler at = [fb, lambda](const HopfPoint& p) -> FrameVector {
    Vec4 x = p.embed();
    Vec3 u = hopf_map(x);
    auto frame = frame_at(p);
    double f = fb.eval(u);
    double X1f = fb.dir_deriv(u, hopf_map_push(x, frame[1]));
    double X2f = fb.dir_deriv(u, hopf_map_push(x, frame[2]));
    return {lambda * f, X2f, -X1f};
  };
  return {"s1_invariant_k" + std::to_string(k), lambda, std::move(at),
          std::nullopt};
}

FrameField builtin_example(const std::string& name) {
  if (name == "hopf") return frame_field_of(hopf_field());
  if (name == "antihopf") return frame_field_of(anti_hopf_field());
  if (name == "v2") return frame_field_of(build_Vm(2));
  if (name == "v3") return frame_field_of(build_Vm(3));
  if (name == "nonkkps2") {
    SphereSampler at = [](const HopfPoint& p) -> FrameVector {
      Vec4 e = p.embed();
      double x1 = e[0], y1 = e[1], x2 = e[2], y2 = e[3];
      double f = 0.5 * (x1 * x1 + 4.0 * x1 * x2 - x2 * x2 +
                        2.0 * (y1 * y1 - y2 * y2));
      double f1 = -(x2 * y1 + x1 * y2);
      double f2 = -(x1 * x1 - x2 * x2 + y1 * y2);
      return {f, f1, f2};
    };
    return {"nonkkps2", 4.0, std::move(at), std::nullopt};
  }
  throw std::invalid_argument("builtin_example: unknown name '" + name + "'");
}

SphereBeltrami nonconstant_beltrami_kl(int k, int l) {
  if (k <= 0 || l <= 0)
    throw std::invalid_argument("nonconstant_beltrami_kl: k, l must be >= 1");
  auto D = [k, l](double s) {
    double sn = std::sin(s), cs = std::cos(s);
    return k * k * sn * sn + l * l * cs * cs;
  };
  // V = (l + k)/2D R + (l - k)/2D R'
  SphereSampler at = [k, l, D](const HopfPoint& p) -> FrameVector {
    double d = D(p.s);
    double F = 0.5 * (l + k) / d, G = 0.5 * (l - k) / d;
    double c2s = std::cos(2.0 * p.s), s2s = std::sin(2.0 * p.s);
    double psi = p.phi1 + p.phi2;
    return {F + G * c2s, G * s2s * std::sin(psi), -G * s2s * std::cos(psi)};
  };
  SphereBeltrami out;
  out.field = {"beltrami_kl", std::nullopt, std::move(at), std::nullopt};
  out.factor = [k, l, D](const HopfPoint& p) { return 2.0 * k * l / D(p.s); };
  return out;
}

void sample_csv(const FrameField& v, int n, std::ostream& out) {
  if (n < 2) throw std::invalid_argument("sample_csv: n must be >= 2");
  out << "s,phi1,phi2,f,f1,f2\n";
  out << std::setprecision(15);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        HopfPoint p{M_PI / 2 * i / (n - 1), 2.0 * M_PI * j / n,
                    2.0 * M_PI * k / n};
        FrameVector w = v.at(p);
        out << p.s << ',' << p.phi1 << ',' << p.phi2 << ',' << w.f << ','
            << w.f1 << ',' << w.f2 << '\n';
      }
}

}  // namespace beltrami
