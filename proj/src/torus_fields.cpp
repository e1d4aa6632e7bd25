#include "beltrami/torus_fields.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace beltrami {

TorusTrigField::TorusTrigField(Rational lambda_sq) : lam2_(std::move(lambda_sq)) {
  if (lam2_ <= 0)
    throw std::invalid_argument("TorusTrigField: radicand must be positive");
}

void TorusTrigField::add_term(int comp, std::array<int, 3> k, QuadExt c_cos,
                              QuadExt c_sin) {
  // canonical mode: first nonzero entry of k positive (cos even, sin odd)
  bool flip = false;
  if (k[0] < 0 || (k[0] == 0 && (k[1] < 0 || (k[1] == 0 && k[2] < 0))))
    flip = true;
  if (flip) {
    k = {-k[0], -k[1], -k[2]};
    c_sin = QuadExt{} - c_sin;
  }
  auto& slot = comp_[comp][k];
  slot.first = slot.first + c_cos;
  slot.second = slot.second + c_sin;
  if (slot.first.is_zero() && slot.second.is_zero()) comp_[comp].erase(k);
  cached_ = false;
}

void TorusTrigField::build_cache() const {
  double sq = sqrt_lambda();
  for (int i = 0; i < 3; ++i) {
    cache_[i].clear();
    for (const auto& [k, c] : comp_[i])
      cache_[i].push_back({static_cast<double>(k[0]),
                           static_cast<double>(k[1]),
                           static_cast<double>(k[2]), c.first.value(sq),
                           c.second.value(sq)});
  }
  cached_ = true;
}

double TorusTrigField::component(int i, const TorusPoint& p) const {
  if (!cached_) build_cache();
  double acc = 0.0;
  for (const auto& t : cache_[i]) {
    double ph = t.k1 * p.x1 + t.k2 * p.x2 + t.k3 * p.x3;
    acc += t.cc * std::cos(ph) + t.cs * std::sin(ph);
  }
  return acc;
}

Vec3 TorusTrigField::eval(const TorusPoint& p) const {
  return {component(0, p), component(1, p), component(2, p)};
}

Vec3 TorusTrigField::component_grad(int i, const TorusPoint& p) const {
  if (!cached_) build_cache();
  Vec3 g{0, 0, 0};
  for (const auto& t : cache_[i]) {
    double ph = t.k1 * p.x1 + t.k2 * p.x2 + t.k3 * p.x3;
    double d = -t.cc * std::sin(ph) + t.cs * std::cos(ph);
    g[0] += d * t.k1;
    g[1] += d * t.k2;
    g[2] += d * t.k3;
  }
  return g;
}

namespace {
// d/dx_j applied to one mode: cos -> -k_j sin, sin -> k_j cos
std::pair<QuadExt, QuadExt> mode_derivative(const std::array<int, 3>& k, int j,
                                            const QuadExt& c_cos,
                                            const QuadExt& c_sin) {
  Rational kj(k[j]);
  return {c_sin * kj, c_cos * (-kj)};
}
}  // namespace

TorusTrigField TorusTrigField::curl() const {
  TorusTrigField out(lam2_);
  out.name = name.empty() ? "" : "curl " + name;
  static const int idx[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (int i = 0; i < 3; ++i) {
    int a = idx[i][0], b = idx[i][1];
    // (curl V)_i = d_a V_b - d_b V_a
    for (const auto& [k, c] : comp_[b]) {
      auto [dc, ds] = mode_derivative(k, a, c.first, c.second);
      out.add_term(i, k, dc, ds);
    }
    for (const auto& [k, c] : comp_[a]) {
      auto [dc, ds] = mode_derivative(k, b, c.first, c.second);
      out.add_term(i, k, QuadExt{} - dc, QuadExt{} - ds);
    }
  }
  return out;
}

TorusTrigField TorusTrigField::scaled(const QuadExt& a) const {
  TorusTrigField out(lam2_);
  out.name = name;
  for (int i = 0; i < 3; ++i)
    for (const auto& [k, c] : comp_[i])
      out.add_term(i, k, c.first.mul(a, lam2_), c.second.mul(a, lam2_));
  return out;
}

TorusTrigField TorusTrigField::operator+(const TorusTrigField& o) const {
  if (lam2_ != o.lam2_)
    throw std::invalid_argument("TorusTrigField: mixed radicands");
  TorusTrigField out = *this;
  for (int i = 0; i < 3; ++i)
    for (const auto& [k, c] : o.comp_[i]) out.add_term(i, k, c.first, c.second);
  return out;
}

TorusTrigField TorusTrigField::operator-(const TorusTrigField& o) const {
  return *this + o.scaled(QuadExt{-1, 0});
}

bool TorusTrigField::is_zero() const {
  return comp_[0].empty() && comp_[1].empty() && comp_[2].empty();
}

bool TorusTrigField::operator==(const TorusTrigField& o) const {
  return lam2_ == o.lam2_ && comp_ == o.comp_;
}

double TorusTrigField::norm_deviation(double c, int grid) const {
  double worst = 0.0;
  double h = 2.0 * M_PI / grid;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k < grid; ++k) {
        Vec3 v = eval(TorusPoint(h * i, h * j, h * k));
        worst = std::max(worst, std::abs(norm(v) - c));
      }
  return worst;
}

double TorusTrigField::energy_density(const TorusPoint& p) const {
  double e = 0.0;
  for (int i = 0; i < 3; ++i) {
    Vec3 g = component_grad(i, p);
    e += dot(g, g);
  }
  Vec3 v = eval(p);
  return e / dot(v, v);
}

TorusCallableField TorusTrigField::callable() const {
  TorusCallableField out;
  TorusTrigField copy = *this;
  for (int i = 0; i < 3; ++i) {
    out.comp[i] = [copy, i](const TorusPoint& p) { return copy.component(i, p); };
    out.grad[i] = [copy, i](const TorusPoint& p) {
      return copy.component_grad(i, p);
    };
  }
  out.has_grad = true;
  return out;
}

std::vector<TorusTrigField::Term> TorusTrigField::terms(int comp) const {
  std::vector<Term> out;
  for (const auto& [k, c] : comp_[comp]) out.push_back({k, c.first, c.second});
  return out;
}

WaveSpec::WaveSpec(std::array<int, 3> kk, std::array<Rational, 3> bb)
    : k(kk), b(bb) {
  if (k[0] == 0 && k[1] == 0 && k[2] == 0)
    throw std::invalid_argument("WaveSpec: k must be nonzero");
  if (b[0] == 0 && b[1] == 0 && b[2] == 0)
    throw std::invalid_argument("WaveSpec: b must be nonzero");
  Rational dotbk = b[0] * k[0] + b[1] * k[1] + b[2] * k[2];
  if (dotbk != 0)
    throw std::invalid_argument("WaveSpec: b must be perpendicular to k");
}

long long WaveSpec::k_norm_sq() const {
  return static_cast<long long>(k[0]) * k[0] +
         static_cast<long long>(k[1]) * k[1] +
         static_cast<long long>(k[2]) * k[2];
}

double WaveSpec::b_norm() const {
  Rational s = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  return std::sqrt(to_double(s));
}

TorusTrigField build_Vk(const WaveSpec& spec) {
  Rational L(spec.k_norm_sq());
  TorusTrigField V(L);
  V.name = "V_k";
  std::array<Rational, 3> bxk = {
      spec.b[1] * spec.k[2] - spec.b[2] * spec.k[1],
      spec.b[2] * spec.k[0] - spec.b[0] * spec.k[2],
      spec.b[0] * spec.k[1] - spec.b[1] * spec.k[0]};
  for (int i = 0; i < 3; ++i) {
    // (b x k)/|k| = (b x k) sqrt(L)/L
    QuadExt ccos{spec.b[i], 0};
    QuadExt csin{0, bxk[i] / L};
    if (!ccos.is_zero() || !csin.is_zero())
      V.add_term(i, spec.k, ccos, csin);
  }
  return V;
}

TorusTrigField eta_field(int m) {
  if (m == 0) throw std::invalid_argument("eta_field: m must be nonzero");
  TorusTrigField V(Rational(static_cast<long long>(m) * m));
  V.name = "eta_" + std::to_string(m);
  V.add_term(0, {0, 0, m}, QuadExt{}, QuadExt{1, 0});  // sin(m x3)
  V.add_term(1, {0, 0, m}, QuadExt{1, 0}, QuadExt{});  // cos(m x3)
  return V;
}

TorusTrigField build_from_t2_eigenfunction(const T2Eigenfunction& f) {
  TorusTrigField V(Rational(f.eigenvalue()));
  V.name = "t2_ansatz";
  for (const auto& m : f.modes()) {
    std::array<int, 3> k = {m.k[0], m.k[1], 0};
    Rational k1(m.k[0]), k2(m.k[1]);
    // d f / d x2
    V.add_term(0, k, {m.c_sin * k2, 0}, {m.c_cos * (-k2), 0});
    // - d f / d x1
    V.add_term(1, k, {m.c_sin * (-k1), 0}, {m.c_cos * k1, 0});
    // sqrt(L) f
    V.add_term(2, k, {0, m.c_cos}, {0, m.c_sin});
  }
  return V;
}

std::pair<TorusTrigField, TorusTrigField> torus_example_pair(int m) {
  if (m <= 0) throw std::invalid_argument("torus_example_pair: m must be >= 1");
  TorusTrigField V = eta_field(m);
  TorusTrigField W(Rational(static_cast<long long>(m) * m));
  W.name = "W_" + std::to_string(m);
  W.add_term(0, {0, m, 0}, QuadExt{}, QuadExt{-1, 0});  // -sin(m x2)
  W.add_term(2, {0, m, 0}, QuadExt{1, 0}, QuadExt{});   // cos(m x2)
  return {V, W};
}

bool is_curl_eigenfield(const TorusTrigField& V, const QuadExt& lambda) {
  return (V.curl() - V.scaled(lambda)).is_zero();
}

NonconstantBeltrami build_nonconstant_example(
    const std::function<double(double)>& F,
    const std::function<double(double)>& Fprime, int check_grid) {
  for (int i = 0; i < check_grid; ++i) {
    double x = 2.0 * M_PI * i / check_grid;
    if (!(Fprime(x) < 0.0))
      throw std::invalid_argument(
          "build_nonconstant_example: F' must be strictly negative");
    if (std::abs(Fprime(x) - Fprime(x + 2.0 * M_PI)) > 1e-12)
      throw std::invalid_argument(
          "build_nonconstant_example: F' must be 2pi-periodic");
  }
  NonconstantBeltrami out;
  out.name = "ex_nonconstant";
  auto phase = [F](double x3) { return F(x3) - M_PI / 4; };
  out.field.comp[0] = [phase](const TorusPoint& p) {
    return std::cos(phase(p.x3));
  };
  out.field.comp[1] = [phase](const TorusPoint& p) {
    return std::sin(phase(p.x3));
  };
  out.field.comp[2] = [](const TorusPoint&) { return 0.0; };
  out.field.grad[0] = [phase, Fprime](const TorusPoint& p) -> Vec3 {
    return {0.0, 0.0, -std::sin(phase(p.x3)) * Fprime(p.x3)};
  };
  out.field.grad[1] = [phase, Fprime](const TorusPoint& p) -> Vec3 {
    return {0.0, 0.0, std::cos(phase(p.x3)) * Fprime(p.x3)};
  };
  out.field.grad[2] = [](const TorusPoint&) -> Vec3 { return {0, 0, 0}; };
  out.field.has_grad = true;
  out.factor = [Fprime](double x3) { return -Fprime(x3); };
  return out;
}

void sample_csv_t3(const TorusTrigField& v, int n, std::ostream& out) {
  if (n < 2) throw std::invalid_argument("sample_csv_t3: n must be >= 2");
  out << "x1,x2,x3,A,B,C\n";
  out.precision(15);
  double h = 2.0 * M_PI / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        TorusPoint p(h * i, h * j, h * k);
        Vec3 w = v.eval(p);
        out << p.x1 << ',' << p.x2 << ',' << p.x3 << ',' << w[0] << ','
            << w[1] << ',' << w[2] << '\n';
      }
}

}  // namespace beltrami
