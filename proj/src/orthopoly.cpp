#include "beltrami/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beltrami {

double jacobi11(int n, double x) {
  if (n < 0) throw std::invalid_argument("jacobi11: n must be >= 0");
  if (n == 0) return 1.0;
  double pm2 = 1.0, pm1 = 2.0 * x;
  for (int k = 2; k <= n; ++k) {
    double pk = (k + 1.0) * ((2.0 * k + 1.0) * x * pm1 - k * pm2) /
                (k * (k + 2.0));
    pm2 = pm1;
    pm1 = pk;
  }
  return pm1;
}

Polynomial jacobi11_poly(int n) {
  if (n < 0) throw std::invalid_argument("jacobi11_poly: n must be >= 0");
  Polynomial pm2{1};
  if (n == 0) return pm2;
  Polynomial pm1{0, 2};
  for (int k = 2; k <= n; ++k) {
    Polynomial xpm1 = pm1 * Polynomial::variable();
    Polynomial pk =
        (xpm1 * Rational(2 * k + 1) - pm2 * Rational(k)) *
        (Rational(k + 1) / Rational(k * (k + 2)));
    pm2 = std::move(pm1);
    pm1 = std::move(pk);
  }
  return pm1;
}

double gegenbauer32(int n, double x) {
  if (n < 0) throw std::invalid_argument("gegenbauer32: n must be >= 0");
  if (n == 0) return 1.0;
  double cm2 = 1.0, cm1 = 3.0 * x;
  for (int k = 2; k <= n; ++k) {
    double ck = ((2.0 * k + 1.0) * x * cm1 - (k + 1.0) * cm2) / k;
    cm2 = cm1;
    cm1 = ck;
  }
  return cm1;
}

EigenPair eigenpair(int m) {
  if (m < 2) throw std::invalid_argument("eigenpair: m must be >= 2");
  // substitute w = 1 - 2z
  Polynomial F = jacobi11_poly(m - 1).compose_affine(1, -2) *
                 (Rational(1) / Rational(m));
  Polynomial G = jacobi11_poly(m - 2).compose_affine(1, -2) *
                 (Rational(1) / Rational(m + 1));
  return {m, std::move(F), std::move(G)};
}

Polynomial char_poly(int m) {
  EigenPair p = eigenpair(m);
  return p.F + Polynomial{-1, 2} * p.G;
}

namespace {

// Signed polynomial remainder sequence for the Sturm chain.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    // remainder of a divided by b
    Polynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      Rational q = r.coeff(r.degree()) / b.coeff(b.degree());
      int shift = r.degree() - b.degree();
      std::vector<Rational> mono(shift + 1, Rational(0));
      mono[shift] = q;
      r = r - b * Polynomial(std::move(mono));
    }
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    Rational v = q.eval(x);
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s != 0) {
      if (last != 0 && s != last) ++changes;
      last = s;
    }
  }
  return changes;
}

Rational rational_approx(double x) {
  // dyadic rational with 48 fractional bits; plenty for interval endpoints
  const double scale = 281474976710656.0;  // 2^48
  boost::multiprecision::cpp_int num =
      static_cast<long long>(std::llround(x * scale));
  return Rational(num, boost::multiprecision::cpp_int(1) << 48);
}

}  // namespace

int sturm_count(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  auto chain = sturm_chain(p);
  return sign_changes(chain, a) - sign_changes(chain, b);
}

RootSet isolate_roots(const Polynomial& p, double a, double b, double tol) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("isolate_roots: need a < b");
  RootSet out;
  if (p.degree() == 0) return out;

  const std::vector<double> cd = p.coeffs_double();
  auto evalf = [&cd](double x) {
    double acc = 0.0;
    for (std::size_t i = cd.size(); i-- > 0;) acc = acc * x + cd[i];
    return acc;
  };
  const Polynomial dp = p.derivative();

  int cells = std::max(10 * p.degree(), 10);
  const int expected = sturm_count(p, rational_approx(a), rational_approx(b));

  for (int pass = 0; pass < 6; ++pass, cells *= 4) {
    out.roots.clear();
    out.warnings.clear();
    double prev_x = a, prev_v = evalf(a);
    for (int i = 1; i <= cells; ++i) {
      double x = a + (b - a) * i / cells;
      double v = evalf(x);
      if (prev_v == 0.0) {
        // grid hit a root exactly (endpoint excluded by the open interval)
        if (prev_x > a) out.roots.push_back(prev_x);
      } else if (v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
        double lo = prev_x, hi = x;
        while (hi - lo > tol) {
          double mid = 0.5 * (lo + hi);
          double vm = evalf(mid);
          if (vm == 0.0) { lo = hi = mid; break; }
          if (std::signbit(vm) == std::signbit(evalf(lo))) lo = mid;
          else hi = mid;
        }
        double root = 0.5 * (lo + hi);
        // simple-root sanity: derivative should not vanish with the function
        if (std::abs(dp.eval(root)) < tol)
          out.warnings.push_back("possible multiple root near " +
                                 std::to_string(root));
        out.roots.push_back(root);
      }
      prev_x = x;
      prev_v = v;
    }
    if (static_cast<int>(out.roots.size()) == expected) return out;
  }
  out.warnings.push_back("bracketing disagrees with Sturm count: expected " +
                         std::to_string(expected) + " roots, found " +
                         std::to_string(out.roots.size()));
  return out;
}

InterlacingReport check_interlacing(int m, double tol) {
  if (m < 2) throw std::invalid_argument("check_interlacing: m must be >= 2");
  EigenPair p = eigenpair(m);
  RootSet fr = isolate_roots(p.F, 0.0, 1.0, tol);
  InterlacingReport rep;
  if (m == 2) {  // G constant, nothing to interlace
    rep.ok = true;
    rep.margin = 1.0;
    return rep;
  }
  RootSet gr = isolate_roots(p.G, 0.0, 1.0, tol);
  if (fr.roots.size() != static_cast<std::size_t>(m - 1) ||
      gr.roots.size() != static_cast<std::size_t>(m - 2))
    return rep;
  // strict alternation f_1 < g_1 < f_2 < ... < f_{m-1}
  rep.ok = true;
  for (std::size_t i = 0; i < gr.roots.size(); ++i)
    if (!(fr.roots[i] < gr.roots[i] && gr.roots[i] < fr.roots[i + 1]))
      rep.ok = false;
  rep.margin = 1.0;
  for (double f : fr.roots)
    for (double g : gr.roots) rep.margin = std::min(rep.margin, std::abs(f - g));
  return rep;
}

double turan_margin(int m, int grid_points) {
  if (m < 2) throw std::invalid_argument("turan_margin: m must be >= 2");
  if (grid_points < 2) throw std::invalid_argument("turan_margin: grid too small");
  const double factor = static_cast<double>(m) * m / (static_cast<double>(m) * m - 1.0);
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 1; i < grid_points; ++i) {  // interior nodes only
    double w = -1.0 + 2.0 * i / grid_points;
    double p1 = jacobi11(m - 1, w);
    double v = p1 * p1 - factor * jacobi11(m, w) * jacobi11(m - 2, w);
    margin = std::min(margin, v);
  }
  return margin;
}

}  // namespace beltrami
