#include "beltrami/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace beltrami {

T2Eigenfunction::T2Eigenfunction(long long lambda, std::vector<T2Mode> modes)
    : lambda_(lambda), modes_(std::move(modes)) {
  if (lambda <= 0)
    throw std::invalid_argument("T2Eigenfunction: eigenvalue must be positive");
  bool any = false;
  for (const auto& m : modes_) {
    long long k2 = static_cast<long long>(m.k[0]) * m.k[0] +
                   static_cast<long long>(m.k[1]) * m.k[1];
    if (k2 != lambda)
      throw std::invalid_argument(
          "T2Eigenfunction: mode with |k|^2 != eigenvalue");
    if (m.c_cos != 0 || m.c_sin != 0) any = true;
    dm_.push_back({static_cast<double>(m.k[0]), static_cast<double>(m.k[1]),
                   to_double(m.c_cos), to_double(m.c_sin)});
  }
  if (!any)
    throw std::invalid_argument("T2Eigenfunction: all coefficients vanish");
}

double T2Eigenfunction::eval(double x1, double x2) const {
  double acc = 0.0;
  for (const auto& m : dm_) {
    double ph = m.k1 * x1 + m.k2 * x2;
    acc += m.cc * std::cos(ph) + m.cs * std::sin(ph);
  }
  return acc;
}

std::array<double, 2> T2Eigenfunction::grad(double x1, double x2) const {
  double g1 = 0.0, g2 = 0.0;
  for (const auto& m : dm_) {
    double ph = m.k1 * x1 + m.k2 * x2;
    double d = -m.cc * std::sin(ph) + m.cs * std::cos(ph);
    g1 += d * m.k1;
    g2 += d * m.k2;
  }
  return {g1, g2};
}

std::vector<std::array<int, 2>> lattice_modes(long long lambda) {
  std::vector<std::array<int, 2>> out;
  int bound = static_cast<int>(std::sqrt(static_cast<double>(lambda))) + 1;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b) {
      if (static_cast<long long>(a) * a + static_cast<long long>(b) * b !=
          lambda)
        continue;
      // one of each {k, -k} pair
      if (a > 0 || (a == 0 && b > 0)) out.push_back({a, b});
    }
  return out;
}

namespace {

// key of a grid edge: orientation (0 = along x1, 1 = along x2) and base
// vertex indices mod n
struct EdgeKey {
  int o, i, j;
  bool operator<(const EdgeKey& e) const {
    return std::tie(o, i, j) < std::tie(e.o, e.i, e.j);
  }
  bool operator==(const EdgeKey& e) const {
    return o == e.o && i == e.i && j == e.j;
  }
};

double wrap_delta(double d) {
  while (d > M_PI) d -= 2.0 * M_PI;
  while (d < -M_PI) d += 2.0 * M_PI;
  return d;
}

}  // namespace

NodalCurveSet extract_nodal_set(const T2Eigenfunction& f, int n) {
  if (n < 64) throw std::invalid_argument("extract_nodal_set: n >= 64 required");
  const double h = 2.0 * M_PI / n;
  std::vector<double> v(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i * n + j] = f.eval(h * i, h * j);

  auto val = [&](int i, int j) { return v[((i % n + n) % n) * n + ((j % n + n) % n)]; };
  auto pos = [&](int i, int j) -> std::array<double, 2> {
    return {h * i, h * j};
  };
  // sign convention: exact zeros count as positive, which nudges the level
  // set without changing its topology for regular values
  auto sgn = [&](int i, int j) { return val(i, j) >= 0.0; };

  // crossing point on an edge, by linear interpolation
  std::map<EdgeKey, std::array<double, 2>> crossing;
  auto edge_point = [&](const EdgeKey& e) -> std::array<double, 2> {
    auto it = crossing.find(e);
    if (it != crossing.end()) return it->second;
    int i2 = e.o == 0 ? e.i + 1 : e.i, j2 = e.o == 0 ? e.j : e.j + 1;
    double va = val(e.i, e.j), vb = val(i2, j2);
    double t = va == vb ? 0.5 : va / (va - vb);
    auto a = pos(e.i, e.j);
    std::array<double, 2> p = a;
    p[e.o == 0 ? 0 : 1] += t * h;
    crossing[e] = p;
    return p;
  };

  // per-cell segments between crossed edges
  std::map<EdgeKey, std::vector<EdgeKey>> adj;
  auto link = [&](const EdgeKey& a, const EdgeKey& b) {
    edge_point(a);
    edge_point(b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool s00 = sgn(i, j), s10 = sgn(i + 1, j), s11 = sgn(i + 1, j + 1),
           s01 = sgn(i, j + 1);
      int idx = (s00 ? 1 : 0) | (s10 ? 2 : 0) | (s11 ? 4 : 0) | (s01 ? 8 : 0);
      if (idx == 0 || idx == 15) continue;
      EdgeKey bottom{0, i, j}, top{0, i, (j + 1) % n}, left{1, i, j},
          right{1, (i + 1) % n, j};
      switch (idx) {
        case 1: case 14: link(bottom, left); break;
        case 2: case 13: link(bottom, right); break;
        case 3: case 12: link(left, right); break;
        case 4: case 11: link(top, right); break;
        case 6: case 9: link(bottom, top); break;
        case 7: case 8: link(top, left); break;
        case 5: case 10: {
          // saddle: split by the sign at the cell center
          bool center_pos = f.eval(h * (i + 0.5), h * (j + 0.5)) >= 0.0;
          bool diag00 = (idx == 5);  // positive corners on the 00-11 diagonal
          if (center_pos == diag00) {
            link(bottom, right);
            link(top, left);
          } else {
            link(bottom, left);
            link(top, right);
          }
          break;
        }
        default: break;
      }
    }

  NodalCurveSet out;
  out.grid = n;
  std::map<EdgeKey, bool> visited;
  for (const auto& [start, nbrs] : adj) {
    if (visited[start]) continue;
    if (nbrs.size() != 2) {
      out.irregular_suspected = true;
      visited[start] = true;
      continue;
    }
    NodalComponent comp;
    EdgeKey cur = start, prev = start;
    bool closed = false;
    for (std::size_t guard = 0; guard <= adj.size(); ++guard) {
      visited[cur] = true;
      comp.points.push_back(edge_point(cur));
      const auto& nb = adj[cur];
      if (nb.size() != 2) {
        out.irregular_suspected = true;
        break;
      }
      EdgeKey next = (guard == 0) ? nb[0] : (nb[0] == prev ? nb[1] : nb[0]);
      prev = cur;
      cur = next;
      if (cur == start) {
        closed = true;
        break;
      }
    }
    if (!closed || comp.points.size() < 3) {
      out.irregular_suspected = true;
      continue;
    }
    // homology from the total lift displacement
    double L1 = 0.0, L2 = 0.0;
    for (std::size_t a = 0; a < comp.points.size(); ++a) {
      const auto& p = comp.points[a];
      const auto& q = comp.points[(a + 1) % comp.points.size()];
      L1 += wrap_delta(q[0] - p[0]);
      L2 += wrap_delta(q[1] - p[1]);
    }
    double h1 = L1 / (2.0 * M_PI), h2 = L2 / (2.0 * M_PI);
    if (std::abs(h1 - std::round(h1)) > 1e-6 ||
        std::abs(h2 - std::round(h2)) > 1e-6)
      out.irregular_suspected = true;
    comp.hom1 = static_cast<int>(std::round(h1));
    comp.hom2 = static_cast<int>(std::round(h2));
    comp.margin = std::numeric_limits<double>::infinity();
    for (const auto& p : comp.points) {
      auto g = f.grad(p[0], p[1]);
      comp.margin = std::min(comp.margin, std::hypot(g[0], g[1]));
    }
    if (comp.margin < 1e-6) out.irregular_suspected = true;
    out.components.push_back(std::move(comp));
  }

  out.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : out.components)
    out.min_margin = std::min(out.min_margin, c.margin);
  if (out.components.empty()) out.min_margin = 0.0;

  // nesting depth among contractible components, via the winding number of
  // the lifted polygon around a representative point
  for (std::size_t a = 0; a < out.components.size(); ++a) {
    auto& A = out.components[a];
    if (!A.contractible()) continue;
    for (std::size_t b = 0; b < out.components.size(); ++b) {
      if (a == b || !out.components[b].contractible()) continue;
      const auto& B = out.components[b];
      // lift B starting from its first point
      std::vector<std::array<double, 2>> lift;
      lift.reserve(B.points.size());
      std::array<double, 2> cur = B.points[0];
      lift.push_back(cur);
      for (std::size_t t = 1; t < B.points.size(); ++t) {
        cur[0] += wrap_delta(B.points[t][0] - B.points[t - 1][0]);
        cur[1] += wrap_delta(B.points[t][1] - B.points[t - 1][1]);
        lift.push_back(cur);
      }
      // translate A's base point into the lattice copy nearest B's start
      std::array<double, 2> x = A.points[0];
      for (int c = 0; c < 2; ++c)
        x[c] += 2.0 * M_PI * std::round((lift[0][c] - x[c]) / (2.0 * M_PI));
      double angle = 0.0;
      for (std::size_t t = 0; t < lift.size(); ++t) {
        const auto& p = lift[t];
        const auto& q = lift[(t + 1) % lift.size()];
        double a1 = std::atan2(p[1] - x[1], p[0] - x[0]);
        double a2 = std::atan2(q[1] - x[1], q[0] - x[0]);
        angle += wrap_delta(a2 - a1);
      }
      if (std::abs(angle) > M_PI) ++A.nesting;
    }
  }
  return out;
}

double regularity_margin(const T2Eigenfunction& f, const NodalCurveSet& curves) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : curves.components)
    for (const auto& p : c.points) {
      auto g = f.grad(p[0], p[1]);
      m = std::min(m, std::hypot(g[0], g[1]));
    }
  return std::isfinite(m) ? m : 0.0;
}

namespace {

// canonical representative of a mode under the dihedral symmetry of the
// lattice: sorted absolute components
std::array<int, 2> d4_class(std::array<int, 2> k) {
  int a = std::abs(k[0]), b = std::abs(k[1]);
  return {std::max(a, b), std::min(a, b)};
}

Rational snap(double x) {
  return Rational(static_cast<long long>(std::llround(x * 65536.0)), 65536);
}

}  // namespace

ContractibleSearchResult search_contractible(long long lambda, int trials,
                                             std::uint64_t seed, int grid) {
  ContractibleSearchResult res;
  res.lambda = lambda;
  auto modes = lattice_modes(lambda);
  std::vector<std::array<int, 2>> classes;
  for (auto& k : modes) {
    auto c = d4_class(k);
    if (std::find(classes.begin(), classes.end(), c) == classes.end())
      classes.push_back(c);
  }
  if (modes.size() < 2 || classes.size() < 2)
    throw std::invalid_argument(
        "search_contractible: eigenvalue multiplicity too small (need at "
        "least two lattice modes in distinct symmetry classes; such nodal "
        "sets are unions of non-contractible lines)");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best_margin = -1.0;
  for (int trial = 1; trial <= trials; ++trial) {
    std::vector<T2Mode> tm;
    for (auto& k : modes) tm.push_back({k, snap(gauss(rng)), snap(gauss(rng))});
    T2Eigenfunction f(lambda, tm);
    NodalCurveSet ns = extract_nodal_set(f, grid);
    bool has_oval = false;
    for (const auto& c : ns.components)
      if (c.contractible()) has_oval = true;
    bool ok = !ns.irregular_suspected && ns.min_margin >= 1e-6 &&
              ns.components.size() >= 2 && has_oval;
    if (ok) {
      res.success = true;
      res.trials_used = trial;
      res.modes = std::move(tm);
      res.certificate = std::move(ns);
      res.message = "regular disconnected nodal set with contractible oval";
      return res;
    }
    if (ns.min_margin > best_margin) {
      best_margin = ns.min_margin;
      res.modes = std::move(tm);
      res.certificate = std::move(ns);
    }
  }
  res.trials_used = trials;
  res.message = "no certified eigenfunction found; best candidate reported";
  return res;
}

S2NodalReport s2_nodal_regularity(const S2Harmonic& f, int grid) {
  S2NodalReport rep;
  rep.margin = std::numeric_limits<double>::infinity();
  auto point = [](double th, double ph) -> Vec3 {
    return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
            std::cos(th)};
  };
  int nth = grid, nph = grid;
  double minabs = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= nth; ++i) {
    double th = M_PI * i / nth;
    for (int j = 0; j < nph; ++j) {
      double ph = 2.0 * M_PI * j / nph;
      double va = f.eval(point(th, ph));
      minabs = std::min(minabs, std::abs(va));
      // scan the two forward grid edges for sign changes
      for (int dir = 0; dir < 2; ++dir) {
        double th2 = dir == 0 ? M_PI * (i + 1) / nth : th;
        double ph2 = dir == 0 ? ph : 2.0 * M_PI * (j + 1) / nph;
        if (dir == 0 && i == nth) continue;
        double vb = f.eval(point(th2, ph2));
        if (va == 0.0 || vb == 0.0 || std::signbit(va) == std::signbit(vb))
          continue;
        rep.nonempty = true;
        double lo = 0.0, hi = 1.0;  // bisect along the edge
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (lo + hi);
          Vec3 u = point(th + mid * (th2 - th), ph + mid * (ph2 - ph));
          double vm = f.eval(u);
          if (vm == 0.0) break;
          if (std::signbit(vm) == std::signbit(va)) lo = mid;
          else hi = mid;
        }
        double mid = 0.5 * (lo + hi);
        Vec3 u = point(th + mid * (th2 - th), ph + mid * (ph2 - ph));
        rep.margin = std::min(rep.margin, norm(f.sphere_grad(u)));
      }
    }
  }
  if (!rep.nonempty) rep.margin = 0.0;
  if (rep.nonempty && rep.margin < 1e-6) rep.irregular_suspected = true;
  return rep;
}

}  // namespace beltrami
