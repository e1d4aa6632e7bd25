#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "beltrami/report.hpp"
#include "beltrami/torus_fields.hpp"

using namespace beltrami;

TEST_CASE("wave spec validation") {
  CHECK_THROWS_AS(WaveSpec({0, 0, 0}, {Rational(1), Rational(0), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WaveSpec({1, 0, 0}, {Rational(0), Rational(0), Rational(0)}),
                  std::invalid_argument);
  // b not perpendicular to k
  CHECK_THROWS_AS(WaveSpec({1, 2, 0}, {Rational(1), Rational(0), Rational(0)}),
                  std::invalid_argument);
  // rational amplitudes are fine when exactly perpendicular
  CHECK_NOTHROW(WaveSpec({1, 2, 0}, {Rational(2), Rational(-1), Rational(1, 3)}));
}

TEST_CASE("the axis wave reproduces the standard tight family") {
  for (int m : {1, 3, 5}) {
    TorusTrigField direct = eta_field(m);
    WaveSpec ws({0, 0, m}, {Rational(0), Rational(1), Rational(0)});
    CHECK(build_Vk(ws) == direct);
    CHECK(is_curl_eigenfield(direct, QuadExt{Rational(m), 0}));
  }
  // negative index: the eigenvalue follows the sign
  TorusTrigField em2 = eta_field(-2);
  CHECK(is_curl_eigenfield(em2, QuadExt{Rational(-2), 0}));
  TorusPoint p(0.3, 1.1, 2.5);
  Vec3 a = em2.eval(p);
  CHECK(a[0] == doctest::Approx(std::sin(-2 * p.x3)).epsilon(1e-14));
  CHECK(a[1] == doctest::Approx(std::cos(-2 * p.x3)).epsilon(1e-14));
}

TEST_CASE("constant norm |V_k| = |b|") {
  WaveSpec ws({2, -1, 3}, {Rational(3), Rational(0), Rational(-2)});
  TorusTrigField V = build_Vk(ws);
  CHECK(V.norm_deviation(ws.b_norm(), 20) < 1e-13);
}

TEST_CASE("the sqrt(2) class dual form from the worked example") {
  WaveSpec ws({1, 1, 0}, {Rational(0), Rational(0), Rational(1)});
  TorusTrigField V = build_Vk(ws);
  double r2 = std::sqrt(2.0);
  for (TorusPoint p : {TorusPoint(0.4, 1.9, 3.0), TorusPoint(2.2, 0.1, 5.5)}) {
    Vec3 v = V.eval(p);
    double u = p.x1 + p.x2;
    CHECK(v[0] == doctest::Approx(-std::sin(u) / r2).epsilon(1e-13));
    CHECK(v[1] == doctest::Approx(std::sin(u) / r2).epsilon(1e-13));
    CHECK(v[2] == doctest::Approx(std::cos(u)).epsilon(1e-13));
  }
}

TEST_CASE("exact eigen identity for random integer specs") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> d(-4, 4);
  int done = 0;
  while (done < 50) {
    std::array<int, 3> k{d(rng), d(rng), d(rng)};
    std::array<int, 3> u{d(rng), d(rng), d(rng)};
    if (k == std::array<int, 3>{0, 0, 0}) continue;
    // u x k is automatically perpendicular to k
    std::array<Rational, 3> b = {Rational(u[1] * k[2] - u[2] * k[1]),
                                 Rational(u[2] * k[0] - u[0] * k[2]),
                                 Rational(u[0] * k[1] - u[1] * k[0])};
    if (b[0] == 0 && b[1] == 0 && b[2] == 0) continue;
    TorusTrigField V = build_Vk(WaveSpec(k, b));
    CHECK(is_curl_eigenfield(V, QuadExt{0, 1}));
    CHECK_FALSE(is_curl_eigenfield(V, QuadExt{0, 2}));
    ++done;
  }
}

TEST_CASE("the wave stays perpendicular to its wave vector") {
  std::array<int, 3> k{2, 1, -2};
  WaveSpec ws(k, {Rational(1), Rational(2), Rational(2)});
  TorusTrigField V = build_Vk(ws);
  // k . V as an exact mode sum: every coefficient cancels
  TorusTrigField dotkv(V.lambda_sq());
  for (int c = 0; c < 3; ++c)
    for (const auto& t : V.terms(c))
      dotkv.add_term(0, t.k, t.c_cos * Rational(k[c]),
                     t.c_sin * Rational(k[c]));
  CHECK(dotkv.is_zero());
}

TEST_CASE("energy density of the Gauss map is constant") {
  WaveSpec ws({1, 1, 0}, {Rational(0), Rational(0), Rational(2)});
  TorusTrigField V = build_Vk(ws);
  double lo = 1e300, hi = 0.0;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      for (int k = 0; k < 12; ++k) {
        double e = V.energy_density(
            TorusPoint(M_PI * i / 6.0, M_PI * j / 6.0, M_PI * k / 6.0));
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
  CHECK(hi - lo < 1e-10);
  CHECK(lo == doctest::Approx(2.0).epsilon(1e-12));  // |k|^2
}

TEST_CASE("lift of a torus eigenfunction") {
  // f = cos x1: V = sin x1 d2 + cos x1 d3
  T2Eigenfunction f(1, {{{1, 0}, Rational(1), Rational(0)}});
  TorusTrigField V = build_from_t2_eigenfunction(f);
  CHECK(is_curl_eigenfield(V, QuadExt{0, 1}));
  TorusPoint p(0.9, 0.2, 4.1);
  Vec3 v = V.eval(p);
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[1] == doctest::Approx(std::sin(p.x1)).epsilon(1e-14));
  CHECK(v[2] == doctest::Approx(std::cos(p.x1)).epsilon(1e-14));

  // ... which is the companion field W up to the coordinate swap x2 <-> x3
  auto [eta, W] = torus_example_pair(1);
  Vec3 w = W.eval(TorusPoint(p.x1, p.x3, p.x2));
  (void)eta;
  CHECK(w[0] == doctest::Approx(-std::sin(p.x2)).epsilon(1e-14));

  // s1-invariant lifts of regular eigenfunctions stay nonvanishing
  double mn = 1e300;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      Vec3 q = V.eval(TorusPoint(M_PI * i / 32.0, M_PI * j / 32.0, 0.0));
      mn = std::min(mn, norm(q));
    }
  CHECK(mn > 0.9);  // |V|^2 = cos^2 + sin^2 = 1 here

  // all-zero coefficient vectors are rejected upstream
  CHECK_THROWS_AS(
      T2Eigenfunction(1, {{{1, 0}, Rational(0), Rational(0)}}),
      std::invalid_argument);
  // and mode/eigenvalue mismatches too
  CHECK_THROWS_AS(T2Eigenfunction(2, {{{1, 0}, Rational(1), Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("unit-norm Beltrami field with nonconstant factor") {
  auto ex = build_nonconstant_example(
      [](double x) { return -2.0 * x + std::cos(x); },
      [](double x) { return -2.0 - std::sin(x); });
  for (double x3 : {0.0, 0.8, 2.9, 5.6}) {
    CHECK(ex.factor(x3) == doctest::Approx(2.0 + std::sin(x3)).epsilon(1e-14));
    TorusPoint p(0.1, 0.2, x3);
    Vec3 v = ex.field.eval(p);
    CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-14));
    Vec3 cu = curl_t3_at(ex.field, p);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(cu[i] - ex.factor(x3) * v[i]) < 1e-10);
  }

  // linear profile degenerates to the constant-factor eigenfield
  auto lin = build_nonconstant_example([](double x) { return -2.0 * x; },
                                       [](double) { return -2.0; });
  for (double x3 : {0.3, 1.0}) CHECK(lin.factor(x3) == doctest::Approx(2.0));

  // F' changing sign is rejected
  CHECK_THROWS_AS(
      build_nonconstant_example([](double x) { return std::cos(x); },
                                [](double x) { return -std::sin(x); }),
      std::invalid_argument);
}

TEST_CASE("mode-list JSON and CSV sampling") {
  TorusTrigField V = eta_field(2);
  std::string j = modes_to_json(V);
  CHECK(j.find("\"lambda_sq\": 4.0") != std::string::npos);
  CHECK(j.find("\"k\"") != std::string::npos);

  std::ostringstream out;
  sample_csv_t3(V, 4, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x1,x2,x3,A,B,C");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 64);
}
