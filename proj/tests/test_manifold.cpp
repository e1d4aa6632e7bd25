#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beltrami/manifold.hpp"
#include "beltrami/sphere_fields.hpp"
#include "beltrami/torus_fields.hpp"

using namespace beltrami;

TEST_CASE("frame at the base point and at s = pi/4") {
  auto fr = frame_at({0.0, 0.0, 0.0});
  CHECK(fr[0] == Vec4{0, 1, 0, 0});
  CHECK(fr[1] == Vec4{0, 0, 1, 0});
  CHECK(fr[2] == Vec4{0, 0, 0, 1});

  // R = (-y1, x1, -y2, x2) at the embedding of (pi/4, 0, 0)
  auto fr2 = frame_at({M_PI / 4, 0.0, 0.0});
  double r = 1.0 / std::sqrt(2.0);
  CHECK(fr2[0][0] == doctest::Approx(0.0));
  CHECK(fr2[0][1] == doctest::Approx(r));
  CHECK(fr2[0][2] == doctest::Approx(0.0));
  CHECK(fr2[0][3] == doctest::Approx(r));
}

TEST_CASE("frame orthonormality at random points") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> us(0.0, M_PI / 2), ua(0.0, 2 * M_PI);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    auto fr = frame_at({us(rng), ua(rng), ua(rng)});
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double g = dot(fr[a], fr[b]) - (a == b ? 1.0 : 0.0);
        worst = std::max(worst, std::abs(g));
      }
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("embedding is unit and the point validates") {
  HopfPoint p{0.3, 1.0, 5.0};
  CHECK(norm(p.embed()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.valid());
  CHECK_FALSE(HopfPoint{-0.2, 0, 0}.valid());
}

TEST_CASE("torus point reduction is idempotent") {
  TorusPoint p(7.0, -1.0, 13.0);
  TorusPoint q(p.x1, p.x2, p.x3);
  CHECK(p.x1 == q.x1);
  CHECK(p.x2 == q.x2);
  CHECK(p.x3 == q.x3);
  CHECK(p.x1 >= 0.0);
  CHECK(p.x1 < 2 * M_PI);
}

TEST_CASE("numeric curl reproduces the Hopf eigenfields") {
  auto R = hopf_field().sampler();
  auto Rp = anti_hopf_field().sampler();
  HopfPoint p{0.9, 2.0, 0.4};
  FrameVector cR = curl_s3_numeric(R, p, 1e-3, FdOrder::four);
  CHECK(cR.f == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(cR.f1) < 1e-9);
  CHECK(std::abs(cR.f2) < 1e-9);
  FrameVector cRp = curl_s3_numeric(Rp, p, 1e-3, FdOrder::four);
  FrameVector rp = anti_hopf_field().eval_frame(p);
  CHECK(cRp.f == doctest::Approx(-2.0 * rp.f).epsilon(1e-9));
  CHECK(cRp.f1 == doctest::Approx(-2.0 * rp.f1).epsilon(1e-9));
  CHECK(cRp.f2 == doctest::Approx(-2.0 * rp.f2).epsilon(1e-9));
}

TEST_CASE("numeric curl converges at second order") {
  auto Rp = anti_hopf_field().sampler();
  HopfPoint p{0.6, 1.3, 2.2};
  auto resid = [&](double h) {
    FrameVector c = curl_s3_numeric(Rp, p, h, FdOrder::two);
    FrameVector v = anti_hopf_field().eval_frame(p);
    return std::max({std::abs(c.f + 2 * v.f), std::abs(c.f1 + 2 * v.f1),
                     std::abs(c.f2 + 2 * v.f2)});
  };
  double r1 = resid(4e-3), r2 = resid(2e-3);
  CHECK(r1 / r2 > 3.0);
  CHECK(r1 / r2 < 5.0);
}

TEST_CASE("numeric curl of V2 against the exact curl") {
  AxisymmetricField v2 = build_Vm(2);
  HopfPoint p{M_PI / 3, 0.8, 1.9};
  FrameVector c = curl_s3_numeric(v2.sampler(), p, 1e-3, FdOrder::four);
  FrameVector v = v2.eval_frame(p);
  CHECK(std::abs(c.f - 4 * v.f) < 1e-6);
  CHECK(std::abs(c.f1 - 4 * v.f1) < 1e-6);
  CHECK(std::abs(c.f2 - 4 * v.f2) < 1e-6);
}

TEST_CASE("degenerate chart points are rejected") {
  auto R = hopf_field().sampler();
  CHECK_THROWS_AS(curl_s3_numeric(R, {5e-4, 0, 0}, 1e-3), std::domain_error);
  CHECK_THROWS_AS(curl_s3_numeric(R, {M_PI / 2 - 5e-4, 0, 0}, 1e-3),
                  std::domain_error);
  CHECK_THROWS_AS(
      laplace_beltrami_s3([](const HopfPoint&) { return 0.0; }, {1e-4, 0, 0}),
      std::domain_error);
}

TEST_CASE("Laplace-Beltrami basics") {
  HopfPoint p{0.7, 1.0, 2.0};
  double c = laplace_beltrami_s3([](const HopfPoint&) { return 1.0; }, p, 1e-3,
                                 FdOrder::four);
  CHECK(std::abs(c) < 1e-8);
  // cos 2s is an eigenfunction with eigenvalue 8 = 4(4-2)
  auto f = [](const HopfPoint& q) { return std::cos(2 * q.s); };
  double lb = laplace_beltrami_s3(f, p, 1e-3, FdOrder::four);
  CHECK(lb == doctest::Approx(-8.0 * std::cos(2 * p.s)).epsilon(1e-8));
}

TEST_CASE("Laplace eigenvalue of a V3 component via Richardson") {
  // the R-component of V_3 is a Laplace eigenfunction with eigenvalue
  // 2m(2m-2) = 24; oracle: two step sizes + Richardson extrapolation
  AxisymmetricField v3 = build_Vm(3);
  auto f = [&](const HopfPoint& q) { return v3.eval_frame(q).f; };
  HopfPoint p{0.52, 0.3, 1.1};
  double l1 = laplace_beltrami_s3(f, p, 2e-3, FdOrder::two);
  double l2 = laplace_beltrami_s3(f, p, 1e-3, FdOrder::two);
  double richardson = (4.0 * l2 - l1) / 3.0;
  CHECK(richardson == doctest::Approx(-24.0 * f(p)).epsilon(1e-5));
}

TEST_CASE("quadrature reproduces volumes and the cos^2 s oracle") {
  double vol = quadrature_s3([](const HopfPoint&) { return 1.0; }, 96, 24);
  CHECK(std::abs(vol - kSphereVolume) < 1e-10);
  double volt =
      quadrature_t3([](const TorusPoint&) { return 1.0; }, 16);
  CHECK(std::abs(volt - kTorusVolume) < 1e-12);
  // 1-D oracle: 4 pi^2 Int_0^{pi/2} cos^3 s sin s ds = 4 pi^2 / 4 = pi^2
  double c2 = quadrature_s3(
      [](const HopfPoint& q) { return std::cos(q.s) * std::cos(q.s); }, 96, 24);
  CHECK(std::abs(c2 - M_PI * M_PI) < 1e-8);
}

TEST_CASE("integrals of exact 3-forms vanish") {
  // omega = d(f deta) = df ^ deta with f = x1 and eta the standard form;
  // deta = sin 2s ds ^ (dphi2 - dphi1), so the coefficient of omega in
  // ds ^ dphi1 ^ dphi2 is -sin 2s (f_phi1 + f_phi2) = sin 2s cos s sin phi1,
  // nonzero pointwise but exact
  auto coeff = [](double s, double p1, double) {
    return std::sin(2 * s) * std::cos(s) * std::sin(p1);
  };
  double val = integrate_form_s3(coeff, 64, 32);
  CHECK(std::abs(val) < 1e-10);
  // and the nonvanishing of the integrand itself, for contrast
  CHECK(coeff(0.7, 1.0, 0.0) != 0.0);
}

TEST_CASE("torus curl: exact for waves, analytic for the nonconstant example") {
  WaveSpec ws({1, 2, 2}, {Rational(2), Rational(2), Rational(-3)});
  TorusTrigField V = build_Vk(ws);
  CHECK(is_curl_eigenfield(V, QuadExt{0, 1}));

  // constant field has zero curl
  TorusTrigField C(Rational(1));
  C.add_term(0, {0, 0, 0}, QuadExt{Rational(3), 0}, QuadExt{});
  CHECK(C.curl().is_zero());

  auto ex = build_nonconstant_example(
      [](double x) { return -2.0 * x + std::cos(x); },
      [](double x) { return -2.0 - std::sin(x); });
  for (double x3 : {0.3, 1.7, 4.4}) {
    TorusPoint p(1.0, 2.0, x3);
    Vec3 cu = curl_t3_at(ex.field, p);
    Vec3 v = ex.field.eval(p);
    double f = ex.factor(x3);
    CHECK(f == doctest::Approx(2.0 + std::sin(x3)).epsilon(1e-14));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(cu[i] - f * v[i]) < 1e-12);
  }
}
