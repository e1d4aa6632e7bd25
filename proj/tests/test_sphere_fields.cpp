#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "beltrami/manifold.hpp"
#include "beltrami/sphere_fields.hpp"

using namespace beltrami;

TEST_CASE("V2 and V3 in the angular basis match the closed forms") {
  AxisymmetricField v2 = build_Vm(2), v3 = build_Vm(3);
  for (double s : {0.0, 0.3, M_PI / 4, 1.1, M_PI / 2}) {
    double c2s = std::cos(2 * s);
    auto [p2, q2] = v2.phi_coefficients(s);
    CHECK(p2 == doctest::Approx(-(3 * c2s - 1) / 3.0).epsilon(1e-13));
    CHECK(q2 == doctest::Approx(-(3 * c2s + 1) / 3.0).epsilon(1e-13));
    double cz = std::cos(s) * std::cos(s);
    auto [p3, q3] = v3.phi_coefficients(s);
    CHECK(p3 == doctest::Approx(1.5 - 6 * cz + 5 * cz * cz).epsilon(1e-13));
    CHECK(q3 == doctest::Approx(0.5 - 4 * cz + 5 * cz * cz).epsilon(1e-13));
  }
}

TEST_CASE("values on the Hopf link") {
  for (int m = 2; m <= 12; ++m) {
    AxisymmetricField v = build_Vm(m);
    double at0 = v.phi_coefficients(0.0).first;
    double atp = v.phi_coefficients(M_PI / 2).second;
    double want0 = 2.0 * (m % 2 == 0 ? -1.0 : 1.0) / (m + 1);
    CHECK(at0 == doctest::Approx(want0).epsilon(1e-12));
    CHECK(atp == doctest::Approx(2.0 / (m + 1)).epsilon(1e-12));
  }
}

TEST_CASE("index guard") {
  CHECK_THROWS_AS(build_Vm(1), std::invalid_argument);
  CHECK_THROWS_AS(build_Vm(0), std::invalid_argument);
  CHECK_THROWS_AS(build_Vm(-1), std::invalid_argument);
}

TEST_CASE("exact curl identities") {
  // curl V_2 = 4 V_2 coefficientwise
  AxisymmetricField v2 = build_Vm(2);
  AxisymmetricField c2 = curl_axisymmetric(v2);
  CHECK((c2.F() - v2.F() * Rational(4)).is_zero());
  CHECK((c2.G() - v2.G() * Rational(4)).is_zero());
  // curl R = 2 R
  AxisymmetricField cR = curl_axisymmetric(hopf_field());
  CHECK((cR.F() - Polynomial{2}).is_zero());
  CHECK(cR.G().is_zero());
  // the swapped pair has the negative eigenvalue
  AxisymmetricField vm3 = build_Vm(-3);
  AxisymmetricField cm3 = curl_axisymmetric(vm3);
  CHECK((cm3.F() - vm3.F() * Rational(-6)).is_zero());
  CHECK((cm3.G() - vm3.G() * Rational(-6)).is_zero());
  // finite-difference oracle on the same field
  HopfPoint p{0.8, 0.2, 2.9};
  FrameVector cu = curl_s3_numeric(vm3.sampler(), p, 1e-3, FdOrder::four);
  FrameVector v = vm3.eval_frame(p);
  CHECK(std::abs(cu.f + 6 * v.f) < 1e-6);
  CHECK(std::abs(cu.f1 + 6 * v.f1) < 1e-6);
  CHECK(std::abs(cu.f2 + 6 * v.f2) < 1e-6);
}

TEST_CASE("eigen identity and FD residual for |m| <= 8") {
  for (int m : {2, 3, 4, 5, 6, 7, 8, -2, -5, -8}) {
    AxisymmetricField v = build_Vm(m);
    AxisymmetricField cu = curl_axisymmetric(v);
    CHECK((cu.F() - v.F() * Rational(2 * m)).is_zero());
    CHECK((cu.G() - v.G() * Rational(2 * m)).is_zero());
    HopfPoint p{0.95, 1.0, 0.1};
    FrameVector fd = curl_s3_numeric(v.sampler(), p, 1e-3, FdOrder::four);
    FrameVector vv = v.eval_frame(p);
    CHECK(std::abs(fd.f - 2 * m * vv.f) < 1e-5);
    CHECK(std::abs(fd.f1 - 2 * m * vv.f1) < 1e-5);
    CHECK(std::abs(fd.f2 - 2 * m * vv.f2) < 1e-5);
  }
}

TEST_CASE("minimum norms") {
  // the norm profile of V_2 is sqrt((1/3)(1-2z)^2 ... ) minimized where
  // F vanishes: |V_2|(pi/4) = |G(1/2)| = 1/3
  MinNormResult m2 = min_norm(build_Vm(2));
  CHECK(m2.value == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(m2.argmin.s == doctest::Approx(M_PI / 4).epsilon(1e-6));
  // link margin from the closed form
  CHECK(build_Vm(2).norm_at(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

  MinNormResult mh = min_norm(hopf_field());
  CHECK(mh.value == doctest::Approx(1.0).epsilon(1e-13));

  CHECK(min_norm(build_Vm(3)).value > 0.0);
  for (int m = 2; m <= 12; ++m) {
    CHECK(min_norm(build_Vm(m)).value > 0.0);
    CHECK(min_norm(build_Vm(-m)).value > 0.0);
  }
}

TEST_CASE("norms are nonconstant for |m| >= 2") {
  for (int m = 2; m <= 8; ++m) {
    AxisymmetricField v = build_Vm(m);
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i <= 256; ++i) {
      double n = v.norm_at(M_PI / 2 * i / 256);
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    CHECK(hi - lo > 0.1);
  }
  // while the lowest modes are unit fields
  for (int i = 0; i <= 64; ++i) {
    double s = M_PI / 2 * i / 64;
    CHECK(std::abs(hopf_field().norm_at(s) - 1.0) < 1e-14);
    CHECK(std::abs(anti_hopf_field().norm_at(s) - 1.0) < 1e-14);
  }
}

TEST_CASE("deformation family endpoints and nonvanishing") {
  CHECK(homotopy_Vtm(2, 0.0).same_coefficients(build_Vm(2)));
  CHECK(homotopy_Vtm(5, 0.0).same_coefficients(build_Vm(5)));
  // t = 1: multiple of R' for even m, of R for odd m
  AxisymmetricField e2 = homotopy_Vtm(2, 1.0);
  CHECK(e2.F().is_zero());
  CHECK(!e2.G().is_zero());
  AxisymmetricField e3 = homotopy_Vtm(3, 1.0);
  CHECK(!e3.F().is_zero());
  CHECK(e3.G().is_zero());
  // interior slice
  CHECK(min_norm(homotopy_Vtm(4, 0.5)).value > 0.0);
  // product sweep
  for (int m = 2; m <= 8; ++m)
    for (int i = 0; i <= 64; ++i)
      CHECK(min_norm(homotopy_Vtm(m, static_cast<double>(i) / 64), 64).value >
            0.0);
}

TEST_CASE("circle-invariant ansatz from S^2 eigenfunctions") {
  // constant eigenfunction: V = 2 c R
  S2Harmonic c0 = s2_eigenfunction(0, {2.5});
  FrameField v0 = s1_invariant_field(c0, 0);
  HopfPoint p{0.8, 1.2, 0.5};
  FrameVector w = v0.at(p);
  CHECK(w.f == doctest::Approx(2.0 * 2.5).epsilon(1e-14));
  CHECK(w.f1 == doctest::Approx(0.0));
  CHECK(w.f2 == doctest::Approx(0.0));

  // degree-1 harmonic: eigenfield with lambda = 4, checked by FD curl
  S2Harmonic z1 = s2_eigenfunction(1, {0.0, 1.0, 0.0});
  FrameField v1 = s1_invariant_field(z1, 1);
  for (HopfPoint q : {HopfPoint{0.5, 0.3, 1.0}, HopfPoint{1.2, 2.8, 4.4}}) {
    FrameVector cu = curl_s3_numeric(v1.at, q, 1e-3, FdOrder::four);
    FrameVector vv = v1.at(q);
    CHECK(std::abs(cu.f - 4 * vv.f) < 1e-6);
    CHECK(std::abs(cu.f1 - 4 * vv.f1) < 1e-6);
    CHECK(std::abs(cu.f2 - 4 * vv.f2) < 1e-6);
  }
  // regular nodal set (the equator) keeps the lift away from zero
  CHECK(min_norm(v1, 32).value > 0.0);

  // degree mismatch is the stated error path
  CHECK_THROWS_AS(s1_invariant_field(z1, 2), std::invalid_argument);
}

TEST_CASE("builtin examples") {
  CHECK_THROWS_AS(builtin_example("nope"), std::invalid_argument);
  FrameField nk = builtin_example("nonkkps2");
  // eigenvalue 4 via finite differences
  for (HopfPoint q : {HopfPoint{0.4, 0.0, 0.0}, HopfPoint{1.1, 2.0, 3.0}}) {
    FrameVector cu = curl_s3_numeric(nk.at, q, 1e-3, FdOrder::four);
    FrameVector vv = nk.at(q);
    CHECK(std::abs(cu.f - 4 * vv.f) < 1e-6);
    CHECK(std::abs(cu.f1 - 4 * vv.f1) < 1e-6);
    CHECK(std::abs(cu.f2 - 4 * vv.f2) < 1e-6);
  }
  CHECK(min_norm(nk, 64).value > 0.0);
}

TEST_CASE("nonconstant-factor family on the sphere") {
  SphereBeltrami kl = nonconstant_beltrami_kl(1, 2);
  for (HopfPoint q : {HopfPoint{0.5, 1.0, 2.0}, HopfPoint{1.0, 0.2, 5.1}}) {
    FrameVector cu = curl_s3_numeric(kl.field.at, q, 1e-3, FdOrder::four);
    FrameVector vv = kl.field.at(q);
    double f = kl.factor(q);
    CHECK(std::abs(cu.f - f * vv.f) < 1e-6);
    CHECK(std::abs(cu.f1 - f * vv.f1) < 1e-6);
    CHECK(std::abs(cu.f2 - f * vv.f2) < 1e-6);
    // f = 2 k l |V|^2
    CHECK(f == doctest::Approx(2.0 * 1 * 2 * vv.norm_sq()).epsilon(1e-12));
  }
}

TEST_CASE("CSV sampling shape") {
  std::ostringstream out;
  sample_csv(frame_field_of(build_Vm(2)), 8, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,phi1,phi2,f,f1,f2");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 8 * 8 * 8);
}
