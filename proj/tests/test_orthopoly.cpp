#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beltrami/orthopoly.hpp"

using namespace beltrami;

TEST_CASE("jacobi normalization P_m(1) = m+1") {
  for (int m = 0; m <= 10; ++m) CHECK(jacobi11(m, 1.0) == doctest::Approx(m + 1.0));
  for (double x : {-0.9, -0.2, 0.0, 0.4, 1.0}) CHECK(jacobi11(0, x) == 1.0);
}

TEST_CASE("jacobi parity P_m(-x) = (-1)^m P_m(x)") {
  for (int m = 1; m <= 9; ++m)
    for (int i = 0; i <= 20; ++i) {
      double x = -1.0 + 0.1 * i;
      double sign = m % 2 == 0 ? 1.0 : -1.0;
      CHECK(jacobi11(m, -x) == doctest::Approx(sign * jacobi11(m, x)).epsilon(1e-12));
    }
}

TEST_CASE("exact polynomial recurrence agrees with scalar evaluation") {
  for (int m = 0; m <= 12; ++m) {
    Polynomial p = jacobi11_poly(m);
    for (int i = 0; i <= 8; ++i) {
      double x = -1.0 + 0.25 * i;
      CHECK(p.eval(x) == doctest::Approx(jacobi11(m, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("eigenpair expansions for small m") {
  EigenPair e2 = eigenpair(2);
  CHECK(e2.F == Polynomial{1, -2});
  CHECK(e2.G == Polynomial{Rational(1, 3)});
  EigenPair e3 = eigenpair(3);
  CHECK(e3.F == Polynomial{1, -5, 5});
  CHECK(e3.G == Polynomial{Rational(1, 2), Rational(-1)});
  for (int m = 2; m <= 12; ++m) {
    EigenPair e = eigenpair(m);
    CHECK(e.F.eval(Rational(0)) == Rational(1));
    CHECK(e.G.eval(Rational(0)) == Rational(m - 1, m + 1));
    CHECK(e.F.degree() == m - 1);
    CHECK(e.G.degree() == m - 2);
  }
  CHECK_THROWS_AS(eigenpair(1), std::invalid_argument);
}

TEST_CASE("characteristic polynomials match the known fractions") {
  CHECK(char_poly(2) == Polynomial{Rational(2, 3), Rational(-4, 3)});
  CHECK(char_poly(3) == Polynomial{Rational(1, 2), Rational(-3), Rational(3)});
  CHECK(char_poly(4) == Polynomial{Rational(2, 5), Rational(-24, 5),
                                   Rational(12), Rational(-8)});
}

TEST_CASE("root isolation on the characteristic polynomials") {
  RootSet r2 = isolate_roots(char_poly(2), 0.0, 1.0);
  REQUIRE(r2.roots.size() == 1);
  CHECK(r2.roots[0] == doctest::Approx(0.5).epsilon(1e-12));

  // roots of 1/2 - 3z + 3z^2 by the quadratic formula: (3 +- sqrt(3))/6
  RootSet r3 = isolate_roots(char_poly(3), 0.0, 1.0);
  REQUIRE(r3.roots.size() == 2);
  CHECK(r3.roots[0] == doctest::Approx(0.21132486540518713).epsilon(1e-11));
  CHECK(r3.roots[1] == doctest::Approx(0.78867513459481287).epsilon(1e-11));

  for (int m = 2; m <= 20; ++m) {
    RootSet r = isolate_roots(char_poly(m), 0.0, 1.0);
    CHECK(!r.roots.empty());
    // bracketing found exactly what the exact Sturm chain predicts
    CHECK(static_cast<int>(r.roots.size()) ==
          sturm_count(char_poly(m), Rational(0), Rational(1)));
  }
}

TEST_CASE("root isolation flags a double root") {
  // (z - 1/2)^2
  Polynomial p{Rational(1, 4), Rational(-1), Rational(1)};
  RootSet r = isolate_roots(p, 0.0, 1.0);
  CHECK(!r.warnings.empty());
}

TEST_CASE("interlacing of F_m and G_m zeros") {
  CHECK(check_interlacing(2).ok);
  CHECK(check_interlacing(3).ok);
  InterlacingReport r10 = check_interlacing(10);
  CHECK(r10.ok);
  CHECK(r10.margin > 0.0);
}

TEST_CASE("Turan margin positive away from the endpoints") {
  CHECK(turan_margin(2, 1000) > 0.0);
  CHECK(turan_margin(5, 1000) > 0.0);
  for (int m = 2; m <= 12; ++m) CHECK(turan_margin(m, 512) > 0.0);
  // at w = 1 the inequality closes up: P_{m-1}(1)^2 = m^2/(m^2-1) P_m P_{m-2}
  for (int m = 2; m <= 8; ++m) {
    double lhs = jacobi11(m - 1, 1.0) * jacobi11(m - 1, 1.0);
    double rhs = static_cast<double>(m) * m / (static_cast<double>(m) * m - 1.0) *
                 jacobi11(m, 1.0) * jacobi11(m - 2, 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("profile pair solves the curl system as a polynomial identity") {
  // (2z-1)F' + 2F + G' = 2m F  and  (2z-1)G' + 2G + F' = -2m G
  Polynomial twozm1{-1, 2};
  for (int m = 2; m <= 12; ++m) {
    EigenPair e = eigenpair(m);
    Polynomial lhs1 =
        twozm1 * e.F.derivative() + e.F * Rational(2) + e.G.derivative();
    Polynomial lhs2 =
        twozm1 * e.G.derivative() + e.G * Rational(2) + e.F.derivative();
    CHECK((lhs1 - e.F * Rational(2 * m)).is_zero());
    CHECK((lhs2 + e.G * Rational(2 * m)).is_zero());
  }
}

TEST_CASE("F_m solves the hypergeometric equation as a polynomial identity") {
  // 4z(z-1) F'' + 8(2z-1) F' - (2m+4)(2m-2) F = 0
  Polynomial zz{0, -4, 4};   // 4z(z-1)
  Polynomial lin{-8, 16};    // 8(2z-1)
  for (int m = 2; m <= 12; ++m) {
    EigenPair e = eigenpair(m);
    Polynomial lhs = zz * e.F.derivative().derivative() +
                     lin * e.F.derivative() -
                     e.F * Rational((2 * m + 4) * (2 * m - 2));
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("Gegenbauer normalization matches the Jacobi form pointwise") {
  for (int m = 2; m <= 10; ++m) {
    EigenPair e = eigenpair(m);
    double cF1 = gegenbauer32(m - 1, 1.0);
    double cG1 = gegenbauer32(m - 2, 1.0);
    for (int i = 0; i <= 32; ++i) {
      double z = static_cast<double>(i) / 32;
      double w = 1.0 - 2.0 * z;
      CHECK(e.F.eval(z) ==
            doctest::Approx(gegenbauer32(m - 1, w) / cF1).epsilon(1e-12));
      double gexp = (m - 1.0) / (m + 1.0) * gegenbauer32(m - 2, w) / cG1;
      CHECK(e.G.eval(z) == doctest::Approx(gexp).epsilon(1e-12));
    }
  }
}
