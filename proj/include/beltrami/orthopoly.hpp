#ifndef BELTRAMI_ORTHOPOLY_HPP
#define BELTRAMI_ORTHOPOLY_HPP

#include <utility>
#include <vector>

#include "beltrami/polynomial.hpp"

namespace beltrami {

// Jacobi P_n^{(1,1)} by the three-term recurrence
//   n(n+2) P_n = (n+1) [ (2n+1) x P_{n-1} - n P_{n-2} ],  P_0 = 1, P_1 = 2x,
// normalized so that P_n^{(1,1)}(1) = n+1.
double jacobi11(int n, double x);
Polynomial jacobi11_poly(int n);  // exact coefficients in the variable x

// Gegenbauer C_n^{(3/2)} with the generating-function convention
// (1 - 2tx + t^2)^{-3/2} = sum_n C_n(x) t^n; C_n(1) = (n+1)(n+2)/2.
double gegenbauer32(int n, double x);

// Coefficient pair of the rotationally symmetric eigenfield ansatz,
//   F_m(z) = P_{m-1}^{(1,1)}(1-2z) / m,  G_m(z) = P_{m-2}^{(1,1)}(1-2z) / (m+1),
// expanded exactly in z.
struct EigenPair {
  int m = 0;
  Polynomial F;  // degree m-1, F(0) = 1
  Polynomial G;  // degree m-2, G(0) = (m-1)/(m+1)
};
EigenPair eigenpair(int m);

// Characteristic polynomial  P_m(z) = F_m(z) + (2z-1) G_m(z),  degree m-1.
// Its roots in (0,1) locate the tori where the circle-action generator lies
// in the contact planes.
Polynomial char_poly(int m);

// Real root isolation on an open interval: sign-change bracketing on a
// uniform grid of 10*deg cells, bisection to tol, with an exact Sturm count
// as a safety net (the grid is refined until the counts agree).
struct RootSet {
  std::vector<double> roots;
  std::vector<std::string> warnings;  // "possible multiple root near ..."
};
RootSet isolate_roots(const Polynomial& p, double a, double b,
                      double tol = 1e-12);

// Number of distinct real roots in (a,b], exact arithmetic.
int sturm_count(const Polynomial& p, const Rational& a, const Rational& b);

// Zeros of F_m and G_m alternate strictly on (0,1); margin is the smallest
// distance between a root of F and a root of G.
struct InterlacingReport {
  bool ok = false;
  double margin = 0.0;
};
InterlacingReport check_interlacing(int m, double tol = 1e-12);

// min over a uniform grid of w in (-1,1) of
//   [P_{m-1}(w)]^2 - m^2/(m^2-1) P_m(w) P_{m-2}(w),
// strictly positive in the interior; endpoints |w|=1 are excluded since the
// expression degenerates to zero there.
double turan_margin(int m, int grid_points);

}  // namespace beltrami

#endif
