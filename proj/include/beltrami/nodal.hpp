#ifndef BELTRAMI_NODAL_HPP
#define BELTRAMI_NODAL_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "beltrami/polynomial.hpp"
#include "beltrami/spherical_harmonics.hpp"

namespace beltrami {

// Laplace eigenfunction on the square flat 2-torus:
//   f = sum over lattice modes k with |k|^2 = Lambda of
//       a_k cos(k.x) + b_k sin(k.x).
// Coefficients are rational so that fields built from f keep exact algebra.
struct T2Mode {
  std::array<int, 2> k;
  Rational c_cos, c_sin;
};

class T2Eigenfunction {
public:
  T2Eigenfunction(long long lambda, std::vector<T2Mode> modes);
  double eval(double x1, double x2) const;
  std::array<double, 2> grad(double x1, double x2) const;
  long long eigenvalue() const { return lambda_; }
  const std::vector<T2Mode>& modes() const { return modes_; }

private:
  long long lambda_ = 0;
  std::vector<T2Mode> modes_;
  struct DMode {
    double k1, k2, cc, cs;
  };
  std::vector<DMode> dm_;
};

// all lattice vectors with |k|^2 = Lambda, one of each {k, -k} pair
std::vector<std::array<int, 2>> lattice_modes(long long lambda);

// Extracted zero set: closed polylines with homology class and the gradient
// margin along the curve.
struct NodalComponent {
  std::vector<std::array<double, 2>> points;  // in [0, 2pi)^2
  int hom1 = 0, hom2 = 0;                     // lift winding / 2pi
  double margin = 0.0;                        // min |grad f| on the component
  int nesting = 0;  // number of contractible components enclosing this one
  bool contractible() const { return hom1 == 0 && hom2 == 0; }
};

struct NodalCurveSet {
  std::vector<NodalComponent> components;
  double min_margin = 0.0;
  bool irregular_suspected = false;
  int grid = 0;
};

// Marching squares with linear interpolation on an n x n periodic grid;
// saddle cells are disambiguated by the cell-center value.
NodalCurveSet extract_nodal_set(const T2Eigenfunction& f, int n);

double regularity_margin(const T2Eigenfunction& f, const NodalCurveSet& curves);

// Random search for an eigenfunction whose nodal set is regular,
// disconnected, and contains a null-homologous oval.  Draws are unit
// Gaussians snapped to dyadic rationals.
struct ContractibleSearchResult {
  bool success = false;
  int trials_used = 0;
  long long lambda = 0;
  std::vector<T2Mode> modes;
  NodalCurveSet certificate;
  std::string message;
};
ContractibleSearchResult search_contractible(long long lambda, int trials,
                                             std::uint64_t seed, int grid = 512);

// Nodal regularity margin of an S^2 eigenfunction on a lat-long grid.
struct S2NodalReport {
  double margin = 0.0;
  bool nonempty = false;
  bool irregular_suspected = false;
};
S2NodalReport s2_nodal_regularity(const S2Harmonic& f, int grid = 256);

}  // namespace beltrami

#endif
