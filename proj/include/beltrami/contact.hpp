#ifndef BELTRAMI_CONTACT_HPP
#define BELTRAMI_CONTACT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beltrami/nodal.hpp"
#include "beltrami/sphere_fields.hpp"
#include "beltrami/torus_fields.hpp"

namespace beltrami {

enum class Verdict { Tight, Overtwisted, Inconclusive };
std::string to_string(Verdict v);

// Everything a classification run certifies, at the resolution it ran at.
// Margins are grid facts, not proofs; the caveat says so.
struct ContactReport {
  std::string field;
  std::string manifold;  // "S3" or "T3"
  std::optional<double> lambda;
  double eig_residual = 0.0;
  double min_norm = 0.0;
  std::vector<double> char_surface;  // s-values of characteristic tori (S3)
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> hopf_invariant;
  std::map<std::string, double> margins;
  std::string caveat;
  double grid_spacing = 0.0;
  std::optional<NodalCurveSet> nodal_certificate;
};

// contact volume: the coefficient of alpha ^ d(alpha) against vol_g

// exact polynomial in z for the rotationally symmetric ansatz; equals
// lambda |V|^2 for eigenfields as a coefficient identity
Polynomial contact_volume_axi(const AxisymmetricField& v);
// finite-difference exterior derivative path for general frame fields
double contact_volume_s3(const FrameField& v, const HopfPoint& p,
                         double h = 1e-4, FdOrder order = FdOrder::four);
// V . curl V on the torus (exact curl for trig fields)
double contact_volume_t3(const TorusTrigField& v, const TorusPoint& p);
double contact_volume_t3(const TorusCallableField& v, const TorusPoint& p,
                         double h = 1e-4);

// roots of <R, V> = F + (2z-1)G on z in (0,1), reported as Hopf radii
// s0 = arccos(sqrt(z0)); each is a torus of the characteristic surface
struct CharacteristicSurface {
  std::vector<double> z_roots;
  std::vector<double> s_values;
  std::vector<std::string> warnings;
};
CharacteristicSurface characteristic_surface_s3(const AxisymmetricField& v);

// collinearity sets of two nonvanishing fields on a grid, refined by
// coordinate-descent golden section on the normalized cross product
struct AlignedPoint {
  std::array<double, 3> coords;  // (s, phi1, phi2) or (x1, x2, x3)
  double dot = 0.0;
  double cross_ratio = 0.0;
  double norm_ratio = 0.0;  // |V| / |W|
};
struct CollinearitySets {
  std::vector<AlignedPoint> c_plus, c_minus;
  double tol = 0.0;
  bool never_aligned() const { return c_plus.empty() && c_minus.empty(); }
};

CollinearitySets collinearity_sets_s3(const FrameField& V, const FrameField& W,
                                      int grid = 48, double tol = 1e-8);
CollinearitySets collinearity_sets_t3(const TorusTrigField& V,
                                      const TorusTrigField& W, int grid = 48,
                                      double tol = 1e-8);

// c0 = min over the collinearity set of |V|/|W|; +infinity when the fields
// are never aligned
struct C0Result {
  double c0 = 0.0;
  bool never_aligned = false;
};
C0Result compute_c0(const CollinearitySets& sets);

// Linear homotopy margin between the duals of two eigenfields with the same
// eigenvalue: min over grid x [0,1] of
//   t^2 |V|^2 + (1-t)^2 |W|^2 + 2 t (1-t) <V, W>,
// exact in t per point (quadratic).  Since ker(-beta) = ker(beta), the
// orientation of W is chosen to make the certificate work when one of
// C+/C- is empty; `flipped` records the choice.
struct HomotopyMargin {
  double margin = 0.0;  // scaled by |lambda|
  bool flipped = false;
};
HomotopyMargin check_linear_homotopy(const FrameField& V, const FrameField& W,
                                     double lambda, int grid = 40,
                                     int t_samples = 0);
HomotopyMargin check_linear_homotopy_t3(const TorusTrigField& V,
                                        const TorusTrigField& W, double lambda,
                                        int grid = 32, int t_samples = 0);
// shifted family alpha + c t beta
double check_shifted_homotopy_t3(const TorusTrigField& V,
                                 const TorusTrigField& W, double c,
                                 double lambda, int grid = 32);

// The worked closed-form homotopies.  margin is the min contact volume over
// the (grid x t) product; max_mismatch compares the mechanically computed
// volume with the closed-form value where one is stated.
struct NamedHomotopyResult {
  double margin = 0.0;
  double max_mismatch = 0.0;
  double value_at_t0 = 0.0, value_at_t1 = 0.0;
};
// names: t3_sqrt2_class | ex_final | s3_kl_family (k, l used only there)
NamedHomotopyResult verify_named_homotopy(const std::string& name,
                                          int grid = 64, int t_samples = 33,
                                          int k = 1, int l = 1);

// classification pipelines
struct ClassifyOptions {
  int grid = 48;
  double h = 1e-3;
  int whitehead_resolution = 1024;
  int nodal_grid = 512;
};

// Jacobi eigenfields V_m (|m| >= 2) and the Hopf/anti-Hopf fields (m = +-1):
// overtwisted iff the characteristic surface is nonempty (circle-invariant
// case, where the criterion is an equivalence), with Hopf invariant attached.
ContactReport classify_vm(int m, const ClassifyOptions& opt = {});

// named closed-form fields; the non-symmetric example is classified through
// its verified contact homotopy to V_2
ContactReport classify_builtin(const std::string& name,
                               const ClassifyOptions& opt = {});

// plane-wave eigenfields: tight, with constant-norm and standard-form
// reduction margins as the certificate
ContactReport classify_wave(const WaveSpec& spec,
                            const ClassifyOptions& opt = {});
ContactReport classify_eta(int m, const ClassifyOptions& opt = {});

// x3-invariant ansatz field of a T^2 eigenfunction: overtwisted when the
// nodal set is regular, disconnected, and has a contractible oval;
// inconclusive otherwise (the criterion is only necessary on T^3)
ContactReport classify_t2_ansatz(const T2Eigenfunction& f,
                                 const ClassifyOptions& opt = {});

// random search + classification, end to end
ContactReport classify_nodal_search(long long lambda, int trials,
                                    std::uint64_t seed,
                                    const ClassifyOptions& opt = {});

}  // namespace beltrami

#endif
