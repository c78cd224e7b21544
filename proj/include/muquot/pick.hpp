#pragma once

#include "muquot/quotient.hpp"

namespace muquot {

// Interpolation node in the open unit disc with its matrix target.
struct PickDatum {
  Cx node;
  CMatrix target;
};

struct PickDataset {
  int n = 0;  // target size
  std::vector<PickDatum> data;
  void validate() const;
};

struct ProjectedDatum {
  QuotientPoint q;
  GenericityReport gen;
};

std::vector<ProjectedDatum> project_dataset(const PickDataset& ds);

// Reduced rational of q evaluated at z.
Cx psi_at(const QuotientPoint& q, Cx z);

// M[j][k] = (1 - conj(psi_j) psi_k) / (1 - conj(node_j) node_k) with
// psi_j the reduced rational of qs[j] at z.  Hermitian by construction.
CMatrix pick_matrix(const std::vector<QuotientPoint>& qs,
                    const std::vector<Cx>& nodes, Cx z);

struct PsdReport {
  bool is_psd = false;
  double min_eig = 0.0;
};

// Smallest eigenvalue by cyclic Jacobi; inputs must be Hermitian within
// 1e-10 (they are symmetrized before sweeping).
PsdReport psd_check(const CMatrix& h, double tol = 1e-9);

enum class PickVerdict { ConsistentAtSamples, Violated };

struct PickSample {
  Cx z;
  double min_eig = 0.0;
};

struct NecessaryReport {
  PickVerdict verdict = PickVerdict::ConsistentAtSamples;
  double min_eig = 0.0;
  Cx worst_z;
  std::vector<PickSample> samples;
};

// Sweeps the Pick matrices over boundary samples plus a fixed interior
// grid.  A certified negative eigenvalue rules out any interpolant with
// values in the quotient domain.  Refuses datasets whose projections are
// not strictly inside.
NecessaryReport necessary_report(const PickDataset& ds, int z_samples = 64,
                                 double tol = 1e-9);

// Disc-to-quotient map with per-component polynomial representation,
// components ordered x_1..x_n, y_1..y_{n-1}.
struct QuotientMap {
  int n = 0;
  std::vector<ComplexPoly> comps;
  void validate() const;
  QuotientPoint eval(Cx zeta) const;
};

struct MatrixPolynomial {
  std::vector<CMatrix> coeffs;  // ascending
  CMatrix eval(Cx zeta) const;
};

// Everything produced by a lift: the interpolated logarithms, the matrix
// polynomial joining them, and evaluators for the canonical curve phi and
// the corrected interpolant F = (1 (+) e^{Psi}) phi (1 (+) e^{-Psi}).
struct LiftArtifacts {
  int n = 0;
  std::vector<Cx> nodes;
  QuotientMap f;
  std::vector<CMatrix> gammas;
  std::vector<CMatrix> logs;
  MatrixPolynomial psi;
  std::vector<double> node_residuals;

  CMatrix phi(Cx zeta) const;
  CMatrix F(Cx zeta) const;
  // mu < 1 of F on a polar grid, via a single bidisc-radius-1 feasibility
  // test per sample
  bool mu_ok_on_grid(int radii = 16, int angles = 16,
                     double margin = 1e-9) const;
};

// Constructive lift of a disc-to-quotient interpolant f of the projected
// data back to a matrix-valued interpolant of the dataset itself.
// Validates genericity of the targets, agreement of f at the nodes, and
// membership of f over a polar grid before building the correction.
LiftArtifacts lift(const PickDataset& ds, const QuotientMap& f,
                   int grid_radii = 24, int grid_angles = 48,
                   double range_margin = 1e-4);

struct SynthInstance {
  PickDataset ds;
  QuotientMap f;
};

// Random solvable instance: a linear matrix pencil scaled so its boundary
// mu maximum is 0.9 +- 0.01, sampled at random nodes, with f the exact
// polynomial projection of the pencil.  Deterministic per seed.
SynthInstance synthesize_instance(int n, int m, std::uint64_t seed);

}  // namespace muquot
