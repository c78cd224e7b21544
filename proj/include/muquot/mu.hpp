#pragma once

#include <optional>

#include "muquot/matrix.hpp"
#include "muquot/quotient_point.hpp"

namespace muquot {

// The determinant pencil of a size-n matrix against diag(w, z, ..., z):
//   det(I - A diag(w, z, ..., z)) = Q(z) - w P(z).
// Q always has constant term exactly 1.  The structured singular value of A
// is the reciprocal of the distance from the zero set of Q - wP to the
// origin in the max-norm on (z, w).
struct WitnessPair {
  int n = 0;
  ComplexPoly P;
  ComplexPoly Q;
};

WitnessPair witness_pair(const CMatrix& a);
WitnessPair witness_pair(const QuotientPoint& q);

enum class Feasibility { Feasible, Infeasible, Indeterminate };

// Outcome of testing whether the zero set of Q - wP avoids the closed
// bidisc of radius r.  An Infeasible result carries a zero-set point
// (z, w) inside that bidisc; a Feasible result carries the worst boundary
// sample seen.
struct FeasibilityResult {
  Feasibility status = Feasibility::Indeterminate;
  Cx z;
  Cx w;
  double attained = 0.0;  // r * max |P/Q| on |z| = r, or the offending |root|
  const char* reason = "";
};

FeasibilityResult mu_feasible(const WitnessPair& pair, double r,
                              double margin = 1e-7);

struct MuWitness {
  Cx z;
  Cx w;
  double residual = 0.0;  // |Q(z) - w P(z)|
};

struct MuResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<MuWitness> witness;
};

// Bisection on the bidisc radius; bracket width targets
// tol * max(1, value).  An empty zero set yields exactly zero.
MuResult mu_eval(const WitnessPair& pair, double tol = 1e-8);
MuResult mu_eval(const CMatrix& a, double tol = 1e-8);

// Brute-force approximation: polar sweep of the fiber w = Q(z)/P(z) with
// local refinement, plus the exact root branches of Q and matched common
// roots.  Reference oracle for mu_eval.
double mu_brute(const WitnessPair& pair, int z_grid = 400);
double mu_brute(const CMatrix& a, int z_grid = 400);

struct OmegaVerdict {
  Region region = Region::Boundary;
  MuResult mu;
};

// Membership of A in the mu-unit ball, decided through mu_eval with a
// symmetric margin band around 1.
OmegaVerdict in_omega(const CMatrix& a, double margin = 1e-7);

}  // namespace muquot
