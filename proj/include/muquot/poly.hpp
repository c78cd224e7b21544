#pragma once

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "muquot/errors.hpp"

namespace muquot {

using Cx = std::complex<double>;

// Trailing coefficients with modulus below kTrimTol * max|coeff| are treated
// as zero, so degrees follow the numerics instead of the container size.
inline constexpr double kTrimTol = 1e-13;

// Dense univariate polynomial over the complex numbers, coefficients stored
// in ascending order.  The zero polynomial keeps a single zero coefficient.
class ComplexPoly {
 public:
  ComplexPoly() : c_(1, Cx(0.0)) {}
  explicit ComplexPoly(std::vector<Cx> coeffs);

  static ComplexPoly from_roots(Cx leading, const std::vector<Cx>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const;
  const std::vector<Cx>& coeffs() const { return c_; }
  Cx coeff(int k) const;  // zero beyond the stored degree
  Cx leading() const { return c_.back(); }
  double coeff_scale() const;  // max |c_k|

  Cx eval(Cx z) const;
  // Sum of |c_k| |z|^k, the natural scale for residual tests at z.
  double eval_scale(Cx z) const;

  ComplexPoly derivative() const;
  // Synthetic division by (z - root); the remainder is discarded.
  ComplexPoly deflate(Cx root) const;

  ComplexPoly operator+(const ComplexPoly& o) const;
  ComplexPoly operator-(const ComplexPoly& o) const;
  ComplexPoly operator*(const ComplexPoly& o) const;
  ComplexPoly operator*(Cx s) const;

 private:
  void trim();
  std::vector<Cx> c_;
};

inline Cx poly_eval(const ComplexPoly& p, Cx z) { return p.eval(z); }

// All roots with multiplicity via the Aberth-Ehrlich iteration.  Iterates are
// accepted once |p(z)| <= tol * sum_k |c_k||z|^k.  Starts on a perturbed
// circle at the Cauchy bound; up to 3 restarts with fresh random phases
// before giving up.  Deterministic for a given (polynomial, tol, seed).
std::vector<Cx> poly_roots(const ComplexPoly& p, double tol = 1e-12,
                           std::uint64_t seed = 0x9e3779b97f4a7c15ull);

// Resultant through the Sylvester-matrix determinant, normalized so that
// resultant(p, q) = lead(p)^deg(q) * prod_i q(alpha_i) over the roots of p.
Cx resultant(const ComplexPoly& p, const ComplexPoly& q);

// Elementary symmetric polynomial e_j of the given values; e_0 = 1.
Cx elem_symmetric(const std::vector<Cx>& values, int j);

// Greedy matching of nearby roots of p and q; each matched pair is reported
// as its midpoint.  Matching distance is absolute (roots of these problems
// live near the unit disc); coefficients are scale-normalized before the
// root solves.
std::vector<Cx> matched_common_roots(const ComplexPoly& p,
                                     const ComplexPoly& q, double tol = 1e-8);

struct DiscCount {
  int inside = 0;    // |root| < r - boundary_tol
  int boundary = 0;  // ||root| - r| <= boundary_tol
  std::vector<Cx> roots;
};

DiscCount roots_in_closed_disc(const ComplexPoly& p, double r,
                               double boundary_tol = 1e-9);

struct CircleMax {
  double value = 0.0;
  Cx arg;  // point on the circle where the maximum was seen
};

// Approximate max of f on |z| = r: coarse uniform sweep followed by
// golden-section refinement of the angular intervals around the best
// local maxima.
CircleMax circle_max(const std::function<double(Cx)>& f, double r,
                     int coarse_samples = 512, int refine_top = 8);

}  // namespace muquot
