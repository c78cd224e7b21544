#pragma once

#include <vector>

#include "muquot/poly.hpp"

namespace muquot {

// Dense complex matrix, row-major.  Everything in this library is small
// (size <= 12 for the enumeration-based routines), so no cleverness here.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMatrix identity(int n);
  static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Cx& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const Cx& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(Cx s) const;
  std::vector<Cx> operator*(const std::vector<Cx>& v) const;

  CMatrix adjoint() const;

  // principal submatrix on the given (sorted, 0-based) index set
  CMatrix submatrix(const std::vector<int>& idx) const;
  // the matrix with first row and first column removed
  CMatrix deleted() const;
  // entries (1,0),(2,0),...,(n-1,0); the first column below the diagonal
  std::vector<Cx> first_subcolumn() const;

  double frobenius() const;
  double max_abs() const;

 private:
  int rows_, cols_;
  std::vector<Cx> a_;
};

double vec_norm2(const std::vector<Cx>& v);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

Cx det(const CMatrix& a);
CMatrix inverse(const CMatrix& a);  // Errc::Singular on rank loss
std::vector<Cx> solve(const CMatrix& a, const std::vector<Cx>& b);

enum class MinorMode { FirstRowIncluded, FirstRowExcluded };

// Sum of j-by-j principal minors whose index set either contains the first
// row (FirstRowIncluded) or avoids it (FirstRowExcluded).  Enumerates all
// C(n, j) subsets, which is why sizes are capped at 12.
Cx minor_sum(const CMatrix& a, int j, MinorMode mode);

inline constexpr int kMaxEnumSize = 12;

// det(I - A diag(z_1, ..., z_n))
Cx pencil_det_poly(const CMatrix& a, const std::vector<Cx>& z);

// Monic characteristic polynomial det(tI - A), built from full minor sums.
ComplexPoly char_poly(const CMatrix& a);

// Companion matrix of a monic polynomial: ones on the subdiagonal and the
// negated coefficients up the last column.
CMatrix companion(const ComplexPoly& p);

// det [v, Xv, ..., X^{m-1} v] for an m-by-m X; nonzero exactly when v is a
// cyclic vector for X.
Cx theta(const CMatrix& x, const std::vector<Cx>& v);

// Threshold below which theta is treated as vanishing.
double theta_tolerance(const CMatrix& x, const std::vector<Cx>& v);

// The Krylov matrix [a, Xa, ..., X^{m-1} a]; it is the unique G with
// G^{-1} X G in companion form and G e_1 = a.  Errc::NotCyclic when theta
// is below tolerance.
CMatrix krylov_gamma(const CMatrix& x, const std::vector<Cx>& a);

// Block-diagonal scalar + matrix pair acting by conjugation.
struct GroupElement {
  Cx g;
  CMatrix gamma;
  int size() const { return 1 + gamma.rows(); }
};

CMatrix block_diag1(Cx g, const CMatrix& gamma);

// (g (+) Gamma)^{-1} A (g (+) Gamma)
CMatrix conjugate(const CMatrix& a, const GroupElement& el);

CMatrix matrix_exp(const CMatrix& a);  // Pade with scaling and squaring
CMatrix matrix_log(const CMatrix& g);  // a principal logarithm

// Roots of char_poly; adequate for the sizes used here.
std::vector<Cx> eigenvalues(const CMatrix& a);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps (ascending).
std::vector<double> hermitian_eigenvalues(CMatrix h, double sweep_tol = 1e-13);

}  // namespace muquot
