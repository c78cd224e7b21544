#include "muquot/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace muquot {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cx(1.0);
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::SizeMismatch, "matrix addition shape mismatch");
  CMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::SizeMismatch, "matrix subtraction shape mismatch");
  CMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::SizeMismatch, "matrix product shape mismatch");
  CMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Cx aik = (*this)(i, k);
      if (aik == Cx(0.0)) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

CMatrix CMatrix::operator*(Cx s) const {
  CMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

std::vector<Cx> CMatrix::operator*(const std::vector<Cx>& v) const {
  if (cols_ != static_cast<int>(v.size()))
    fail(Errc::SizeMismatch, "matrix-vector shape mismatch");
  std::vector<Cx> r(rows_, Cx(0.0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMatrix CMatrix::submatrix(const std::vector<int>& idx) const {
  int m = static_cast<int>(idx.size());
  CMatrix r(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r(i, j) = (*this)(idx[i], idx[j]);
  return r;
}

CMatrix CMatrix::deleted() const {
  if (rows_ < 2 || cols_ < 2)
    fail(Errc::SizeTooSmall, "no deleted submatrix below size 2");
  CMatrix r(rows_ - 1, cols_ - 1);
  for (int i = 1; i < rows_; ++i)
    for (int j = 1; j < cols_; ++j) r(i - 1, j - 1) = (*this)(i, j);
  return r;
}

std::vector<Cx> CMatrix::first_subcolumn() const {
  if (rows_ < 2) fail(Errc::SizeTooSmall, "no subcolumn below size 2");
  std::vector<Cx> v(rows_ - 1);
  for (int i = 1; i < rows_; ++i) v[i - 1] = (*this)(i, 0);
  return v;
}

double CMatrix::frobenius() const {
  double s = 0.0;
  for (const Cx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double s = 0.0;
  for (const Cx& v : a_) s = std::max(s, std::abs(v));
  return s;
}

double vec_norm2(const std::vector<Cx>& v) {
  double s = 0.0;
  for (const Cx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).max_abs();
}

namespace {

struct LU {
  int n = 0;
  std::vector<Cx> a;     // packed L\U factors
  std::vector<int> piv;  // row permutation
  int sign = 1;
  bool singular = false;
};

LU lu_factor(const CMatrix& m) {
  LU f;
  f.n = m.rows();
  f.a.resize(f.n * f.n);
  f.piv.resize(f.n);
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) f.a[i * f.n + j] = m(i, j);
  for (int i = 0; i < f.n; ++i) f.piv[i] = i;
  int n = f.n;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(f.a[k * n + k]);
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(f.a[i * n + k]);
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      return f;
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(f.a[k * n + j], f.a[p * n + j]);
      std::swap(f.piv[k], f.piv[p]);
      f.sign = -f.sign;
    }
    Cx pivot = f.a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      Cx l = f.a[i * n + k] / pivot;
      f.a[i * n + k] = l;
      for (int j = k + 1; j < n; ++j) f.a[i * n + j] -= l * f.a[k * n + j];
    }
  }
  return f;
}

std::vector<Cx> lu_solve(const LU& f, const std::vector<Cx>& b) {
  int n = f.n;
  std::vector<Cx> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[f.piv[i]];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= f.a[i * n + j] * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= f.a[i * n + j] * x[j];
    x[i] /= f.a[i * n + i];
  }
  return x;
}

Cx lu_det(const LU& f) {
  if (f.singular) return Cx(0.0);
  Cx d(static_cast<double>(f.sign));
  for (int i = 0; i < f.n; ++i) d *= f.a[i * f.n + i];
  return d;
}

}  // namespace

Cx det(const CMatrix& a) {
  if (!a.square()) fail(Errc::NotSquare, "determinant of non-square matrix");
  int n = a.rows();
  if (n == 0) return Cx(1.0);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (n == 3)
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  return lu_det(lu_factor(a));
}

CMatrix inverse(const CMatrix& a) {
  if (!a.square()) fail(Errc::NotSquare, "inverse of non-square matrix");
  LU f = lu_factor(a);
  if (f.singular) fail(Errc::Singular, "matrix numerically singular");
  int n = a.rows();
  CMatrix inv(n, n);
  std::vector<Cx> e(n, Cx(0.0));
  for (int j = 0; j < n; ++j) {
    e[j] = Cx(1.0);
    std::vector<Cx> col = lu_solve(f, e);
    e[j] = Cx(0.0);
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

std::vector<Cx> solve(const CMatrix& a, const std::vector<Cx>& b) {
  if (!a.square()) fail(Errc::NotSquare, "solve with non-square matrix");
  if (a.rows() != static_cast<int>(b.size()))
    fail(Errc::SizeMismatch, "solve shape mismatch");
  LU f = lu_factor(a);
  if (f.singular) fail(Errc::Singular, "matrix numerically singular");
  return lu_solve(f, b);
}

Cx minor_sum(const CMatrix& a, int j, MinorMode mode) {
  if (!a.square()) fail(Errc::NotSquare, "minor sums need a square matrix");
  int n = a.rows();
  if (n > kMaxEnumSize)
    fail(Errc::BadInput, "minor enumeration capped at size 12");
  if (j < 1 || j > n) fail(Errc::IndexOutOfRange, "minor order out of range");

  bool with_first = mode == MinorMode::FirstRowIncluded;
  int pick = with_first ? j - 1 : j;  // indices chosen from {1, ..., n-1}
  if (pick > n - 1) return Cx(0.0);   // empty index family

  std::vector<int> idx(j);
  std::vector<int> comb(pick);
  for (int i = 0; i < pick; ++i) comb[i] = i + 1;

  Cx total(0.0);
  while (true) {
    int at = 0;
    if (with_first) idx[at++] = 0;
    for (int i = 0; i < pick; ++i) idx[at++] = comb[i];
    total += det(a.submatrix(idx));

    // next combination of `pick` elements from {1, ..., n-1}
    int i = pick - 1;
    while (i >= 0 && comb[i] == n - 1 - (pick - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int k = i + 1; k < pick; ++k) comb[k] = comb[k - 1] + 1;
    if (pick == 0) break;
  }
  return total;
}

Cx pencil_det_poly(const CMatrix& a, const std::vector<Cx>& z) {
  if (!a.square()) fail(Errc::NotSquare, "pencil needs a square matrix");
  int n = a.rows();
  if (n != static_cast<int>(z.size()))
    fail(Errc::SizeMismatch, "pencil variable count mismatch");
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = (i == j ? Cx(1.0) : Cx(0.0)) - a(i, j) * z[j];
  return det(m);
}

ComplexPoly char_poly(const CMatrix& a) {
  if (!a.square()) fail(Errc::NotSquare, "characteristic polynomial");
  int n = a.rows();
  if (n > kMaxEnumSize)
    fail(Errc::BadInput, "minor enumeration capped at size 12");
  std::vector<Cx> c(n + 1, Cx(0.0));
  c[n] = Cx(1.0);
  double sign = -1.0;
  for (int j = 1; j <= n; ++j) {
    Cx ej = minor_sum(a, j, MinorMode::FirstRowIncluded);
    if (j <= n - 1) ej += minor_sum(a, j, MinorMode::FirstRowExcluded);
    c[n - j] = sign * ej;
    sign = -sign;
  }
  return ComplexPoly(std::move(c));
}

CMatrix companion(const ComplexPoly& p) {
  int m = p.degree();
  if (m < 1) fail(Errc::DegreeZero, "companion of a constant");
  if (std::abs(p.leading() - Cx(1.0)) > 1e-10)
    fail(Errc::NotMonic, "companion needs a monic polynomial");
  CMatrix c(m, m);
  for (int i = 1; i < m; ++i) c(i, i - 1) = Cx(1.0);
  for (int i = 0; i < m; ++i) c(i, m - 1) = -p.coeff(i);
  return c;
}

Cx theta(const CMatrix& x, const std::vector<Cx>& v) {
  if (!x.square()) fail(Errc::NotSquare, "theta needs a square matrix");
  int m = x.rows();
  if (m != static_cast<int>(v.size()))
    fail(Errc::SizeMismatch, "theta vector length mismatch");
  CMatrix k(m, m);
  std::vector<Cx> col = v;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) k(i, j) = col[i];
    if (j + 1 < m) col = x * col;
  }
  return det(k);
}

double theta_tolerance(const CMatrix& x, const std::vector<Cx>& v) {
  int m = x.rows();
  double growth = m >= 2 ? std::pow(x.frobenius(), m - 1) : 1.0;
  return 1e-10 * (1.0 + growth * vec_norm2(v));
}

CMatrix krylov_gamma(const CMatrix& x, const std::vector<Cx>& a) {
  if (!x.square()) fail(Errc::NotSquare, "Krylov needs a square matrix");
  int m = x.rows();
  if (m != static_cast<int>(a.size()))
    fail(Errc::SizeMismatch, "Krylov vector length mismatch");
  CMatrix k(m, m);
  std::vector<Cx> col = a;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) k(i, j) = col[i];
    if (j + 1 < m) col = x * col;
  }
  if (std::abs(det(k)) <= theta_tolerance(x, a))
    fail(Errc::NotCyclic, "vector is not cyclic for the matrix");
  return k;
}

CMatrix block_diag1(Cx g, const CMatrix& gamma) {
  int m = gamma.rows();
  CMatrix t(m + 1, m + 1);
  t(0, 0) = g;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t(i + 1, j + 1) = gamma(i, j);
  return t;
}

CMatrix conjugate(const CMatrix& a, const GroupElement& el) {
  if (!a.square()) fail(Errc::NotSquare, "conjugation needs a square matrix");
  if (el.size() != a.rows())
    fail(Errc::SizeMismatch, "group element size mismatch");
  if (std::abs(el.g) < 1e-300)
    fail(Errc::SingularGroupElement, "scalar block is zero");
  CMatrix gamma_inv;
  try {
    gamma_inv = inverse(el.gamma);
  } catch (const Error&) {
    fail(Errc::SingularGroupElement, "matrix block is singular");
  }
  CMatrix t = block_diag1(el.g, el.gamma);
  CMatrix tinv = block_diag1(1.0 / el.g, gamma_inv);
  return tinv * a * t;
}

CMatrix matrix_exp(const CMatrix& a) {
  if (!a.square()) fail(Errc::NotSquare, "exp of non-square matrix");
  int n = a.rows();
  // degree-6 diagonal Pade after scaling ||A|| below 1/2
  static const double b[] = {1.0,          1.0 / 2.0,     5.0 / 44.0,
                             1.0 / 66.0,   1.0 / 792.0,   1.0 / 15840.0,
                             1.0 / 665280.0};
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  CMatrix x = a * Cx(std::ldexp(1.0, -s));

  CMatrix num = CMatrix::identity(n);
  CMatrix den = CMatrix::identity(n);
  CMatrix power = CMatrix::identity(n);
  double sign = -1.0;
  for (int k = 1; k <= 6; ++k) {
    power = power * x;
    num = num + power * Cx(b[k]);
    den = den + power * Cx(sign * b[k]);
    sign = -sign;
  }
  CMatrix e = inverse(den) * num;
  for (int k = 0; k < s; ++k) e = e * e;
  return e;
}

std::vector<Cx> eigenvalues(const CMatrix& a) {
  ComplexPoly p = char_poly(a);
  if (p.degree() < 1) return {};
  return poly_roots(p);
}

namespace {

// inverse iteration for the eigenvector of a (nearly) known eigenvalue
std::vector<Cx> eigvec_for(const CMatrix& a, Cx lambda, int column) {
  int n = a.rows();
  std::mt19937_64 rng(0x5bd1e995u + column);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Cx> v(n);
  for (Cx& x : v) x = Cx(gauss(rng), gauss(rng));
  double shift = 1e-12 * (1.0 + std::abs(lambda)) + 1e-300;
  for (int attempt = 0; attempt < 4; ++attempt) {
    CMatrix m = a;
    Cx mu = lambda + Cx(shift, shift);
    for (int i = 0; i < n; ++i) m(i, i) -= mu;
    try {
      for (int it = 0; it < 3; ++it) {
        v = solve(m, v);
        double nv = vec_norm2(v);
        if (!(nv > 0.0) || !std::isfinite(nv)) fail(Errc::Singular, "blowup");
        for (Cx& x : v) x /= nv;
      }
      return v;
    } catch (const Error&) {
      shift *= 1e3;  // landed too close to singular; back off
    }
  }
  fail(Errc::NonConvergence, "inverse iteration failed");
}

CMatrix sqrt_denman_beavers(const CMatrix& a) {
  CMatrix y = a;
  CMatrix z = CMatrix::identity(a.rows());
  for (int it = 0; it < 60; ++it) {
    CMatrix yn = (y + inverse(z)) * Cx(0.5);
    CMatrix zn = (z + inverse(y)) * Cx(0.5);
    double step = max_abs_diff(yn, y);
    y = yn;
    z = zn;
    if (step <= 1e-15 * (1.0 + y.max_abs())) break;
  }
  if (max_abs_diff(y * y, a) > 1e-8 * (1.0 + a.max_abs()))
    fail(Errc::NonConvergence, "matrix square root did not converge");
  return y;
}

}  // namespace

CMatrix matrix_log(const CMatrix& g) {
  if (!g.square()) fail(Errc::NotSquare, "log of non-square matrix");
  int n = g.rows();
  double scale = 1.0 + g.max_abs();

  std::vector<Cx> lam = eigenvalues(g);
  for (const Cx& l : lam)
    if (std::abs(l) <= 1e-13 * scale)
      fail(Errc::Singular, "log of a singular matrix");

  // eigendecomposition route for well-separated spectra
  double sep = 1e300;
  double lmax = 0.0;
  for (size_t i = 0; i < lam.size(); ++i) {
    lmax = std::max(lmax, std::abs(lam[i]));
    for (size_t j = i + 1; j < lam.size(); ++j)
      sep = std::min(sep, std::abs(lam[i] - lam[j]));
  }
  if (n == 1) {
    CMatrix l(1, 1);
    l(0, 0) = std::log(g(0, 0));
    return l;
  }
  if (sep > 1e-8 * (1.0 + lmax)) {
    try {
      CMatrix v(n, n);
      for (int j = 0; j < n; ++j) {
        std::vector<Cx> col = eigvec_for(g, lam[j], j);
        for (int i = 0; i < n; ++i) v(i, j) = col[i];
      }
      CMatrix vinv = inverse(v);
      if (v.frobenius() * vinv.frobenius() < 1e6) {
        CMatrix d(n, n);
        for (int j = 0; j < n; ++j) d(j, j) = std::log(lam[j]);
        CMatrix l = v * d * vinv;
        if (max_abs_diff(matrix_exp(l), g) <= 1e-9 * scale) return l;
      }
    } catch (const Error&) {
      // fall through to inverse scaling and squaring
    }
  }

  CMatrix b = g;
  int k = 0;
  while (max_abs_diff(b, CMatrix::identity(n)) > 0.25 && k < 40) {
    b = sqrt_denman_beavers(b);
    ++k;
  }
  CMatrix x = b - CMatrix::identity(n);
  CMatrix term = x;
  CMatrix acc = x;
  for (int j = 2; j <= 64; ++j) {
    term = term * x;
    double sign = (j % 2 == 0) ? -1.0 : 1.0;
    acc = acc + term * Cx(sign / j);
    if (term.max_abs() / j < 1e-18) break;
  }
  CMatrix l = acc * Cx(std::ldexp(1.0, k));
  if (max_abs_diff(matrix_exp(l), g) > 1e-8 * scale)
    fail(Errc::NonConvergence, "matrix log did not converge");
  return l;
}

std::vector<double> hermitian_eigenvalues(CMatrix h, double sweep_tol) {
  if (!h.square()) fail(Errc::NotSquare, "Hermitian eigenvalues");
  int n = h.rows();
  if (n == 0) return {};
  double fro = std::max(1.0, h.frobenius());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) off += std::norm(h(p, q));
    if (std::sqrt(off) <= sweep_tol * fro) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Cx apq = h(p, q);
        double m = std::abs(apq);
        if (m <= 1e-300) continue;
        // phase out the pivot so a real rotation applies
        Cx phase = apq / m;
        for (int k = 0; k < n; ++k) h(k, q) *= std::conj(phase);
        for (int k = 0; k < n; ++k) h(q, k) *= phase;

        double app = h(p, p).real();
        double aqq = h(q, q).real();
        double tau = (aqq - app) / (2.0 * m);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        for (int k = 0; k < n; ++k) {
          Cx hkp = h(k, p), hkq = h(k, q);
          h(k, p) = hkp * c - hkq * s;
          h(k, q) = hkp * s + hkq * c;
        }
        for (int k = 0; k < n; ++k) {
          Cx hpk = h(p, k), hqk = h(q, k);
          h(p, k) = hpk * c - hqk * s;
          h(q, k) = hpk * s + hqk * c;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace muquot
