#include "muquot/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace muquot {

namespace {

// Determinant of a dense complex matrix by LU with partial pivoting.
// Local helper; the matrix toolkit has its own full-featured version.
Cx dense_det(std::vector<Cx> a, int n) {
  Cx det(1.0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a[k * n + k]);
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a[i * n + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return Cx(0.0);
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      Cx f = a[i * n + k] / a[k * n + k];
      for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<Cx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, Cx(0.0));
  trim();
}

void ComplexPoly::trim() {
  double scale = 0.0;
  for (const Cx& v : c_) scale = std::max(scale, std::abs(v));
  double cut = kTrimTol * scale;
  while (c_.size() > 1 && std::abs(c_.back()) <= cut) c_.pop_back();
  if (c_.size() == 1 && std::abs(c_[0]) <= cut) c_[0] = Cx(0.0);
}

ComplexPoly ComplexPoly::from_roots(Cx leading, const std::vector<Cx>& roots) {
  std::vector<Cx> c{leading};
  for (const Cx& r : roots) {
    c.push_back(Cx(0.0));
    for (int k = static_cast<int>(c.size()) - 1; k > 0; --k)
      c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return ComplexPoly(std::move(c));
}

bool ComplexPoly::is_zero() const {
  return c_.size() == 1 && c_[0] == Cx(0.0);
}

Cx ComplexPoly::coeff(int k) const {
  if (k < 0) fail(Errc::IndexOutOfRange, "negative coefficient index");
  return k < static_cast<int>(c_.size()) ? c_[k] : Cx(0.0);
}

double ComplexPoly::coeff_scale() const {
  double s = 0.0;
  for (const Cx& v : c_) s = std::max(s, std::abs(v));
  return s;
}

Cx ComplexPoly::eval(Cx z) const {
  Cx acc(0.0);
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
    acc = acc * z + c_[k];
  return acc;
}

double ComplexPoly::eval_scale(Cx z) const {
  double az = std::abs(z);
  double acc = 0.0;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
    acc = acc * az + std::abs(c_[k]);
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  if (c_.size() == 1) return ComplexPoly();
  std::vector<Cx> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::deflate(Cx root) const {
  if (c_.size() == 1) return ComplexPoly();
  std::vector<Cx> q(c_.size() - 1);
  Cx carry = c_.back();
  for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) {
    q[k] = carry;
    carry = c_[k] + root * carry;
  }
  return ComplexPoly(std::move(q));
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& o) const {
  std::vector<Cx> c(std::max(c_.size(), o.c_.size()), Cx(0.0));
  for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator-(const ComplexPoly& o) const {
  std::vector<Cx> c(std::max(c_.size(), o.c_.size()), Cx(0.0));
  for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) c[k] -= o.c_[k];
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& o) const {
  if (is_zero() || o.is_zero()) return ComplexPoly();
  std::vector<Cx> c(c_.size() + o.c_.size() - 1, Cx(0.0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator*(Cx s) const {
  std::vector<Cx> c(c_);
  for (Cx& v : c) v *= s;
  return ComplexPoly(std::move(c));
}

namespace {

void quadratic_roots(Cx a, Cx b, Cx c, std::vector<Cx>& out) {
  Cx disc = std::sqrt(b * b - 4.0 * a * c);
  // pick the sign that avoids cancellation in b + disc
  if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
  Cx q = -0.5 * (b + disc);
  if (std::abs(q) > 0.0) {
    out.push_back(q / a);
    out.push_back(c / q);
  } else {
    out.push_back(Cx(0.0));
    out.push_back(Cx(0.0));
  }
}

}  // namespace

std::vector<Cx> poly_roots(const ComplexPoly& p, double tol,
                           std::uint64_t seed) {
  if (p.degree() < 1) fail(Errc::DegreeZero, "root finding on a constant");

  // peel off exact roots at the origin
  std::vector<Cx> coeffs = p.coeffs();
  std::vector<Cx> roots;
  while (coeffs.size() > 1 && coeffs.front() == Cx(0.0)) {
    roots.push_back(Cx(0.0));
    coeffs.erase(coeffs.begin());
  }
  int m = static_cast<int>(coeffs.size()) - 1;
  if (m == 0) {
    std::sort(roots.begin(), roots.end(), [](Cx a, Cx b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
  }

  ComplexPoly q{std::vector<Cx>(coeffs)};
  if (m == 1) {
    roots.push_back(-q.coeff(0) / q.coeff(1));
  } else if (m == 2) {
    quadratic_roots(q.coeff(2), q.coeff(1), q.coeff(0), roots);
  } else {
    ComplexPoly dq = q.derivative();
    double cauchy = 0.0;
    for (int k = 0; k < m; ++k)
      cauchy = std::max(cauchy, std::abs(q.coeff(k) / q.coeff(m)));
    double radius = 1.0 + cauchy;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    bool done = false;
    std::vector<Cx> z(m);
    for (int attempt = 0; attempt < 4 && !done; ++attempt) {
      double phase0 = jitter(rng);
      for (int k = 0; k < m; ++k) {
        double th =
            2.0 * std::numbers::pi * (k + 0.5 + phase0 + jitter(rng)) / m;
        z[k] = radius * Cx(std::cos(th), std::sin(th));
      }
      std::vector<bool> settled(m, false);
      for (int iter = 0; iter < 200 && !done; ++iter) {
        int settled_count = 0;
        for (int k = 0; k < m; ++k) {
          Cx pv = q.eval(z[k]);
          if (std::abs(pv) <= tol * q.eval_scale(z[k])) {
            settled[k] = true;
            ++settled_count;
            continue;
          }
          settled[k] = false;
          Cx dv = dq.eval(z[k]);
          if (dv == Cx(0.0)) {
            z[k] += 1e-6 * radius * Cx(jitter(rng), jitter(rng));
            continue;
          }
          Cx newton = pv / dv;
          Cx s(0.0);
          bool collision = false;
          for (int j = 0; j < m; ++j) {
            if (j == k) continue;
            Cx d = z[k] - z[j];
            if (std::abs(d) < 1e-14 * radius) {
              collision = true;
              break;
            }
            s += 1.0 / d;
          }
          if (collision) {
            z[k] += 1e-6 * radius * Cx(jitter(rng), jitter(rng));
            continue;
          }
          Cx denom = 1.0 - newton * s;
          if (std::abs(denom) < 1e-300) denom = Cx(1e-300);
          z[k] -= newton / denom;
        }
        done = settled_count == m;
      }
    }
    if (!done) fail(Errc::NonConvergence, "root iteration hit its cap");
    roots.insert(roots.end(), z.begin(), z.end());
  }

  std::sort(roots.begin(), roots.end(), [](Cx a, Cx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

Cx resultant(const ComplexPoly& p, const ComplexPoly& q) {
  int m = p.degree();
  int n = q.degree();
  if (m == 0 && n == 0)
    fail(Errc::BothConstant, "resultant of two constants");
  if (m == 0) return std::pow(p.coeff(0), n);
  if (n == 0) return std::pow(q.coeff(0), m);

  int size = m + n;
  std::vector<Cx> s(size * size, Cx(0.0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r * size + r + k] = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[(n + r) * size + r + k] = q.coeff(n - k);
  return dense_det(std::move(s), size);
}

std::vector<Cx> matched_common_roots(const ComplexPoly& p,
                                     const ComplexPoly& q, double tol) {
  if (p.is_zero() || q.is_zero())
    fail(Errc::BothZero, "common roots need two nonzero polynomials");
  if (p.degree() < 1 || q.degree() < 1) return {};
  ComplexPoly ps = p * Cx(1.0 / p.coeff_scale());
  ComplexPoly qs = q * Cx(1.0 / q.coeff_scale());
  std::vector<Cx> rp = poly_roots(ps);
  std::vector<Cx> rq = poly_roots(qs);

  std::vector<Cx> matched;
  std::vector<bool> used(rq.size(), false);
  while (true) {
    double best = tol;
    int bi = -1, bj = -1;
    for (size_t i = 0; i < rp.size(); ++i)
      for (size_t j = 0; j < rq.size(); ++j) {
        if (used[j]) continue;
        double d = std::abs(rp[i] - rq[j]);
        if (d <= best) {
          best = d;
          bi = static_cast<int>(i);
          bj = static_cast<int>(j);
        }
      }
    if (bi < 0) break;
    matched.push_back(0.5 * (rp[bi] + rq[bj]));
    used[bj] = true;
    rp.erase(rp.begin() + bi);
  }
  return matched;
}

Cx elem_symmetric(const std::vector<Cx>& values, int j) {
  int n = static_cast<int>(values.size());
  if (j < 0 || j > n)
    fail(Errc::IndexOutOfRange, "elementary symmetric index out of range");
  std::vector<Cx> e(j + 1, Cx(0.0));
  e[0] = Cx(1.0);
  for (const Cx& v : values)
    for (int k = j; k >= 1; --k) e[k] += v * e[k - 1];
  return e[j];
}

DiscCount roots_in_closed_disc(const ComplexPoly& p, double r,
                               double boundary_tol) {
  DiscCount out;
  out.roots = poly_roots(p);
  for (const Cx& z : out.roots) {
    double a = std::abs(z);
    if (std::abs(a - r) <= boundary_tol)
      ++out.boundary;
    else if (a < r)
      ++out.inside;
  }
  return out;
}

CircleMax circle_max(const std::function<double(Cx)>& f, double r,
                     int coarse_samples, int refine_top) {
  const double two_pi = 2.0 * std::numbers::pi;
  auto at = [&](double th) { return f(r * Cx(std::cos(th), std::sin(th))); };

  int n = std::max(coarse_samples, 8);
  std::vector<double> val(n);
  for (int i = 0; i < n; ++i) val[i] = at(two_pi * i / n);

  // local maxima of the coarse sweep, best ones first
  std::vector<int> peaks;
  for (int i = 0; i < n; ++i) {
    double prev = val[(i + n - 1) % n];
    double next = val[(i + 1) % n];
    if (val[i] >= prev && val[i] >= next) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](int a, int b) { return val[a] > val[b]; });
  if (static_cast<int>(peaks.size()) > refine_top) peaks.resize(refine_top);

  CircleMax best;
  best.value = -1.0;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int idx : peaks) {
    double lo = two_pi * (idx - 1) / n;
    double hi = two_pi * (idx + 1) / n;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = at(x1);
    double f2 = at(x2);
    for (int it = 0; it < 48 && hi - lo > 1e-13; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = at(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = at(x1);
      }
    }
    double th = 0.5 * (lo + hi);
    double v = at(th);
    if (v > best.value) {
      best.value = v;
      best.arg = r * Cx(std::cos(th), std::sin(th));
    }
  }
  if (best.value < 0.0) {  // constant sweep, no strict peak
    best.value = val[0];
    best.arg = Cx(r, 0.0);
  }
  return best;
}

}  // namespace muquot
