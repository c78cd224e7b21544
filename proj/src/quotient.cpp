#include "muquot/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace muquot {

QuotientPoint pi_n(const CMatrix& a) {
  if (!a.square()) fail(Errc::NotSquare, "projection of non-square matrix");
  if (a.rows() < 2) fail(Errc::SizeTooSmall, "projection needs size >= 2");
  int n = a.rows();
  QuotientPoint q;
  q.n = n;
  q.x.resize(n);
  q.y.resize(n - 1);
  for (int j = 1; j <= n; ++j)
    q.x[j - 1] = minor_sum(a, j, MinorMode::FirstRowIncluded);
  for (int j = 1; j <= n - 1; ++j)
    q.y[j - 1] = minor_sum(a, j, MinorMode::FirstRowExcluded);
  return q;
}

CMatrix realize(const QuotientPoint& q) {
  q.validate();
  int n = q.n;
  CMatrix b(n, n);
  b(0, 0) = q.x[0];
  b(1, 0) = Cx(1.0);
  // deleted block: companion form with y running up the last column
  for (int c = 0; c + 2 < n; ++c) b(c + 2, c + 1) = Cx(1.0);
  for (int r = 0; r + 1 < n; ++r) {
    double sign = ((n - r) % 2 == 0) ? 1.0 : -1.0;
    b(r + 1, n - 1) = sign * q.y[n - 2 - r];
  }
  // the first-row unknowns enter each equation affinely with a unit-modulus
  // coefficient, so they peel off one at a time
  for (int j = 2; j <= n; ++j) {
    b(0, j - 1) = Cx(0.0);
    Cx base = minor_sum(b, j, MinorMode::FirstRowIncluded);
    b(0, j - 1) = Cx(1.0);
    Cx coef = minor_sum(b, j, MinorMode::FirstRowIncluded) - base;
    b(0, j - 1) = (q.x[j - 1] - base) / coef;
  }
  return b;
}

WitnessPair p_polys(const QuotientPoint& q) { return witness_pair(q); }

ReducedRational psi_reduced(const QuotientPoint& q) {
  WitnessPair pair = witness_pair(q);
  ReducedRational rr;
  rr.num = pair.P;
  rr.den = pair.Q;
  if (!pair.P.is_zero() && pair.P.degree() >= 1 && pair.Q.degree() >= 1) {
    rr.cancelled = matched_common_roots(pair.P, pair.Q);
    for (const Cx& m : rr.cancelled) {
      rr.num = rr.num.deflate(m);
      rr.den = rr.den.deflate(m);
    }
  }
  return rr;
}

namespace {

double min_root_modulus(const ComplexPoly& p, Cx* argmin) {
  if (p.degree() < 1) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (const Cx& z : poly_roots(p)) {
    double a = std::abs(z);
    if (a < best) {
      best = a;
      if (argmin) *argmin = z;
    }
  }
  return best;
}

}  // namespace

MembershipVerdict membership_char1(const QuotientPoint& q, double margin) {
  q.validate();
  ReducedRational rr = psi_reduced(q);
  MembershipVerdict out;

  Cx worst_cancelled;
  double cancelled_min = std::numeric_limits<double>::infinity();
  for (const Cx& m : rr.cancelled) {
    double a = std::abs(m);
    if (a < cancelled_min) {
      cancelled_min = a;
      worst_cancelled = m;
    }
  }

  Cx worst_pole;
  double den_min = min_root_modulus(rr.den, &worst_pole);

  double sup = 0.0;
  Cx sup_arg(1.0, 0.0);
  if (!rr.num.is_zero()) {
    CircleMax cm = circle_max(
        [&](Cx z) {
          double dv = std::abs(rr.den.eval(z));
          if (dv < 1e-300) return 1e300;
          return std::abs(rr.num.eval(z)) / dv;
        },
        1.0);
    sup = cm.value;
    sup_arg = cm.arg;
  }

  if (cancelled_min <= 1.0 - margin) {
    out.region = Region::Outside;
    out.margin = 1.0 - cancelled_min;
    out.certificate = {"common-root-in-disc", worst_cancelled, Cx(0.0),
                       cancelled_min, {}};
    return out;
  }
  if (den_min <= 1.0 - margin) {
    out.region = Region::Outside;
    out.margin = 1.0 - den_min;
    out.certificate = {"pole-in-disc", worst_pole, Cx(0.0), den_min, {}};
    return out;
  }
  if (sup >= 1.0 + margin) {
    // the boundary point itself witnesses a zero-set point in the bidisc
    Cx w = rr.den.eval(sup_arg) / rr.num.eval(sup_arg);
    out.region = Region::Outside;
    out.margin = sup - 1.0;
    out.certificate = {"boundary-sup", sup_arg, w, sup, {}};
    return out;
  }
  if (cancelled_min > 1.0 + margin && den_min > 1.0 + margin &&
      sup <= 1.0 - margin) {
    out.region = Region::Inside;
    out.margin = std::min({cancelled_min - 1.0, den_min - 1.0, 1.0 - sup});
    out.certificate = {"clear", sup_arg, Cx(0.0), sup, {}};
    return out;
  }
  out.region = Region::Boundary;
  out.margin = std::min({std::abs(cancelled_min - 1.0),
                         std::abs(den_min - 1.0), std::abs(1.0 - sup)});
  out.certificate = {"margin-band", sup_arg, Cx(0.0), sup, {}};
  return out;
}

MembershipVerdict membership_sympd_point(const std::vector<Cx>& s,
                                         double margin) {
  int n = static_cast<int>(s.size());
  if (n < 1) fail(Errc::SizeTooSmall, "empty symmetrized-polydisc data");
  std::vector<Cx> c(n + 1, Cx(0.0));
  c[n] = Cx(1.0);
  double sign = -1.0;
  for (int j = 1; j <= n; ++j) {
    c[n - j] = sign * s[j - 1];
    sign = -sign;
  }
  ComplexPoly p{std::move(c)};

  double rmax = 0.0;
  Cx worst;
  for (const Cx& z : poly_roots(p)) {
    double a = std::abs(z);
    if (a >= rmax) {
      rmax = a;
      worst = z;
    }
  }
  MembershipVerdict out;
  out.certificate = {"spectral-radius", worst, Cx(0.0), rmax, {}};
  out.margin = std::abs(1.0 - rmax);
  if (rmax < 1.0 - margin)
    out.region = Region::Inside;
  else if (rmax > 1.0 + margin)
    out.region = Region::Outside;
  else
    out.region = Region::Boundary;
  return out;
}

std::vector<Cx> costara_reduce(const std::vector<Cx>& s, Cx z) {
  int n = static_cast<int>(s.size());
  if (n < 2) fail(Errc::SizeTooSmall, "reduction needs at least two entries");
  Cx den = Cx(n) - z * s[0];
  if (std::abs(den) <= 1e-12 * n * (1.0 + std::abs(z * s[0])))
    fail(Errc::PoleAtZ, "reduction pole; certifies non-membership for |z|<=1");
  std::vector<Cx> out(n - 1);
  for (int j = 1; j <= n - 1; ++j)
    out[j - 1] = (Cx(n - j) * s[j - 1] - Cx(j + 1) * z * s[j]) / den;
  return out;
}

std::vector<Cx> sympd_slice(const QuotientPoint& q, Cx w) {
  q.validate();
  Cx den = Cx(1.0) - w * q.x[0];
  if (std::abs(den) <= 1e-12 * (1.0 + std::abs(w * q.x[0])))
    fail(Errc::PoleAtW, "slice pole; certifies non-membership for |w|<=1");
  std::vector<Cx> s(q.n - 1);
  for (int j = 1; j <= q.n - 1; ++j)
    s[j - 1] = (q.y[j - 1] - w * q.x[j]) / den;
  return s;
}

QuotientPoint char2_reduce(const QuotientPoint& q, Cx xi) {
  q.validate();
  int n = q.n;
  if (n < 3) fail(Errc::SizeTooSmall, "reduction needs n >= 3");
  Cx den = Cx(n - 1) - xi * q.y[0];
  if (std::abs(den) <= 1e-12 * (n - 1) * (1.0 + std::abs(xi * q.y[0])))
    fail(Errc::PoleAtXi, "reduction pole; cannot occur for members");
  QuotientPoint out;
  out.n = n - 1;
  out.x.resize(n - 1);
  out.y.resize(n - 2);
  for (int j = 1; j <= n - 1; ++j)
    out.x[j - 1] = (Cx(n - j) * q.x[j - 1] - Cx(j) * xi * q.x[j]) / den;
  for (int j = 1; j <= n - 2; ++j)
    out.y[j - 1] = (Cx(n - 1 - j) * q.y[j - 1] - Cx(j + 1) * xi * q.y[j]) / den;
  return out;
}

namespace {

MembershipVerdict char2_recurse(const QuotientPoint& q, int xi_samples,
                                double margin, std::vector<Cx>& path) {
  if (q.n == 2) {
    MembershipVerdict leaf = membership_char1(q, margin);
    leaf.certificate.xi_path = path;
    return leaf;
  }

  // necessary condition at this level: the w = 0 slice must be a
  // symmetrized-polydisc point
  MembershipVerdict slice = membership_sympd_point(q.y, margin);
  if (slice.region != Region::Inside) {
    slice.certificate.kind = "slice-at-zero";
    slice.certificate.xi_path = path;
    return slice;
  }

  MembershipVerdict agg;
  agg.region = Region::Inside;
  agg.margin = slice.margin;
  agg.certificate = {"sampled-xi-sweep", Cx(0.0), Cx(0.0), 0.0, path};
  bool saw_boundary = false;
  MembershipVerdict boundary_seen;

  for (int k = -1; k < xi_samples; ++k) {
    Cx xi(0.0);
    if (k >= 0) {
      double th = 2.0 * std::numbers::pi * k / xi_samples;
      xi = Cx(std::cos(th), std::sin(th));
    }
    QuotientPoint sub;
    try {
      sub = char2_reduce(q, xi);
    } catch (const Error& e) {
      if (e.code() != Errc::PoleAtXi) throw;
      // a pole at |xi| <= 1 forces |y_1| >= n-1, impossible for members
      MembershipVerdict out;
      out.region = Region::Outside;
      out.margin = std::abs(q.y[0]) - (q.n - 1);
      out.certificate = {"reduction-pole", xi, Cx(0.0), std::abs(q.y[0]),
                         path};
      return out;
    }
    path.push_back(xi);
    MembershipVerdict sv = char2_recurse(sub, xi_samples, margin, path);
    path.pop_back();
    if (sv.region == Region::Outside) return sv;
    if (sv.region == Region::Boundary && !saw_boundary) {
      saw_boundary = true;
      boundary_seen = sv;
    }
    agg.margin = std::min(agg.margin, sv.margin);
  }
  if (saw_boundary) return boundary_seen;
  return agg;
}

}  // namespace

MembershipVerdict membership_char2(const QuotientPoint& q, int xi_samples,
                                   double margin) {
  q.validate();
  if (q.n < 3) fail(Errc::SizeTooSmall, "recursive test needs n >= 3");
  if (xi_samples < 1) fail(Errc::BadInput, "need at least one xi sample");
  std::vector<Cx> path;
  return char2_recurse(q, xi_samples, margin, path);
}

MembershipVerdict membership_reference(const QuotientPoint& q,
                                       double margin) {
  CMatrix b = realize(q);
  OmegaVerdict ov = in_omega(b, margin);
  MembershipVerdict out;
  out.region = ov.region;
  out.margin = std::abs(ov.mu.value - 1.0);
  out.certificate.kind = "mu-of-realization";
  out.certificate.value = ov.mu.value;
  if (ov.mu.witness) {
    out.certificate.z = ov.mu.witness->z;
    out.certificate.w = ov.mu.witness->w;
  }
  return out;
}

GenericityReport genericity(const CMatrix& a, std::uint64_t seed) {
  if (!a.square()) fail(Errc::NotSquare, "genericity of non-square matrix");
  if (a.rows() < 2) fail(Errc::SizeTooSmall, "genericity needs size >= 2");
  CMatrix atil = a.deleted();
  std::vector<Cx> sub = a.first_subcolumn();

  GenericityReport rep;
  rep.theta_value = theta(atil, sub);
  rep.tolerance = theta_tolerance(atil, sub);
  rep.generic = std::abs(rep.theta_value) > rep.tolerance;
  rep.cyclic_first_column = rep.generic;

  rep.nonderogatory = rep.generic;  // a cyclic vector settles it
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int m = atil.rows();
  for (int probe = 0; probe < 4 && !rep.nonderogatory; ++probe) {
    std::vector<Cx> v(m);
    for (Cx& x : v) x = Cx(gauss(rng), gauss(rng));
    if (std::abs(theta(atil, v)) > theta_tolerance(atil, v))
      rep.nonderogatory = true;
  }
  return rep;
}

}  // namespace muquot
