#include "muquot/mu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace muquot {

WitnessPair witness_pair(const CMatrix& a) {
  if (!a.square()) fail(Errc::NotSquare, "witness pair of non-square matrix");
  if (a.rows() < 2) fail(Errc::SizeTooSmall, "witness pair needs size >= 2");
  int n = a.rows();
  QuotientPoint q;
  q.n = n;
  q.x.resize(n);
  q.y.resize(n - 1);
  for (int j = 1; j <= n; ++j)
    q.x[j - 1] = minor_sum(a, j, MinorMode::FirstRowIncluded);
  for (int j = 1; j <= n - 1; ++j)
    q.y[j - 1] = minor_sum(a, j, MinorMode::FirstRowExcluded);
  return witness_pair(q);
}

WitnessPair witness_pair(const QuotientPoint& q) {
  q.validate();
  WitnessPair pair;
  pair.n = q.n;
  std::vector<Cx> pc(q.n);
  double sign = 1.0;
  for (int k = 0; k < q.n; ++k) {
    pc[k] = sign * q.x[k];
    sign = -sign;
  }
  std::vector<Cx> qc(q.n, Cx(0.0));
  qc[0] = Cx(1.0);
  sign = -1.0;
  for (int k = 1; k <= q.n - 1; ++k) {
    qc[k] = sign * q.y[k - 1];
    sign = -sign;
  }
  pair.P = ComplexPoly(std::move(pc));
  pair.Q = ComplexPoly(std::move(qc));
  return pair;
}

namespace {

struct ZeroSetPoint {
  double val = std::numeric_limits<double>::infinity();
  Cx z;
  Cx w;
};

// A handful of exact zero-set points; each yields an upper bound on the
// distance of the zero set from the origin in the max-norm.
std::vector<ZeroSetPoint> zero_set_candidates(const WitnessPair& pair) {
  std::vector<ZeroSetPoint> out;
  const ComplexPoly& P = pair.P;
  const ComplexPoly& Q = pair.Q;
  if (Q.degree() >= 1)
    for (const Cx& z0 : poly_roots(Q))
      out.push_back({std::abs(z0), z0, Cx(0.0)});
  if (!P.is_zero()) {
    auto sample = [&](Cx z) {
      Cx pv = P.eval(z);
      if (std::abs(pv) < 1e-300) return;
      Cx w = Q.eval(z) / pv;
      out.push_back({std::max(std::abs(z), std::abs(w)), z, w});
    };
    sample(Cx(0.0));
    for (double rad : {0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0})
      for (int k = 0; k < 16; ++k) {
        double th = 2.0 * std::numbers::pi * (k + 0.37) / 16.0;
        sample(rad * Cx(std::cos(th), std::sin(th)));
      }
  }
  return out;
}

bool zero_set_empty(const WitnessPair& pair) {
  return pair.P.is_zero() && pair.Q.degree() == 0;
}

}  // namespace

FeasibilityResult mu_feasible(const WitnessPair& pair, double r,
                              double margin) {
  if (r < 0.0) fail(Errc::BadInput, "negative bidisc radius");
  const ComplexPoly& P = pair.P;
  const ComplexPoly& Q = pair.Q;
  FeasibilityResult res;

  if (zero_set_empty(pair)) {
    res.status = Feasibility::Feasible;
    res.reason = "zero set empty";
    return res;
  }

  double band = margin * std::max(1.0, r);
  bool undecided_root = false;

  // matched common roots pin whole fibers {z0} x C to the zero set
  if (!P.is_zero() && P.degree() >= 1 && Q.degree() >= 1) {
    for (const Cx& z0 : matched_common_roots(P, Q)) {
      double a = std::abs(z0);
      if (a <= r - band) {
        res.status = Feasibility::Infeasible;
        res.z = z0;
        res.w = Cx(0.0);
        res.attained = a;
        res.reason = "common root inside";
        return res;
      }
      if (a <= r + band) undecided_root = true;
    }
  }

  // a root of Q puts (z0, 0) on the zero set
  if (Q.degree() >= 1) {
    for (const Cx& z0 : poly_roots(Q)) {
      double a = std::abs(z0);
      if (a <= r - band) {
        res.status = Feasibility::Infeasible;
        res.z = z0;
        res.w = Cx(0.0);
        res.attained = a;
        res.reason = "Q root inside";
        return res;
      }
      if (a <= r + band) undecided_root = true;
    }
  }

  // with Q zero-free on the closed r-disc, the fiber w = Q/P stays out of
  // the bidisc exactly when r |P/Q| < 1 on the circle (maximum modulus)
  double v = 0.0;
  Cx zb(r, 0.0);
  if (!P.is_zero() && r > 0.0) {
    CircleMax cm = circle_max(
        [&](Cx z) {
          double qv = std::abs(Q.eval(z));
          if (qv < 1e-300) return 1e300;
          return std::abs(P.eval(z)) / qv;
        },
        r);
    v = r * cm.value;
    zb = cm.arg;
  }
  res.attained = v;
  if (v >= 1.0 + margin) {
    res.status = Feasibility::Infeasible;
    res.z = zb;
    res.w = Q.eval(zb) / P.eval(zb);
    res.reason = "fiber enters bidisc";
    return res;
  }
  if (undecided_root || v > 1.0 - margin) {
    res.status = Feasibility::Indeterminate;
    res.z = zb;
    res.reason = "margin band";
    return res;
  }
  res.status = Feasibility::Feasible;
  res.z = zb;
  if (!P.is_zero() && std::abs(P.eval(zb)) > 1e-300)
    res.w = Q.eval(zb) / P.eval(zb);
  res.reason = "clear at radius";
  return res;
}

MuResult mu_eval(const WitnessPair& pair, double tol) {
  MuResult out;
  if (zero_set_empty(pair)) return out;  // mu = 0 exactly

  std::vector<ZeroSetPoint> cands = zero_set_candidates(pair);
  ZeroSetPoint best;
  for (const ZeroSetPoint& c : cands)
    if (c.val < best.val) best = c;

  double lo = 0.0;
  double hi = best.val * (1.0 + 1e-12) + 1e-300;
  double margin = 1e-9;
  for (int iter = 0; iter < 60; ++iter) {
    if (lo > 0.0) {
      double width = 1.0 / lo - 1.0 / hi;
      if (width <= tol * std::max(1.0, 1.0 / hi)) break;
    }
    double mid = 0.5 * (lo + hi);
    FeasibilityResult fr = mu_feasible(pair, mid, margin);
    if (fr.status == Feasibility::Indeterminate) {
      margin *= 0.1;
      if (margin < 1e-13) break;  // report the honest wider bracket
      continue;
    }
    if (fr.status == Feasibility::Feasible) {
      lo = mid;
    } else {
      hi = mid;
      double val = std::max(std::abs(fr.z), std::abs(fr.w));
      if (val < best.val) best = {val, fr.z, fr.w};
    }
  }

  out.lower = 1.0 / hi;
  out.upper = lo > 0.0 ? 1.0 / lo : std::numeric_limits<double>::infinity();
  out.value = std::isfinite(out.upper) ? 0.5 * (out.lower + out.upper)
                                       : out.lower;
  MuWitness w;
  w.z = best.z;
  w.w = best.w;
  w.residual = std::abs(pair.Q.eval(best.z) - best.w * pair.P.eval(best.z));
  out.witness = w;
  return out;
}

MuResult mu_eval(const CMatrix& a, double tol) {
  return mu_eval(witness_pair(a), tol);
}

double mu_brute(const WitnessPair& pair, int z_grid) {
  if (z_grid < 8) fail(Errc::BadInput, "grid too coarse");
  if (zero_set_empty(pair)) return 0.0;

  const ComplexPoly& P = pair.P;
  const ComplexPoly& Q = pair.Q;
  double best_root = std::numeric_limits<double>::infinity();
  if (Q.degree() >= 1)
    for (const Cx& z0 : poly_roots(Q))
      best_root = std::min(best_root, std::abs(z0));
  if (!P.is_zero() && P.degree() >= 1 && Q.degree() >= 1)
    for (const Cx& z0 : matched_common_roots(P, Q))
      best_root = std::min(best_root, std::abs(z0));

  double sweep = best_root;
  for (const ZeroSetPoint& c : zero_set_candidates(pair))
    sweep = std::min(sweep, c.val);
  sweep *= 1.0 + 1e-9;

  double best_fiber = std::numeric_limits<double>::infinity();
  double best_rad = 0.0, best_th = 0.0;
  auto fiber = [&](double rad, double th) {
    if (P.is_zero()) return std::numeric_limits<double>::infinity();
    Cx z = rad * Cx(std::cos(th), std::sin(th));
    Cx pv = P.eval(z);
    if (std::abs(pv) < 1e-300)
      return std::numeric_limits<double>::infinity();
    return std::max(rad, std::abs(Q.eval(z) / pv));
  };

  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i <= z_grid; ++i) {
    double rad = sweep * i / z_grid;
    int spokes = i == 0 ? 1 : z_grid;
    for (int j = 0; j < spokes; ++j) {
      double th = two_pi * j / spokes;
      double v = fiber(rad, th);
      if (v < best_fiber) {
        best_fiber = v;
        best_rad = rad;
        best_th = th;
      }
    }
  }

  // nested local refinement around the best grid cell
  double dr = 2.2 * sweep / z_grid;
  double dth = 2.2 * two_pi / z_grid;
  for (int level = 0; level < 3; ++level) {
    double r0 = best_rad, t0 = best_th;
    for (int i = -8; i <= 8; ++i)
      for (int j = -8; j <= 8; ++j) {
        double rad = r0 + dr * i / 8.0;
        if (rad < 0.0) continue;
        double th = t0 + dth * j / 8.0;
        double v = fiber(rad, th);
        if (v < best_fiber) {
          best_fiber = v;
          best_rad = rad;
          best_th = th;
        }
      }
    dr /= 6.0;
    dth /= 6.0;
  }

  double rstar = std::min(best_root, best_fiber);
  if (!std::isfinite(rstar) || rstar <= 0.0) return 0.0;
  return 1.0 / rstar;
}

double mu_brute(const CMatrix& a, int z_grid) {
  return mu_brute(witness_pair(a), z_grid);
}

OmegaVerdict in_omega(const CMatrix& a, double margin) {
  OmegaVerdict v;
  v.mu = mu_eval(a, std::min(1e-8, margin * 1e-2));
  if (v.mu.upper < 1.0 - margin)
    v.region = Region::Inside;
  else if (v.mu.lower > 1.0 + margin)
    v.region = Region::Outside;
  else
    v.region = Region::Boundary;
  return v;
}

}  // namespace muquot
