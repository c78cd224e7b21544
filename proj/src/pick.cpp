#include "muquot/pick.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace muquot {

void PickDataset::validate() const {
  if (n < 2) fail(Errc::SizeTooSmall, "datasets need target size >= 2");
  if (data.empty()) fail(Errc::BadInput, "empty dataset");
  for (size_t j = 0; j < data.size(); ++j) {
    if (!data[j].target.square() || data[j].target.rows() != n)
      fail(Errc::SizeMismatch, "dataset target size mismatch");
    if (std::abs(data[j].node) >= 1.0 - 1e-12)
      fail(Errc::BadInput, "interpolation node not in the open disc");
    for (size_t k = j + 1; k < data.size(); ++k)
      if (std::abs(data[j].node - data[k].node) <= 1e-10)
        fail(Errc::BadInput, "interpolation nodes must be distinct");
  }
}

std::vector<ProjectedDatum> project_dataset(const PickDataset& ds) {
  ds.validate();
  std::vector<ProjectedDatum> out;
  out.reserve(ds.data.size());
  for (const PickDatum& d : ds.data)
    out.push_back({pi_n(d.target), genericity(d.target)});
  return out;
}

namespace {

Cx eval_reduced(const ReducedRational& rr, Cx z) {
  Cx dv = rr.den.eval(z);
  if (std::abs(dv) <= 1e-12 * rr.den.eval_scale(z) + 1e-300)
    fail(Errc::PoleAtZ, "reduced rational has a pole at z");
  return rr.num.eval(z) / dv;
}

CMatrix pick_from_psis(const std::vector<Cx>& psis,
                       const std::vector<Cx>& nodes, Cx) {
  int m = static_cast<int>(psis.size());
  CMatrix h(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = j; k < m; ++k) {
      Cx num = Cx(1.0) - std::conj(psis[j]) * psis[k];
      Cx den = Cx(1.0) - std::conj(nodes[j]) * nodes[k];
      h(j, k) = num / den;
      if (k != j) h(k, j) = std::conj(h(j, k));
    }
  return h;
}

}  // namespace

Cx psi_at(const QuotientPoint& q, Cx z) {
  return eval_reduced(psi_reduced(q), z);
}

CMatrix pick_matrix(const std::vector<QuotientPoint>& qs,
                    const std::vector<Cx>& nodes, Cx z) {
  if (qs.size() != nodes.size() || qs.empty())
    fail(Errc::SizeMismatch, "points and nodes must pair up");
  std::vector<Cx> psis(qs.size());
  for (size_t j = 0; j < qs.size(); ++j) psis[j] = psi_at(qs[j], z);
  return pick_from_psis(psis, nodes, z);
}

PsdReport psd_check(const CMatrix& h, double tol) {
  if (!h.square()) fail(Errc::NotSquare, "PSD test of non-square matrix");
  CMatrix adj = h.adjoint();
  if (max_abs_diff(h, adj) > 1e-10 * std::max(1.0, h.max_abs()))
    fail(Errc::NotHermitian, "matrix is not Hermitian");
  CMatrix sym = (h + adj) * Cx(0.5);
  std::vector<double> ev = hermitian_eigenvalues(sym);
  PsdReport rep;
  rep.min_eig = ev.empty() ? 0.0 : ev.front();
  rep.is_psd = rep.min_eig >= -tol;
  return rep;
}

NecessaryReport necessary_report(const PickDataset& ds, int z_samples,
                                 double tol) {
  ds.validate();
  if (z_samples < 1) fail(Errc::BadInput, "need at least one boundary sample");

  std::vector<Cx> nodes;
  std::vector<ReducedRational> rrs;
  for (size_t j = 0; j < ds.data.size(); ++j) {
    QuotientPoint q = pi_n(ds.data[j].target);
    MembershipVerdict v = membership_char1(q);
    if (v.region != Region::Inside)
      fail(Errc::MembershipFailure,
           "projected datum " + std::to_string(j) + " is " +
               region_name(v.region));
    nodes.push_back(ds.data[j].node);
    rrs.push_back(psi_reduced(q));
  }

  std::vector<Cx> zs;
  for (int k = 0; k < z_samples; ++k) {
    double th = 2.0 * std::numbers::pi * k / z_samples;
    zs.push_back(Cx(std::cos(th), std::sin(th)));
  }
  for (int i = 1; i <= 5; ++i)
    for (int k = 0; k < 5; ++k) {
      double th = 2.0 * std::numbers::pi * (k + 0.5) / 5.0;
      zs.push_back(i / 6.0 * Cx(std::cos(th), std::sin(th)));
    }

  NecessaryReport rep;
  rep.min_eig = std::numeric_limits<double>::infinity();
  for (const Cx& z : zs) {
    std::vector<Cx> psis(rrs.size());
    for (size_t j = 0; j < rrs.size(); ++j) psis[j] = eval_reduced(rrs[j], z);
    PsdReport p = psd_check(pick_from_psis(psis, nodes, z), tol);
    rep.samples.push_back({z, p.min_eig});
    if (p.min_eig < rep.min_eig) {
      rep.min_eig = p.min_eig;
      rep.worst_z = z;
    }
  }
  rep.verdict = rep.min_eig < -tol ? PickVerdict::Violated
                                   : PickVerdict::ConsistentAtSamples;
  return rep;
}

void QuotientMap::validate() const {
  if (n < 2) fail(Errc::SizeTooSmall, "maps need n >= 2");
  if (static_cast<int>(comps.size()) != 2 * n - 1)
    fail(Errc::SizeMismatch, "map component count mismatch");
}

QuotientPoint QuotientMap::eval(Cx zeta) const {
  validate();
  QuotientPoint q;
  q.n = n;
  q.x.resize(n);
  q.y.resize(n - 1);
  for (int i = 0; i < n; ++i) q.x[i] = comps[i].eval(zeta);
  for (int i = 0; i < n - 1; ++i) q.y[i] = comps[n + i].eval(zeta);
  return q;
}

CMatrix MatrixPolynomial::eval(Cx zeta) const {
  if (coeffs.empty()) fail(Errc::BadInput, "empty matrix polynomial");
  CMatrix acc = coeffs.back();
  for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k)
    acc = acc * zeta + coeffs[k];
  return acc;
}

CMatrix LiftArtifacts::phi(Cx zeta) const { return realize(f.eval(zeta)); }

CMatrix LiftArtifacts::F(Cx zeta) const {
  CMatrix p = psi.eval(zeta);
  CMatrix e = matrix_exp(p);
  CMatrix einv = matrix_exp(p * Cx(-1.0));
  return block_diag1(Cx(1.0), e) * phi(zeta) * block_diag1(Cx(1.0), einv);
}

bool LiftArtifacts::mu_ok_on_grid(int radii, int angles,
                                  double margin) const {
  for (int i = 0; i <= radii; ++i) {
    double rad = static_cast<double>(i) / radii;
    int spokes = i == 0 ? 1 : angles;
    for (int k = 0; k < spokes; ++k) {
      double th = 2.0 * std::numbers::pi * k / spokes;
      CMatrix a = F(rad * Cx(std::cos(th), std::sin(th)));
      FeasibilityResult fr = mu_feasible(witness_pair(a), 1.0, margin);
      if (fr.status != Feasibility::Feasible) return false;
    }
  }
  return true;
}

LiftArtifacts lift(const PickDataset& ds, const QuotientMap& f,
                   int grid_radii, int grid_angles, double range_margin) {
  ds.validate();
  f.validate();
  if (f.n != ds.n) fail(Errc::SizeMismatch, "map and dataset sizes differ");
  int n = ds.n;
  int m = static_cast<int>(ds.data.size());

  for (int j = 0; j < m; ++j) {
    GenericityReport rep = genericity(ds.data[j].target);
    if (!rep.generic)
      fail(Errc::NotGeneric, "target " + std::to_string(j) +
                                 " is not generic; cannot lift");
  }
  for (int j = 0; j < m; ++j) {
    QuotientPoint want = pi_n(ds.data[j].target);
    QuotientPoint got = f.eval(ds.data[j].node);
    if (max_abs_diff(want, got) > 1e-8)
      fail(Errc::InterpolationMismatch,
           "map misses projected datum " + std::to_string(j));
  }

  // range validation on a polar grid, boundary radius included
  for (int i = 0; i <= grid_radii; ++i) {
    double rad = static_cast<double>(i) / grid_radii;
    int spokes = i == 0 ? 1 : grid_angles;
    for (int k = 0; k < spokes; ++k) {
      double th = 2.0 * std::numbers::pi * k / spokes;
      Cx zeta = rad * Cx(std::cos(th), std::sin(th));
      MembershipVerdict v = membership_char1(f.eval(zeta), range_margin);
      if (v.region != Region::Inside)
        fail(Errc::QuotientRangeFailure,
             std::string("map leaves the quotient domain (") +
                 region_name(v.region) + " at grid sample)");
    }
  }

  LiftArtifacts art;
  art.n = n;
  art.f = f;
  for (int j = 0; j < m; ++j) {
    art.nodes.push_back(ds.data[j].node);
    const CMatrix& w = ds.data[j].target;
    CMatrix gamma;
    try {
      gamma = krylov_gamma(w.deleted(), w.first_subcolumn());
    } catch (const Error& e) {
      if (e.code() == Errc::NotCyclic)
        fail(Errc::NotGeneric, "target " + std::to_string(j) +
                                   " lost genericity in the Krylov step");
      throw;
    }
    art.gammas.push_back(gamma);
    art.logs.push_back(matrix_log(gamma));
  }

  // Lagrange interpolation of the logarithms, expanded to monomials
  art.psi.coeffs.assign(m, CMatrix::zero(n - 1, n - 1));
  for (int j = 0; j < m; ++j) {
    ComplexPoly basis{std::vector<Cx>{Cx(1.0)}};
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      Cx scale = Cx(1.0) / (art.nodes[j] - art.nodes[k]);
      basis = basis * ComplexPoly{std::vector<Cx>{-art.nodes[k] * scale,
                                                  scale}};
    }
    for (int d = 0; d < m; ++d)
      art.psi.coeffs[d] = art.psi.coeffs[d] + art.logs[j] * basis.coeff(d);
  }

  for (int j = 0; j < m; ++j) {
    double scale = std::max(1.0, ds.data[j].target.frobenius());
    double res = max_abs_diff(art.F(ds.data[j].node), ds.data[j].target);
    art.node_residuals.push_back(res);
    if (res > 1e-7 * scale)
      fail(Errc::NonConvergence,
           "lift residual exceeded tolerance at node " + std::to_string(j));
  }
  return art;
}

SynthInstance synthesize_instance(int n, int m, std::uint64_t seed) {
  if (n < 2 || n > kMaxEnumSize) fail(Errc::BadInput, "size out of range");
  if (m < 1 || m > 20) fail(Errc::BadInput, "node count out of range");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto draw_matrix = [&]() {
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = Cx(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    return a;
  };

  for (int attempt = 0; attempt < 50; ++attempt) {
    CMatrix a0 = draw_matrix();
    CMatrix a1 = draw_matrix();

    CircleMax cm = circle_max(
        [&](Cx zeta) { return mu_eval(a0 + a1 * zeta, 1e-4).value; }, 1.0,
        48, 3);
    double mhat = cm.value;
    if (mhat < 1e-9) continue;

    // scale by bisection against the sampled boundary maximum
    double lo = 0.0, hi = 1.8 / mhat;
    while ((hi - lo) * mhat > 1e-4) {
      double mid = 0.5 * (lo + hi);
      if (mid * mhat > 0.9)
        hi = mid;
      else
        lo = mid;
    }
    double c = 0.5 * (lo + hi);

    std::vector<Cx> nodes;
    bool nodes_ok = true;
    for (int j = 0; j < m && nodes_ok; ++j) {
      bool placed = false;
      for (int tries = 0; tries < 200 && !placed; ++tries) {
        double rad = 0.85 * std::sqrt(unif(rng));
        double th = 2.0 * std::numbers::pi * unif(rng);
        Cx zeta = rad * Cx(std::cos(th), std::sin(th));
        placed = true;
        for (const Cx& prev : nodes)
          if (std::abs(zeta - prev) <= 0.05) placed = false;
        if (placed) nodes.push_back(zeta);
      }
      nodes_ok = placed;
    }
    if (!nodes_ok) continue;

    SynthInstance inst;
    inst.ds.n = n;
    bool targets_ok = true;
    for (int j = 0; j < m && targets_ok; ++j) {
      CMatrix w = (a0 + a1 * nodes[j]) * Cx(c);
      if (!genericity(w).generic) targets_ok = false;
      if (targets_ok &&
          mu_feasible(witness_pair(w), 1.0, 1e-6).status !=
              Feasibility::Feasible)
        targets_ok = false;
      inst.ds.data.push_back({nodes[j], w});
    }
    if (!targets_ok) continue;

    // exact polynomial projection, recovered by interpolation at n+1
    // circle points (each component has degree at most n)
    int pts = n + 1;
    CMatrix vand(pts, pts);
    std::vector<QuotientPoint> vals;
    for (int s = 0; s < pts; ++s) {
      double th = 2.0 * std::numbers::pi * s / pts;
      Cx zeta = 0.9 * Cx(std::cos(th), std::sin(th));
      Cx pw(1.0);
      for (int k = 0; k < pts; ++k) {
        vand(s, k) = pw;
        pw *= zeta;
      }
      vals.push_back(pi_n((a0 + a1 * zeta) * Cx(c)));
    }
    inst.f.n = n;
    inst.f.comps.resize(2 * n - 1);
    for (int comp = 0; comp < 2 * n - 1; ++comp) {
      std::vector<Cx> rhs(pts);
      for (int s = 0; s < pts; ++s)
        rhs[s] = comp < n ? vals[s].x[comp] : vals[s].y[comp - n];
      inst.f.comps[comp] = ComplexPoly(solve(vand, rhs));
    }

    bool match_ok = true;
    for (int j = 0; j < m; ++j) {
      QuotientPoint want = pi_n(inst.ds.data[j].target);
      if (max_abs_diff(want, inst.f.eval(nodes[j])) > 1e-9) match_ok = false;
    }
    if (!match_ok) continue;
    return inst;
  }
  fail(Errc::RetryExhausted, "could not synthesize a valid instance");
}

}  // namespace muquot
