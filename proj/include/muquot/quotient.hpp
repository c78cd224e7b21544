#pragma once

#include <string>

#include "muquot/mu.hpp"

namespace muquot {

// P/Q with matched common linear factors cancelled.  `cancelled` holds the
// midpoints of the matched root pairs that were divided out.
struct ReducedRational {
  ComplexPoly num;
  ComplexPoly den;
  std::vector<Cx> cancelled;
};

struct MembershipCertificate {
  std::string kind;
  Cx z;
  Cx w;
  double value = 0.0;
  std::vector<Cx> xi_path;  // reduction parameters, outermost first
};

struct MembershipVerdict {
  Region region = Region::Boundary;
  // distance of the binding quantity from its threshold, >= 0
  double margin = 0.0;
  MembershipCertificate certificate;
};

struct GenericityReport {
  Cx theta_value;
  double tolerance = 0.0;
  bool nonderogatory = false;
  bool cyclic_first_column = false;
  bool generic = false;
};

// Projection onto the quotient data: x_1 = a_11, x_j sums the j-by-j
// principal minors meeting the first row, y_j those avoiding it.
QuotientPoint pi_n(const CMatrix& a);

// Canonical matrix with the prescribed projection: first column e_1 below
// the corner, deleted block in companion form carrying y, and a first row
// solved entry-by-entry so that the minor sums reproduce x.
CMatrix realize(const QuotientPoint& q);

// The defining polynomial pair (P, Q) of the point.
WitnessPair p_polys(const QuotientPoint& q);

ReducedRational psi_reduced(const QuotientPoint& q);

// Membership through the rational characterization: the reduced fraction
// must be pole-free on the closed disc with boundary sup below 1, and every
// cancelled common root must sit outside the closed disc.
MembershipVerdict membership_char1(const QuotientPoint& q,
                                   double margin = 1e-7);

// Membership of s in the symmetrized-polydisc data: all roots of
// z^N + sum_j (-1)^j s_j z^{N-j} strictly inside the unit circle.
MembershipVerdict membership_sympd_point(const std::vector<Cx>& s,
                                         double margin = 1e-7);

// One step of the fractional reduction on symmetrized-polydisc data.
std::vector<Cx> costara_reduce(const std::vector<Cx>& s, Cx z);

// The linear-fractional slice ((y_j - w x_{j+1}) / (1 - w x_1))_j; lies in
// the symmetrized-polydisc data for every |w| <= 1 iff q is a member.
std::vector<Cx> sympd_slice(const QuotientPoint& q, Cx w);

// One step of the dimension reduction at parameter |xi| <= 1.
QuotientPoint char2_reduce(const QuotientPoint& q, Cx xi);

// Recursive membership via char2_reduce at xi = 0 plus boundary samples,
// decided at n = 2 by membership_char1.  Outside verdicts are certified by
// the returned xi path; Inside verdicts are sampled, not certified.
MembershipVerdict membership_char2(const QuotientPoint& q,
                                   int xi_samples = 64,
                                   double margin = 1e-7);

// Reference oracle: membership of realize(q) in the mu-unit ball.
MembershipVerdict membership_reference(const QuotientPoint& q,
                                       double margin = 1e-7);

// Theta of (deleted block, first subcolumn), with a probabilistic
// non-derogatory check on random probe vectors.
GenericityReport genericity(const CMatrix& a,
                            std::uint64_t seed = 0x2545f4914f6cdd1dull);

}  // namespace muquot
