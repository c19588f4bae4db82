#pragma once

// Cone membership for D_{M,theta}(c) and D^{M,w}(c), sampling, and the
// root-level modulus check at maximal vertices.
//
// Every pairing <lambda, alpha^vee> is taken with lambda_M and the relative
// coroot of alpha (see RelativeRoot::coroot).

#include "twinv/orbitgraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twinv {

struct ConeResult {
  bool pass = false;
  /// Only meaningful for D_{M,theta}: lambda_M lies in the -1 eigenspace of xi theta.
  bool in_minus_eigenspace = true;
  /// First positive relative root (in root order) violating the inequality.
  std::optional<RelativeRoot> witness;
  Rational witness_pairing;
};

bool in_minus_eigenspace(const DiagramInvolution& theta, const Vertex& v, const RationalVector& lambda);

/// <lambda_M, alpha^vee> for a relative root of S.
Rational relative_pairing(const RootSystem& rs, const RationalVector& lambda, LeviSubset s, const RelativeRoot& alpha);

ConeResult in_cone_DMtheta(const DiagramInvolution& theta, const Vertex& v, const RationalVector& lambda, const Rational& c);
ConeResult in_cone_DMw(const RootSystemPtr& rs, LeviSubset s, const WeylElement& w, const RationalVector& lambda,
                       const Rational& c);

constexpr int kDefaultSampleDoublings = 64;

struct ConeSample {
  RationalVector lambda;
  /// lambda = scale * (rho_P - xi theta rho_P) / 2
  Rational scale;
  RationalVector direction;
};

/// Smallest power of two t >= 1 with t * direction in D_{M,theta}(c).
/// Throws InvariantViolation after max_doublings failed doublings.
ConeSample sample_cone_point(const DiagramInvolution& theta, const Vertex& v, const Rational& c,
                             int max_doublings = kDefaultSampleDoublings);

struct ModulusReport {
  LeviSubset levi_l;
  RationalVector rho_q;
  bool fixes_delta_l = true;        // (a) xi theta fixes Delta_M^L pointwise
  bool negates_outside_l = true;    // (b) positive roots outside L go negative
  bool negates_rho_q = true;        // (c) xi theta rho_Q = -rho_Q
  bool keeps_l_positive = true;     // (d) positive roots of L outside M stay positive
  std::vector<std::string> failures;
  bool pass() const { return fixes_delta_l && negates_outside_l && negates_rho_q && keeps_l_positive; }
};

/// Throws PreconditionError unless v is maximal.
ModulusReport modulus_root_check(const DiagramInvolution& theta, const Vertex& v);

}  // namespace twinv
