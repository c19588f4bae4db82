#pragma once

// Symbolic functional-equation plans and distinction certificates.
//
// For a vertex v, path_to_maximal gives M_1 -a_1-> M_2 -a_2-> ... -a_k-> M_{k+1} = v
// with M_1 maximal. With w_{k+1} = e and w_i = w_{i+1} s_{a_i}, so that
// w_i = s_{a_k} ... s_{a_i}, the parameter on M_i is lambda_i = w_i^{-1} lambda.
// Step i relates the period on M_i to the period on M_{i+1} through the
// intertwiner M(n_i, w_i^{-1} sigma, lambda_i). At M_1 the period factors
// through Q = L V, L = L_{xi, theta}, and the closed period Lambda_ell on L.
//
// Operators and representations are opaque string tokens.

#include "twinv/cones.hpp"
#include "twinv/serialize.hpp"

#include <string>
#include <vector>

namespace twinv {

struct OperatorToken {
  /// "standard-intertwiner", "closed-period" or "open-period".
  std::string kind;
  std::string expression;
};

struct PlanStep {
  Vertex source;
  int alpha = -1;
  Vertex target;
  WeylElement s_alpha;
  WeylElement w;
  /// Matrix of w^{-1} on a_0^* (lambda_i = lambda_transport * lambda).
  RationalMatrix lambda_transport;
  OperatorToken op;
  std::string source_rep;
  std::string target_rep;
};

struct PlanTerminal {
  Vertex vertex;
  LeviSubset levi_l;
  /// Q is the standard parabolic with Levi levi_q (= levi_l).
  LeviSubset levi_q;
  ConeSample sample;
  ModulusReport modulus;
  OperatorToken closed_period;
  OperatorToken open_period;
  std::string factorization;
};

struct Plan {
  DiagramInvolution theta;
  Rational c;
  /// path.front() is maximal, path.back() is the requested vertex.
  std::vector<Vertex> path;
  std::vector<PlanStep> steps;
  PlanTerminal terminal;
  std::vector<std::string> disclaimers;
};

const std::vector<std::string>& plan_disclaimers();

Plan functional_equation_plan(const DiagramInvolution& theta, const Vertex& v, const Rational& c = 1);

struct PlanCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Recomputes everything in the plan from its path and reports each mismatch.
PlanCheck verify_plan(const Plan& p);

Json plan_to_json(const Plan& p);
/// Inverse of plan_to_json. Throws InputError on malformed documents; does not verify.
Plan plan_from_json(const Json& j);
std::string plan_to_text(const Plan& p);

/// Reverse-induction certificate: the plan plus per-vertex weights and cone samples.
struct CertificateLink {
  Vertex vertex;
  int weight = 0;
  ConeSample sample;
};

struct Certificate {
  Plan plan;
  std::vector<CertificateLink> chain;
};

Certificate distinction_certificate(const DiagramInvolution& theta, const Vertex& v, const Rational& c = 1);
/// Every link satisfies the edge condition with its predecessor, weights drop by two,
/// samples lie in their cones, and the base is maximal with a passing modulus check.
PlanCheck verify_certificate(const Certificate& cert);

Json certificate_to_json(const Certificate& cert);
std::string certificate_to_text(const Certificate& cert);

}  // namespace twinv
