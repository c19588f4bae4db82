#include "twinv/cones.hpp"

#include "twinv/errors.hpp"

namespace twinv {

namespace {

std::string root_text(const Root& b) { return RationalVector::from_ints(b).to_string(); }

}  // namespace

bool in_minus_eigenspace(const DiagramInvolution& theta, const Vertex& v, const RationalVector& lambda) {
  auto lm = project_to_levi_dual(*theta.system(), lambda, v.levi);
  return xi_theta(theta, v, lm) == -lm;
}

Rational relative_pairing(const RootSystem& rs, const RationalVector& lambda, LeviSubset s, const RelativeRoot& alpha) {
  return rs.pair_root_coroot(project_to_levi_dual(rs, lambda, s), alpha.coroot);
}

ConeResult in_cone_DMtheta(const DiagramInvolution& theta, const Vertex& v, const RationalVector& lambda, const Rational& c) {
  const auto& rs = *theta.system();
  ConeResult res;
  res.in_minus_eigenspace = in_minus_eigenspace(theta, v, lambda);
  if (!res.in_minus_eigenspace) return res;
  auto lm = project_to_levi_dual(rs, lambda, v.levi);
  for (const auto& a : positive_relative_roots(rs, v.levi)) {
    if (root_sign(xi_theta(theta, v, a.lifts.front())) > 0) continue;
    Rational p = rs.pair_root_coroot(lm, a.coroot);
    if (p <= c) {
      res.witness = a;
      res.witness_pairing = p;
      return res;
    }
  }
  res.pass = true;
  return res;
}

ConeResult in_cone_DMw(const RootSystemPtr& rs, LeviSubset s, const WeylElement& w, const RationalVector& lambda,
                       const Rational& c) {
  ConeResult res;
  auto lm = project_to_levi_dual(*rs, lambda, s);
  for (const auto& a : positive_relative_roots(*rs, s)) {
    if (root_sign(w.apply(a.lifts.front())) > 0) continue;
    Rational p = rs->pair_root_coroot(lm, a.coroot);
    if (p <= c) {
      res.witness = a;
      res.witness_pairing = p;
      return res;
    }
  }
  res.pass = true;
  return res;
}

ConeSample sample_cone_point(const DiagramInvolution& theta, const Vertex& v, const Rational& c, int max_doublings) {
  const auto& rs = *theta.system();
  auto rho_p = rho(rs, v.levi, rs.full_levi());
  ConeSample s;
  s.direction = Rational(1, 2) * (rho_p - xi_theta(theta, v, rho_p));
  s.scale = 1;
  for (int k = 0; k <= max_doublings; ++k) {
    s.lambda = s.scale * s.direction;
    if (in_cone_DMtheta(theta, v, s.lambda, c).pass) return s;
    s.scale *= 2;
  }
  throw InvariantViolation("cone sampling at " + v.to_string() + " found no point after " + std::to_string(max_doublings) +
                           " doublings");
}

ModulusReport modulus_root_check(const DiagramInvolution& theta, const Vertex& v) {
  const auto& rs = *theta.system();
  auto rep = is_maximal(theta, v);
  if (!rep.maximal) throw PreconditionError("modulus check needs a maximal vertex, got " + v.to_string());
  ModulusReport out;
  out.levi_l = *rep.levi_l;
  for (int i : out.levi_l.indices()) {
    if (v.levi.contains(i)) continue;
    if (classify_simple(theta, v, i) != SimpleMove::Fixed) {
      out.fixes_delta_l = false;
      out.failures.push_back("(a) alpha_" + std::to_string(i + 1) + " is not fixed");
    }
  }
  for (const auto& b : rs.positive_roots()) {
    const bool sign_pos = root_sign(xi_theta(theta, v, b)) > 0;
    if (!root_in_levi(b, out.levi_l)) {
      if (sign_pos) {
        out.negates_outside_l = false;
        out.failures.push_back("(b) " + root_text(b) + " stays positive");
      }
    } else if (!root_in_levi(b, v.levi) && !sign_pos) {
      out.keeps_l_positive = false;
      out.failures.push_back("(d) " + root_text(b) + " becomes negative");
    }
  }
  out.rho_q = rho(rs, out.levi_l, rs.full_levi());
  if (!(xi_theta(theta, v, out.rho_q) == -out.rho_q)) {
    out.negates_rho_q = false;
    out.failures.push_back("(c) xi theta rho_Q != -rho_Q");
  }
  return out;
}

}  // namespace twinv
