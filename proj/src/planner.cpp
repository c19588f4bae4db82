#include "twinv/planner.hpp"

#include "twinv/errors.hpp"

#include <sstream>

namespace twinv {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

std::string rep_token(std::size_t i, std::size_t k) {
  if (i == k + 1) return "I_{P_" + idx(i) + "}^G(sigma, lambda)";
  return "I_{P_" + idx(i) + "}^G(w_" + idx(i) + "^{-1} sigma, lambda_" + idx(i) + ")";
}

OperatorToken intertwiner_token(std::size_t i) {
  return {"standard-intertwiner", "M(n_" + idx(i) + ", w_" + idx(i) + "^{-1} sigma, lambda_" + idx(i) + ")"};
}

PlanTerminal make_terminal(const DiagramInvolution& theta, const Vertex& top, const Rational& c) {
  auto l = levi_L(theta, top);
  return PlanTerminal{
      top,
      l,
      l,
      sample_cone_point(theta, top, c),
      modulus_root_check(theta, top),
      {"closed-period", "Lambda_ell(f) = int_{(P cap L)_x \\ L_x} ell(f(h)) dh on I_{P cap L}^L(sigma)"},
      {"open-period", "J_Q^G(F_phi; x, Lambda_ell, I_{P cap L}^L sigma, lambda)"},
      "J_P^G(phi; x, ell, sigma, lambda) = J_Q^G(F_phi; x, Lambda_ell, I_{P cap L}^L sigma, lambda)",
  };
}

Json modulus_to_json(const ModulusReport& m) {
  Json j;
  j["L"] = to_json(m.levi_l);
  j["rho_Q"] = to_json(m.rho_q);
  j["fixes_delta_L"] = m.fixes_delta_l;
  j["negates_outside_L"] = m.negates_outside_l;
  j["negates_rho_Q"] = m.negates_rho_q;
  j["keeps_L_positive"] = m.keeps_l_positive;
  j["pass"] = m.pass();
  j["failures"] = m.failures;
  return j;
}

ModulusReport modulus_from_json(const Json& j, int rank) {
  ModulusReport m;
  m.levi_l = levi_from_json(j.at("L"), rank);
  m.rho_q = vector_from_json(j.at("rho_Q"));
  m.fixes_delta_l = j.at("fixes_delta_L").get<bool>();
  m.negates_outside_l = j.at("negates_outside_L").get<bool>();
  m.negates_rho_q = j.at("negates_rho_Q").get<bool>();
  m.keeps_l_positive = j.at("keeps_L_positive").get<bool>();
  m.failures = j.at("failures").get<std::vector<std::string>>();
  return m;
}

Json sample_to_json(const ConeSample& s) {
  Json j;
  j["lambda"] = to_json(s.lambda);
  j["scale"] = to_pq_string(s.scale);
  j["direction"] = to_json(s.direction);
  return j;
}

ConeSample sample_from_json(const Json& j) {
  ConeSample s;
  s.lambda = vector_from_json(j.at("lambda"));
  s.scale = parse_rational(j.at("scale").get<std::string>());
  s.direction = vector_from_json(j.at("direction"));
  return s;
}

Json token_to_json(const OperatorToken& t) { return Json{{"kind", t.kind}, {"expression", t.expression}}; }

OperatorToken token_from_json(const Json& j) { return {j.at("kind").get<std::string>(), j.at("expression").get<std::string>()}; }

Vertex raw_vertex(const RootSystemPtr& rs, const Json& j) {
  return Vertex{levi_from_json(j.at("levi"), rs->rank()), weyl_from_json(rs, j.at("xi"))};
}

}  // namespace

const std::vector<std::string>& plan_disclaimers() {
  static const std::vector<std::string> d = {
      "Only Weyl-level combinatorics is checked; convergence, meromorphic continuation and the analytic "
      "identities between periods are assumed, not verified.",
      "Triviality of delta_x on the F-points of L_x is NOT verified; only its root-level shadow "
      "xi theta(rho_Q) = -rho_Q is checked.",
      "The standing hypothesis that the intertwining operators involved are holomorphic and invertible at "
      "the parameters used is NOT verified.",
      "Operator and representation names are symbolic tokens; the choices of n_i in s_alpha M and of "
      "measures are not fixed.",
  };
  return d;
}

Plan functional_equation_plan(const DiagramInvolution& theta, const Vertex& v, const Rational& c) {
  if (auto why = vertex_violation(theta, v.levi, v.xi)) throw InputError("invalid vertex " + v.to_string() + ": " + *why);
  const auto& rs = theta.system();
  Path path = path_to_maximal(theta, v);
  const std::size_t k = path.edges.size();
  std::vector<PlanStep> steps;
  WeylElement w = WeylElement::identity(rs);
  std::vector<WeylElement> ws(k + 1, w);
  for (std::size_t i = k; i-- > 0;) {
    w = multiply(w, path.edges[i].symmetry.element);
    ws[i] = w;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& e = path.edges[i];
    steps.push_back(PlanStep{e.source, e.alpha, e.target, e.symmetry.element, ws[i], invert(ws[i]).matrix(),
                             intertwiner_token(i + 1), rep_token(i + 1, k), rep_token(i + 2, k)});
  }
  return Plan{theta, c, path.vertices, std::move(steps), make_terminal(theta, path.vertices.front(), c),
              plan_disclaimers()};
}

PlanCheck verify_plan(const Plan& p) {
  PlanCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.diagnostics.push_back(std::move(msg));
  };
  const auto& theta = p.theta;
  const auto& rs = theta.system();
  if (p.path.empty()) {
    fail("path is empty");
    return out;
  }
  for (std::size_t i = 0; i < p.path.size(); ++i)
    if (auto why = vertex_violation(theta, p.path[i].levi, p.path[i].xi))
      fail("path vertex " + idx(i + 1) + " " + p.path[i].to_string() + ": " + *why);
  if (!out.ok) return out;
  if (p.steps.size() + 1 != p.path.size()) {
    fail("expected " + idx(p.path.size() - 1) + " steps, found " + idx(p.steps.size()));
    return out;
  }
  const std::size_t k = p.steps.size();
  WeylElement w = WeylElement::identity(rs);
  std::vector<WeylElement> ws(k + 1, w);
  for (std::size_t i = k; i-- > 0;) {
    w = multiply(w, p.steps[i].s_alpha);
    ws[i] = w;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& st = p.steps[i];
    const std::string tag = "step " + idx(i + 1) + ": ";
    if (!(st.source == p.path[i]) || !(st.target == p.path[i + 1])) fail(tag + "endpoints differ from the path");
    try {
      Edge e = make_edge(theta, st.source, st.alpha);
      if (!(e.target == st.target)) fail(tag + "edge via alpha_" + idx(st.alpha + 1) + " lands at " + e.target.to_string());
      if (!(e.symmetry.element == st.s_alpha)) fail(tag + "s_alpha is not the elementary symmetry");
    } catch (const std::exception& ex) {
      fail(tag + ex.what());
    }
    if (!(st.w == ws[i])) fail(tag + "w_" + idx(i + 1) + " = " + st.w.to_string() + " but the product is " + ws[i].to_string());
    if (!(st.lambda_transport == invert(ws[i]).matrix())) fail(tag + "lambda transport is not the matrix of w_" + idx(i + 1) + "^{-1}");
    auto img = simple_image(st.w, st.source.levi);
    if (!img || !(*img == p.path.back().levi)) fail(tag + "w_" + idx(i + 1) + " does not carry M_" + idx(i + 1) + " onto M");
    if (st.op.kind != "standard-intertwiner") fail(tag + "operator kind is " + st.op.kind);
  }
  const auto& t = p.terminal;
  if (!(t.vertex == p.path.front())) fail("terminal vertex is not the first path vertex");
  try {
    auto rep = is_maximal(theta, t.vertex);
    if (!rep.maximal) {
      fail("terminal vertex " + t.vertex.to_string() + " is not maximal");
    } else {
      if (!(t.levi_l == *rep.levi_l)) fail("terminal L is " + t.levi_l.to_string() + ", expected " + rep.levi_l->to_string());
      if (!(t.levi_q == t.levi_l)) fail("terminal Q does not have Levi L");
      auto m = modulus_root_check(theta, t.vertex);
      if (!m.pass()) fail("modulus check fails at the terminal vertex");
      if (!(m.rho_q == t.modulus.rho_q) || m.pass() != t.modulus.pass()) fail("recorded modulus check differs from a recomputation");
      if (!in_cone_DMtheta(theta, t.vertex, t.sample.lambda, p.c).pass) fail("terminal cone sample is outside its cone");
    }
  } catch (const std::exception& ex) {
    fail(std::string("terminal: ") + ex.what());
  }
  if (t.closed_period.kind != "closed-period" || t.open_period.kind != "open-period") fail("terminal operator kinds are wrong");
  if (p.disclaimers != plan_disclaimers()) fail("disclaimers are missing or altered");
  return out;
}

Json plan_to_json(const Plan& p) {
  Json j;
  j["type"] = p.theta.system()->type_spec();
  j["theta"] = p.theta.one_based();
  j["c"] = to_pq_string(p.c);
  Json path = Json::array();
  for (const auto& v : p.path) path.push_back(to_json(v));
  j["path"] = std::move(path);
  Json steps = Json::array();
  for (const auto& s : p.steps) {
    Json js;
    js["source"] = to_json(s.source);
    js["alpha"] = s.alpha + 1;
    js["target"] = to_json(s.target);
    js["s_alpha"] = to_json(s.s_alpha);
    js["w_i"] = to_json(s.w);
    js["lambda_transport"] = to_json(s.lambda_transport);
    js["operator"] = token_to_json(s.op);
    js["source_rep"] = s.source_rep;
    js["target_rep"] = s.target_rep;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  const auto& t = p.terminal;
  Json jt;
  jt["vertex"] = to_json(t.vertex);
  jt["L"] = to_json(t.levi_l);
  jt["Q"] = to_json(t.levi_q);
  jt["lambda_sample"] = to_json(t.sample.lambda);
  jt["sample"] = sample_to_json(t.sample);
  jt["modulus_check"] = modulus_to_json(t.modulus);
  jt["closed_period"] = token_to_json(t.closed_period);
  jt["open_period"] = token_to_json(t.open_period);
  jt["factorization"] = t.factorization;
  j["terminal"] = std::move(jt);
  j["disclaimers"] = p.disclaimers;
  return j;
}

Plan plan_from_json(const Json& j) {
  try {
    auto rs = build_root_system(j.at("type").get<std::string>());
    std::vector<int> perm;
    for (int x : j.at("theta").get<std::vector<int>>()) perm.push_back(x - 1);
    DiagramInvolution theta(rs, perm);
    Rational c = parse_rational(j.at("c").get<std::string>());
    std::vector<Vertex> path;
    for (const auto& v : j.at("path")) path.push_back(raw_vertex(rs, v));
    std::vector<PlanStep> steps;
    for (const auto& s : j.at("steps"))
      steps.push_back(PlanStep{raw_vertex(rs, s.at("source")), s.at("alpha").get<int>() - 1, raw_vertex(rs, s.at("target")),
                               weyl_from_json(rs, s.at("s_alpha")), weyl_from_json(rs, s.at("w_i")),
                               matrix_from_json(s.at("lambda_transport")), token_from_json(s.at("operator")),
                               s.at("source_rep").get<std::string>(), s.at("target_rep").get<std::string>()});
    const auto& jt = j.at("terminal");
    PlanTerminal t{raw_vertex(rs, jt.at("vertex")),
                   levi_from_json(jt.at("L"), rs->rank()),
                   levi_from_json(jt.at("Q"), rs->rank()),
                   sample_from_json(jt.at("sample")),
                   modulus_from_json(jt.at("modulus_check"), rs->rank()),
                   token_from_json(jt.at("closed_period")),
                   token_from_json(jt.at("open_period")),
                   jt.at("factorization").get<std::string>()};
    return Plan{theta, c, std::move(path), std::move(steps), std::move(t),
                j.at("disclaimers").get<std::vector<std::string>>()};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed plan: ") + e.what());
  }
}

std::string plan_to_text(const Plan& p) {
  std::ostringstream os;
  os << "plan for " << p.path.back().to_string() << " in " << p.theta.system()->type_spec() << ", theta = "
     << p.theta.to_string() << "\n";
  os << "path:";
  for (const auto& v : p.path) os << " " << v.to_string();
  os << "\n";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& s = p.steps[i];
    os << "step " << i + 1 << ": " << s.source.to_string() << " --alpha_" << s.alpha + 1 << "--> " << s.target.to_string() << "\n";
    os << "  s_alpha = " << s.s_alpha.to_string() << ", w_" << i + 1 << " = " << s.w.to_string() << "\n";
    os << "  " << s.source_rep << " --" << s.op.expression << "--> " << s.target_rep << "\n";
  }
  const auto& t = p.terminal;
  os << "terminal " << t.vertex.to_string() << ": L = Q-Levi = " << t.levi_l.to_string() << "\n";
  os << "  " << t.factorization << "\n";
  os << "  " << t.closed_period.expression << "\n";
  os << "  cone sample (c = " << p.c.get_str() << "): " << t.sample.lambda.to_string() << "\n";
  os << "  modulus check: " << (t.modulus.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& d : p.disclaimers) os << "note: " << d << "\n";
  return os.str();
}

Certificate distinction_certificate(const DiagramInvolution& theta, const Vertex& v, const Rational& c) {
  Certificate cert{functional_equation_plan(theta, v, c), {}};
  RelativeRootCache cache(theta.system());
  for (const auto& u : cert.plan.path)
    cert.chain.push_back(CertificateLink{u, weight(theta, u, cache.positive(u.levi)), sample_cone_point(theta, u, c)});
  return cert;
}

PlanCheck verify_certificate(const Certificate& cert) {
  PlanCheck out = verify_plan(cert.plan);
  const auto& theta = cert.plan.theta;
  if (cert.chain.size() != cert.plan.path.size()) {
    out.ok = false;
    out.diagnostics.push_back("chain length differs from the plan path");
    return out;
  }
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const auto& link = cert.chain[i];
    const std::string tag = "link " + idx(i + 1) + ": ";
    if (!(link.vertex == cert.plan.path[i])) {
      out.ok = false;
      out.diagnostics.push_back(tag + "vertex differs from the plan path");
      continue;
    }
    if (weight(theta, link.vertex) != link.weight) {
      out.ok = false;
      out.diagnostics.push_back(tag + "recorded weight is wrong");
    }
    if (i > 0 && cert.chain[i - 1].weight != link.weight + 2) {
      out.ok = false;
      out.diagnostics.push_back(tag + "weight does not drop by two");
    }
    if (!in_cone_DMtheta(theta, link.vertex, link.sample.lambda, cert.plan.c).pass) {
      out.ok = false;
      out.diagnostics.push_back(tag + "cone sample is outside its cone");
    }
    if (i > 0) {
      const auto& st = cert.plan.steps[i - 1];
      auto cls = classify_simple(theta, st.source, st.alpha);
      if (cls != SimpleMove::Negative) {
        out.ok = false;
        out.diagnostics.push_back(tag + "predecessor does not satisfy the edge condition");
      }
    }
  }
  return out;
}

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["kind"] = "distinction-certificate";
  j["type"] = cert.plan.theta.system()->type_spec();
  j["theta"] = cert.plan.theta.one_based();
  j["vertex"] = to_json(cert.plan.path.back());
  j["c"] = to_pq_string(cert.plan.c);
  Json chain = Json::array();
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const auto& link = cert.chain[i];
    Json jl;
    jl["vertex"] = to_json(link.vertex);
    jl["weight"] = link.weight;
    jl["cone_sample"] = sample_to_json(link.sample);
    if (i + 1 < cert.chain.size()) {
      const auto& st = cert.plan.steps[i];
      jl["edge_to_next"] = Json{{"alpha", st.alpha + 1}, {"operator", token_to_json(st.op)}};
    }
    chain.push_back(std::move(jl));
  }
  j["chain"] = std::move(chain);
  const auto& t = cert.plan.terminal;
  Json base;
  base["vertex"] = to_json(t.vertex);
  base["L"] = to_json(t.levi_l);
  base["Q"] = to_json(t.levi_q);
  base["open_period"] = token_to_json(t.open_period);
  base["closed_period"] = token_to_json(t.closed_period);
  base["modulus_check"] = modulus_to_json(t.modulus);
  j["base"] = std::move(base);
  j["plan"] = plan_to_json(cert.plan);
  j["disclaimers"] = cert.plan.disclaimers;
  return j;
}

std::string certificate_to_text(const Certificate& cert) {
  std::ostringstream os;
  os << "distinction certificate for " << cert.plan.path.back().to_string() << "\n";
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const auto& link = cert.chain[i];
    os << (i == 0 ? "base " : "     ") << link.vertex.to_string() << "  weight " << link.weight << "  sample "
       << link.sample.lambda.to_string() << "\n";
    if (i + 1 < cert.chain.size()) os << "       | " << cert.plan.steps[i].op.expression << "\n";
  }
  const auto& t = cert.plan.terminal;
  os << "open period " << t.open_period.expression << ", L = " << t.levi_l.to_string() << "\n";
  os << "modulus check: " << (t.modulus.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& d : cert.plan.disclaimers) os << "note: " << d << "\n";
  return os.str();
}

}  // namespace twinv
