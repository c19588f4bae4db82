#include "twinv/checks.hpp"

#include "twinv/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace twinv {

void CheckReport::record(const std::string& name, bool ok, const std::function<std::string()>& describe) {
  auto& r = slot(name);
  ++r.cases;
  if (ok) return;
  ++r.failures;
  if (r.counterexamples.size() < kMaxExamples) r.counterexamples.push_back(describe());
}

void CheckReport::note(const std::string& name, bool hit, const std::function<std::string()>& describe) {
  auto& r = slot(name);
  r.informational = true;
  ++r.cases;
  if (!hit) return;
  ++r.failures;
  if (r.counterexamples.size() < kMaxExamples) r.counterexamples.push_back(describe());
}

void CheckReport::guard(const std::string& name, const std::string& context, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    std::string msg = context + ": exception: " + e.what();
    record(name, false, [&] { return msg; });
  }
}

InvariantResult& CheckReport::slot(const std::string& name) {
  for (auto& r : results_)
    if (r.name == name) return r;
  InvariantResult fresh;
  fresh.name = name;
  results_.push_back(std::move(fresh));
  return results_.back();
}

const InvariantResult* CheckReport::find(const std::string& name) const {
  for (const auto& r : results_)
    if (r.name == name) return &r;
  return nullptr;
}

bool CheckReport::all_pass() const {
  return std::all_of(results_.begin(), results_.end(), [](const InvariantResult& r) { return r.pass(); });
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& r : results_) width = std::max(width, r.name.size());
  for (const auto& r : results_) {
    const char* tag = r.informational ? "info" : (r.pass() ? "pass" : "FAIL");
    os << tag << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << r.cases << " cases";
    if (r.failures) os << ", " << r.failures << (r.informational ? " hits" : " failures");
    os << "\n";
    for (const auto& c : r.counterexamples) os << "        " << c << "\n";
  }
  os << (all_pass() ? "all invariants hold\n" : "some invariants FAILED\n");
  return os.str();
}

Json CheckReport::to_json() const {
  Json arr = Json::array();
  for (const auto& r : results_) {
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass();
    j["informational"] = r.informational;
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["counterexamples"] = r.counterexamples;
    arr.push_back(std::move(j));
  }
  return Json{{"pass", all_pass()}, {"invariants", std::move(arr)}};
}

namespace {

std::string rtext(const Root& b) { return RationalVector::from_ints(b).to_string(); }

std::string where(const RootSystem& rs) { return rs.type_spec(); }

std::string where(const DiagramInvolution& theta) {
  return theta.system()->type_spec() + " theta=" + theta.to_string();
}

std::string where(const DiagramInvolution& theta, const Vertex& v) { return where(theta) + " " + v.to_string(); }

std::vector<Root> all_roots(const RootSystem& rs) {
  std::vector<Root> out = rs.positive_roots();
  for (const auto& b : rs.positive_roots()) out.push_back(negate(b));
  return out;
}

// Inv(x) = { beta > 0 : x beta < 0 }.
std::vector<bool> inversion_set(const WeylElement& w) {
  const auto& pos = w.system()->positive_roots();
  std::vector<bool> out(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) out[k] = root_sign(w.apply(pos[k])) < 0;
  return out;
}

bool in_levi_span(const RationalVector& v, LeviSubset s) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!s.contains(static_cast<int>(i)) && v[i] != 0) return false;
  return true;
}

}  // namespace

void check_root_system(const RootSystemPtr& rsp, CheckReport& report) {
  const auto& rs = *rsp;
  const int r = rs.rank();
  const std::string at = where(rs);

  report.guard("rootsys.cartan_axioms", at, [&] {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        int a = rs.cartan(i, j), b = rs.cartan(j, i);
        bool ok = i == j ? a == 2 : (a <= 0 && ((a == 0) == (b == 0)) && rs.symmetrizer()[i] * a == rs.symmetrizer()[j] * b);
        report.record("rootsys.cartan_axioms", ok, [&] {
          return at + ": cartan[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + std::to_string(a);
        });
      }
  });

  report.guard("rootsys.positive_root_count", at, [&] {
    if (rs.components().empty()) return;
    std::size_t want = classical_positive_count(rs.components());
    report.record("rootsys.positive_root_count", rs.positive_roots().size() == want, [&] {
      return at + ": " + std::to_string(rs.positive_roots().size()) + " positive roots, expected " + std::to_string(want);
    });
  });

  report.guard("rootsys.positive_coordinates", at, [&] {
    for (const auto& b : rs.positive_roots())
      report.record("rootsys.positive_coordinates", std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; }),
                    [&] { return at + ": " + rtext(b); });
    for (int i = 0; i < r; ++i) {
      Root e(r, 0);
      e[i] = 1;
      report.record("rootsys.positive_coordinates", rs.is_root(e), [&] { return at + ": alpha_" + std::to_string(i + 1) + " missing"; });
    }
  });

  report.guard("rootsys.reflection_closure", at, [&] {
    for (const auto& b : all_roots(rs))
      for (int i = 0; i < r; ++i) {
        Root img = rs.reflect(b, i);
        report.record("rootsys.reflection_closure", rs.is_root(img), [&] {
          return at + ": s_" + std::to_string(i + 1) + "(" + rtext(b) + ") = " + rtext(img) + " is not a root";
        });
      }
  });

  report.guard("rootsys.rho_pairing", at, [&] {
    for (int i = 0; i < r; ++i) {
      Rational p = rs.pair_simple(rs.rho(), i);
      report.record("rootsys.rho_pairing", p == 1, [&] {
        return at + ": <rho_0, alpha_" + std::to_string(i + 1) + "^vee> = " + p.get_str();
      });
    }
  });

  for (auto s : all_levis(r)) {
    const std::string ats = at + " S=" + s.to_string();
    report.guard("rootsys.projection", ats, [&] {
      std::vector<RationalVector> probes;
      for (int i = 0; i < r; ++i) probes.push_back(rs.simple_root(i));
      probes.push_back(rs.rho());
      for (const auto& lam : probes) {
        auto p = project_to_levi_dual(rs, lam, s);
        bool ok = project_to_levi_dual(rs, p, s) == p && in_levi_span(lam - p, s);
        for (int j : s.indices()) ok = ok && rs.pair_simple(p, j) == 0;
        report.record("rootsys.projection", ok, [&] { return ats + ": lambda = " + lam.to_string(); });
      }
    });
    report.guard("rootsys.relative_roots", ats, [&] {
      auto rel = relative_roots(rs, s);
      for (const auto& a : rel) {
        bool ok = !a.restriction.is_zero() && !a.lifts.empty();
        for (const auto& b : a.lifts)
          ok = ok && root_sign(b) == a.sign &&
               project_to_levi_dual(rs, RationalVector::from_ints(b), s) == a.restriction;
        report.record("rootsys.relative_roots", ok, [&] { return ats + ": restriction " + a.restriction.to_string(); });
        report.record("rootsys.coroot_well_defined", a.coroot_conflicts.empty(), [&] {
          return ats + ": lifts " + rtext(a.lifts.front()) + " and " + rtext(a.coroot_conflicts.front()) +
                 " of relative root " + a.restriction.to_string() + " project to different coroots";
        });
      }
    });
  }
}

void check_weyl(const RootSystemPtr& rs, CheckReport& report, std::size_t cap) {
  const std::string at = where(*rs);
  const int r = rs->rank();
  std::vector<WeylElement> W;
  report.guard("weyl.order", at, [&] {
    W = enumerate_weyl(rs, cap);
    report.record("weyl.order", W.size() == weyl_order(*rs), [&] { return at + ": closure has " + std::to_string(W.size()); });
  });
  if (W.empty()) return;

  report.guard("weyl.length_and_words", at, [&] {
    for (const auto& w : W) {
      auto inv = inversion_set(w);
      int n = static_cast<int>(std::count(inv.begin(), inv.end(), true));
      bool ok = n == w.length() && WeylElement::from_word(rs, w.word()) == w && multiply(w, invert(w)).is_identity();
      report.record("weyl.length_and_words", ok, [&] { return at + ": " + w.to_string(); });
    }
  });

  if (W.size() <= 48) {
    report.guard("weyl.length_subadditive", at, [&] {
      std::vector<std::vector<bool>> inv, inv_inverse;
      for (const auto& w : W) {
        inv.push_back(inversion_set(w));
        inv_inverse.push_back(inversion_set(invert(w)));
      }
      for (std::size_t a = 0; a < W.size(); ++a)
        for (std::size_t b = 0; b < W.size(); ++b) {
          int l = multiply(W[a], W[b]).length();
          bool disjoint = true;
          for (std::size_t k = 0; k < inv[a].size(); ++k)
            if (inv[a][k] && inv_inverse[b][k]) disjoint = false;
          bool ok = l <= W[a].length() + W[b].length() && ((l == W[a].length() + W[b].length()) == disjoint);
          report.record("weyl.length_subadditive", ok, [&] { return at + ": " + W[a].to_string() + " * " + W[b].to_string(); });
        }
    });
  }

  if (r > 3) return;
  const auto levis = all_levis(r);
  report.guard("weyl.double_coset", at, [&] {
    for (const auto& w : W)
      for (auto left : levis)
        for (auto right : levis) {
          auto m = min_double_coset_rep(w, left, right);
          bool ok = is_min_double_coset_rep(m, left, right) && min_double_coset_rep(m, left, right) == m &&
                    m.length() <= w.length();
          report.record("weyl.double_coset", ok, [&] {
            return at + ": w = " + w.to_string() + ", left " + left.to_string() + ", right " + right.to_string();
          });
        }
  });

  report.guard("weyl.elementary_symmetry", at, [&] {
    for (auto s : levis)
      for (int i = 0; i < r; ++i) {
        if (s.contains(i)) continue;
        auto sym = elementary_symmetry(rs, s, i);
        auto img = simple_image(sym.element, s);
        bool ok = img && *img == sym.target && sym.target.subset_of(s.with(i)) &&
                  sym.element == longest_relative(rs, s, s.with(i));
        if (s.empty()) ok = ok && sym.element == WeylElement::simple_reflection(rs, i);
        report.record("weyl.elementary_symmetry", ok, [&] { return at + ": S = " + s.to_string() + ", i = " + std::to_string(i + 1); });
      }
  });

  report.guard("weyl.decompose_roundtrip", at, [&] {
    for (auto s : levis)
      for (const auto& rw : W_L_of_M(rs, s, rs->full_levi())) {
        auto dec = decompose_symmetries(rw.element, s);
        WeylElement prod = WeylElement::identity(rs);
        LeviSubset cur = s;
        bool ok = true;
        for (const auto& sym : dec) {
          ok = ok && sym.source == cur;
          cur = sym.target;
          prod = multiply(sym.element, prod);
          if (s.empty()) ok = ok && sym.element == WeylElement::simple_reflection(rs, sym.alpha);
        }
        ok = ok && prod == rw.element && cur == rw.target;
        if (s.empty()) ok = ok && static_cast<int>(dec.size()) == rw.element.length();
        report.record("weyl.decompose_roundtrip", ok, [&] { return at + ": S = " + s.to_string() + ", w = " + rw.element.to_string(); });
      }
  });

  report.guard("weyl.longest_relative", at, [&] {
    for (auto m : levis)
      for (auto l : levis) {
        if (!m.subset_of(l)) continue;
        auto cands = W_L_of_M(rs, m, l);
        int best = -1, ties = 0;
        std::optional<WeylElement> arg;
        for (const auto& c : cands) {
          int lm = relative_length(c.element, m);
          if (lm > best) {
            best = lm;
            ties = 1;
            arg = c.element;
          } else if (lm == best) {
            ++ties;
          }
        }
        bool ok = ties == 1 && *arg == longest_relative(rs, m, l);
        report.record("weyl.longest_relative", ok, [&] { return at + ": M = " + m.to_string() + ", L = " + l.to_string(); });
      }
  });
}

void check_involution(const DiagramInvolution& theta, CheckReport& report, const std::vector<Rational>& cs,
                      std::size_t cap) {
  const auto& rsp = theta.system();
  const auto& rs = *rsp;
  const std::string at = where(theta);
  std::optional<OrbitGraph> graph;
  report.guard("orbitgraph.build", at, [&] {
    graph.emplace(build_graph(theta, std::nullopt, cap));
    report.record("orbitgraph.build", true, [] { return std::string(); });
  });
  if (!graph) return;
  const auto& g = *graph;
  const auto& V = g.vertices();
  const int w0_len = static_cast<int>(rs.positive_roots().size());

  report.guard("twist.admissible_empty_levi", at, [&] {
    auto tw = enumerate_twisted(theta, cap);
    auto adm = enumerate_admissible(theta, LeviSubset(), tw);
    report.record("twist.admissible_empty_levi", adm.size() == tw.size(), [&] { return at; });
  });

  for (std::size_t k = 0; k < V.size(); ++k) {
    const auto& v = V[k];
    const std::string av = where(theta, v);

    report.guard("twist.vertex_invariants", av, [&] {
      auto why = vertex_violation(theta, v.levi, v.xi);
      report.record("twist.vertex_invariants", !why, [&] { return av + ": " + *why; });
    });

    report.guard("twist.maximality_three_way", av, [&] {
      auto rep = is_maximal(theta, v);
      auto def = find_maximal_definition_levi(theta, v);
      bool local = g.in_edges(k).empty();
      bool ok = rep.maximal == def.has_value() && rep.maximal == local && rep.maximal == g.maximal(k);
      if (ok && rep.maximal) ok = *def == *rep.levi_l;
      report.record("twist.maximality_three_way", ok, [&] {
        return av + ": simple-root " + std::to_string(rep.maximal) + ", definition " + std::to_string(def.has_value()) +
               ", graph-local " + std::to_string(local);
      });
    });

    report.guard("twist.xi_theta_matrix", av, [&] {
      auto m = xi_theta_matrix(theta, v);
      report.record("twist.xi_theta_matrix", m * m == RationalMatrix::identity(m.rows()), [&] { return av; });
    });

    report.guard("twist.eigen_split", av, [&] {
      auto es = eigen_split(theta, v);
      bool ok = static_cast<int>(es.plus.size() + es.minus.size()) == rs.rank() - v.levi.size();
      for (const auto& b : es.plus) ok = ok && xi_theta(theta, v, b) == b;
      for (const auto& b : es.minus) ok = ok && xi_theta(theta, v, b) == -b;
      report.record("twist.eigen_split", ok, [&] { return av; });
    });

    report.guard("orbitgraph.ascents_iff_maximal", av, [&] {
      bool none = ascents(theta, v).empty();
      bool no_heavier_neighbor = true;
      for (auto e : g.in_edges(k))
        if (g.weight(*g.index_of(g.edges()[e].source)) > g.weight(k)) no_heavier_neighbor = false;
      for (auto e : g.out_edges(k))
        if (g.weight(*g.index_of(g.edges()[e].target)) > g.weight(k)) no_heavier_neighbor = false;
      report.record("orbitgraph.ascents_iff_maximal", none == g.maximal(k) && none == no_heavier_neighbor, [&] { return av; });
    });

    report.guard("orbitgraph.ascend_duality", av, [&] {
      for (int i : ascents(theta, v)) {
        auto [up, e] = ascend(theta, v, i);
        auto src = g.index_of(up);
        bool ok = src && g.weight(*src) == g.weight(k) + 2;
        if (ok) {
          ok = false;
          for (auto ei : g.out_edges(*src))
            if (g.edges()[ei].alpha == e.alpha && g.edges()[ei].target == v) ok = true;
        }
        report.record("orbitgraph.ascend_duality", ok, [&] { return av + ": ascent " + std::to_string(i + 1); });
      }
    });

    report.guard("orbitgraph.path_to_maximal", av, [&] {
      auto p = path_to_maximal(theta, v);
      bool ok = p.vertices.back() == v && is_maximal(theta, p.vertices.front()).maximal &&
                static_cast<int>(p.vertices.size()) <= w0_len / 2 + 1 && p.edges.size() + 1 == p.vertices.size();
      for (std::size_t s = 0; ok && s < p.edges.size(); ++s) {
        auto a = g.index_of(p.edges[s].source), b = g.index_of(p.edges[s].target);
        ok = a && b && p.edges[s].source == p.vertices[s] && p.edges[s].target == p.vertices[s + 1] &&
             g.weight(*a) == g.weight(*b) + 2;
      }
      report.record("orbitgraph.path_to_maximal", ok, [&] { return av + ": path length " + std::to_string(p.vertices.size()); });
    });

    if (g.maximal(k)) {
      report.guard("twist.levi", av, [&] {
        auto l = levi_L(theta, v);
        auto on_m = eigen_split(theta, v);
        auto on_l = eigen_split_on(theta, v, l);
        report.record("twist.levi_minus_eigenspace", same_span(on_m.minus, on_l.minus), [&] { return av; });

        std::vector<RationalVector> delta_ml;
        for (int i : l.indices())
          if (!v.levi.contains(i)) delta_ml.push_back(simple_restriction(rs, i, v.levi));
        auto joined = delta_ml;
        joined.insert(joined.end(), on_l.plus.begin(), on_l.plus.end());
        bool direct = span_rank(joined) == delta_ml.size() + on_l.plus.size() && span_rank(delta_ml) == delta_ml.size();
        bool contained = true;
        for (const auto& b : joined) contained = contained && in_span(on_m.plus, b);
        bool dims = joined.size() == on_m.plus.size();
        report.record("twist.levi_plus_decomposition", direct && contained && dims, [&] { return av; });

        bool roots_ok = true;
        std::string bad;
        for (const auto& a : relative_roots(rs, v.levi)) {
          bool fixed = xi_theta(theta, v, a.restriction) == a.restriction;
          bool in_l = root_in_levi(a.lifts.front(), l);
          if (fixed != in_l) {
            roots_ok = false;
            bad = a.restriction.to_string();
          }
        }
        report.record("twist.levi_fixed_roots", roots_ok, [&] { return av + ": relative root " + bad; });

        auto why = vertex_violation(theta, l, v.xi);
        report.record("twist.levi_admissible_at_L", !why, [&] { return av + ": L = " + l.to_string() + ": " + *why; });
      });

      report.guard("cones.modulus_check", av, [&] {
        auto m = modulus_root_check(theta, v);
        report.record("cones.modulus_check", m.pass(), [&] {
          std::string s = av + ":";
          for (const auto& f : m.failures) s += " " + f;
          return s;
        });
      });
    }

    report.guard("planner.plan", av, [&] {
      auto p = functional_equation_plan(theta, v);
      auto chk = verify_plan(p);
      report.record("planner.verify_plan", chk.ok, [&] { return av + ": " + (chk.diagnostics.empty() ? "" : chk.diagnostics.front()); });

      auto back = plan_from_json(plan_to_json(p));
      report.record("planner.json_roundtrip", verify_plan(back).ok && plan_to_json(back) == plan_to_json(p), [&] { return av; });

      bool tele = true;
      WeylElement next = WeylElement::identity(rsp);
      for (std::size_t i = p.steps.size(); i-- > 0;) {
        tele = tele && p.steps[i].w == multiply(next, p.steps[i].s_alpha);
        auto img = simple_image(p.steps[i].w, p.path[i].levi);
        tele = tele && img && *img == v.levi;
        next = p.steps[i].w;
      }
      report.record("planner.telescoping", tele, [&] { return av; });

      bool mats = true;
      for (const auto& st : p.steps)
        mats = mats && st.lambda_transport * st.w.matrix() == RationalMatrix::identity(static_cast<std::size_t>(rs.rank()));
      report.record("planner.lambda_transport", mats, [&] { return av; });

      auto cert = distinction_certificate(theta, v);
      auto cc = verify_certificate(cert);
      report.record("planner.certificate", cc.ok, [&] { return av + ": " + (cc.diagnostics.empty() ? "" : cc.diagnostics.front()); });
    });
  }

  for (const auto& e : g.edges()) {
    const std::string ae = where(theta, e.source) + " --" + std::to_string(e.alpha + 1) + "--> " + e.target.to_string();
    report.guard("orbitgraph.edge_condition", ae, [&] {
      const auto& s = e.symmetry.element;
      auto raw = multiply(multiply(s, e.source.xi), invert(theta.apply(s)));
      auto dc = min_double_coset_rep(raw, e.target.levi, theta.apply(e.target.levi));
      bool ok = classify_simple(theta, e.source, e.alpha) == SimpleMove::Negative && e.target.levi == e.symmetry.target &&
                e.target.xi == dc;
      report.record("orbitgraph.edge_condition", ok, [&] { return ae; });
      auto why = vertex_violation(theta, e.target.levi, e.target.xi);
      report.record("orbitgraph.closure", !why, [&] { return ae + ": " + *why; });
      auto a = *g.index_of(e.source), b = *g.index_of(e.target);
      report.record("orbitgraph.weight_step", g.weight(a) == g.weight(b) + 2, [&] {
        return ae + ": weights " + std::to_string(g.weight(a)) + " -> " + std::to_string(g.weight(b));
      });
      report.note("orbitgraph.dcmin_changes_transport", !(raw == dc), [&] { return ae; });
      report.note("orbitgraph.length_step_not_two", e.source.xi.length() != e.target.xi.length() + 2, [&] {
        return ae + ": l(xi) " + std::to_string(e.source.xi.length()) + " -> " + std::to_string(e.target.xi.length());
      });
    });
  }

  for (const auto& c : cs) {
    const std::string ac = at + " c=" + c.get_str();
    std::vector<std::optional<ConeSample>> samples(V.size());
    for (std::size_t k = 0; k < V.size(); ++k) {
      report.guard("cones.sample_in_cone", ac + " " + V[k].to_string(), [&] {
        auto s = sample_cone_point(theta, V[k], c);
        bool ok = in_cone_DMtheta(theta, V[k], s.lambda, c).pass && in_minus_eigenspace(theta, V[k], s.lambda);
        report.record("cones.sample_in_cone", ok, [&] { return ac + " " + V[k].to_string(); });
        samples[k] = std::move(s);
      });
    }
    for (const auto& e : g.edges()) {
      const auto& smp = samples[*g.index_of(e.source)];
      if (!smp) continue;
      const std::string ae = ac + " " + e.source.to_string() + " --" + std::to_string(e.alpha + 1) + "--> " + e.target.to_string();
      report.guard("cones.transport", ae, [&] {
        bool contained = in_cone_DMw(rsp, e.source.levi, e.symmetry.element, smp->lambda, c).pass;
        report.record("cones.containment", contained, [&] { return ae; });
        auto moved = e.symmetry.element.apply(smp->lambda);
        report.record("cones.transport", in_cone_DMtheta(theta, e.target, moved, c).pass, [&] { return ae; });
      });
    }
  }
}

void check_maximal_involutions(const RootSystemPtr& rs, CheckReport& report, std::size_t cap) {
  const std::string at = where(*rs);
  report.guard("twist.maximal_involutions", at, [&] {
    auto W = enumerate_weyl(rs, cap);
    const int r = rs->rank();
    std::unordered_set<WeylElement, WeylHash> involutions;
    for (const auto& w : W)
      if (multiply(w, w).is_identity()) involutions.insert(w);
    for (const auto& w : W) {
      if (!involutions.count(w)) continue;
      bool simple_criterion = true;
      for (int i = 0; i < r; ++i) {
        Root a(r, 0);
        a[i] = 1;
        Root img = w.apply(a);
        if (root_sign(img) > 0 && img != a) simple_criterion = false;
      }
      bool longest_form = false;
      for (auto l : all_levis(r)) {
        if (!(w == longest_relative(rs, l, rs->full_levi()))) continue;
        bool fixes = true;
        for (int i : l.indices()) {
          Root a(r, 0);
          a[i] = 1;
          fixes = fixes && w.apply(a) == a;
        }
        longest_form = longest_form || fixes;
      }
      int class_max = 0;
      for (const auto& u : W) class_max = std::max(class_max, multiply(multiply(u, w), invert(u)).length());
      bool max_in_class = w.length() == class_max;
      bool ok = simple_criterion == longest_form && longest_form == max_in_class;
      report.record("twist.maximal_involutions", ok, [&] {
        return at + ": " + w.to_string() + " simple " + std::to_string(simple_criterion) + ", w0w0L " +
               std::to_string(longest_form) + ", class-max " + std::to_string(max_in_class);
      });
    }
  });
}

std::vector<std::string> default_check_types() { return {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"}; }

std::vector<std::string> extended_check_types() {
  auto t = default_check_types();
  t.push_back("F4");
  t.push_back("E6");
  return t;
}

CheckReport run_checks(const std::vector<std::string>& types, std::size_t cap, const std::vector<Rational>& cs) {
  std::vector<RootSystemPtr> systems;
  for (const auto& t : types) {
    auto rs = build_root_system(t);
    if (weyl_order(*rs) > cap)
      throw CapExceeded("|W(" + t + ")| = " + std::to_string(weyl_order(*rs)) + " exceeds cap " + std::to_string(cap));
    systems.push_back(std::move(rs));
  }
  CheckReport report;
  for (const auto& rs : systems) {
    check_root_system(rs, report);
    check_weyl(rs, report, cap);
    if (rs->rank() <= 3) check_maximal_involutions(rs, report, cap);
    for (const auto& theta : all_diagram_involutions(rs)) check_involution(theta, report, cs, cap);
  }
  return report;
}

}  // namespace twinv
