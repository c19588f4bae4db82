// Acceptance run: one line per criterion, nonzero exit if any criterion fails.

#include "bridge.hpp"
#include "cli.hpp"
#include "twinv/checks.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace twinv;

namespace {

const std::vector<std::string> kMatrix = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
const std::vector<std::string> kRankThree = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    pass = false;
    if (failures.size() < 3) failures.push_back(what());
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int report_line(int id, const std::string& title, const Outcome& o, double secs) {
  std::cout << "criterion " << std::setw(2) << id << "  " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  ["
            << o.cases << " cases, " << std::fixed << std::setprecision(2) << secs << " s]";
  if (!o.detail.empty()) std::cout << "  " << o.detail;
  std::cout << "\n";
  for (const auto& f : o.failures) std::cout << "      " << f << "\n";
  return o.pass ? 0 : 1;
}

std::string where(const DiagramInvolution& th, const Vertex& v) {
  return th.system()->type_spec() + " theta=" + th.to_string() + " " + v.to_string();
}

struct Universe {
  DiagramInvolution theta;
  OrbitGraph graph;
};

std::vector<Universe> build_universes(const std::vector<std::string>& types) {
  std::vector<Universe> out;
  for (const auto& t : types) {
    auto rs = build_root_system(t);
    for (const auto& th : all_diagram_involutions(rs)) out.push_back({th, build_graph(th)});
  }
  return out;
}

// ---- 1 ----
Outcome counts() {
  Outcome o;
  struct Case {
    std::string type;
    std::vector<int> perm;
    std::size_t expected;
  };
  for (const auto& c : std::vector<Case>{{"A2", {0, 1}, 4}, {"A2", {1, 0}, 4}, {"B2", {0, 1}, 6}, {"A3", {2, 1, 0}, 10}}) {
    auto os = bridge::oracle_system(c.type);
    auto oracle_set = oracle::twisted_involutions(os.group, c.perm);
    auto rs = build_root_system(c.type);
    auto lib = enumerate_twisted(DiagramInvolution(rs, c.perm));
    std::set<oracle::Mat> lib_set;
    for (const auto& w : lib) lib_set.insert(bridge::to_mat(w));
    const std::string tag = c.type + "/" + (c.perm[0] == 0 ? "id" : "flip");
    o.expect(oracle_set.size() == c.expected, [&] { return tag + ": oracle count " + std::to_string(oracle_set.size()); });
    o.expect(lib_set == std::set<oracle::Mat>(oracle_set.begin(), oracle_set.end()),
             [&] { return tag + ": library set differs from the oracle (" + std::to_string(lib.size()) + ")"; });
  }
  // A3 flip: xi -> xi w0 is a bijection onto the involutions of S4.
  auto a3 = bridge::oracle_system("A3");
  const int r = 3;
  oracle::Mat w0;
  int best = -1;
  for (const auto& m : a3.group.elements)
    if (oracle::length(a3.group, m) > best) best = oracle::length(a3.group, m), w0 = m;
  std::set<oracle::Mat> images;
  for (const auto& x : oracle::twisted_involutions(a3.group, {2, 1, 0})) images.insert(oracle::mul(x, w0, r));
  auto invs = oracle::twisted_involutions(a3.group, {0, 1, 2});
  o.expect(images == std::set<oracle::Mat>(invs.begin(), invs.end()), [] { return std::string("A3: xi w0 bijection fails"); });
  std::vector<int> p = {0, 1, 2, 3};
  std::size_t perm_invs = 0;
  do {
    bool inv = true;
    for (int i = 0; i < 4; ++i) inv = inv && p[p[i]] == i;
    perm_invs += inv;
  } while (std::next_permutation(p.begin(), p.end()));
  o.expect(perm_invs == 10 && invs.size() == 10, [&] { return "S4 has " + std::to_string(perm_invs) + " involutions"; });
  o.detail = "A2/id=4 A2/flip=4 B2/id=6 A3/flip=10";
  return o;
}

// ---- 2 ----
Outcome maximality(const std::vector<Universe>& us) {
  Outcome o;
  for (const auto& u : us) {
    const auto& g = u.graph;
    const int r = g.system()->rank();
    for (std::size_t k = 0; k < g.vertices().size(); ++k) {
      const auto& v = g.vertices()[k];
      bool definition = find_maximal_definition_levi(u.theta, v).has_value();
      bool simple = true;
      for (int i = 0; i < r; ++i)
        if (!v.levi.contains(i) && classify_simple(u.theta, v, i) == SimpleMove::Positive) simple = false;
      bool local = true;
      for (auto ei : g.in_edges(k)) local = local && g.weight(*g.index_of(g.edges()[ei].source)) <= g.weight(k);
      o.expect(definition == simple && simple == local, [&] {
        return where(u.theta, v) + ": definition " + std::to_string(definition) + ", simple " + std::to_string(simple) +
               ", graph " + std::to_string(local);
      });
    }
  }
  return o;
}

// ---- 4 ----
Outcome paths(const std::vector<Universe>& us) {
  Outcome o;
  for (const auto& u : us) {
    const auto& rs = *u.theta.system();
    const std::size_t bound = rs.positive_roots().size() / 2 + 1;
    for (const auto& v : u.graph.vertices()) {
      Path p = path_to_maximal(u.theta, v);
      bool ok = !p.vertices.empty() && p.vertices.back() == v && p.edges.size() + 1 == p.vertices.size();
      ok = ok && is_maximal(u.theta, p.vertices.front()).maximal && p.vertices.size() <= bound;
      for (std::size_t k = 0; ok && k < p.edges.size(); ++k) {
        auto e = make_edge(u.theta, p.vertices[k], p.edges[k].alpha);
        ok = e.target == p.vertices[k + 1] && weight(u.theta, p.vertices[k]) == weight(u.theta, p.vertices[k + 1]) + 2;
      }
      o.expect(ok, [&] { return where(u.theta, v) + ": path of " + std::to_string(p.vertices.size()) + " vertices"; });
    }
  }
  return o;
}

// ---- 5 ----
Outcome modulus(const std::vector<Universe>& us) {
  Outcome o;
  for (const auto& u : us)
    for (std::size_t k = 0; k < u.graph.vertices().size(); ++k) {
      if (!u.graph.maximal(k)) continue;
      auto m = modulus_root_check(u.theta, u.graph.vertices()[k]);
      o.expect(m.fixes_delta_l && m.negates_rho_q && m.pass(), [&] {
        return where(u.theta, u.graph.vertices()[k]) + ": " + (m.failures.empty() ? "" : m.failures.front());
      });
    }
  return o;
}

// ---- 6 ----
Outcome maximal_involutions() {
  Outcome o;
  for (const auto& t : kRankThree) {
    auto os = bridge::oracle_system(t);
    const auto& g = os.group;
    const int r = g.rank;
    auto rs = build_root_system(t);
    auto id = DiagramInvolution::identity(rs);
    auto longest = [&](const std::vector<oracle::Mat>& set) {
      return *std::max_element(set.begin(), set.end(),
                               [&](const auto& a, const auto& b) { return oracle::length(g, a) < oracle::length(g, b); });
    };
    auto w0 = longest(g.elements);
    for (const auto& w : oracle::twisted_involutions(g, id.perm())) {
      const int len = oracle::length(g, w);
      bool by_class = true;
      for (const auto& c : oracle::conjugacy_class(g, w)) by_class = by_class && oracle::length(g, c) <= len;
      bool by_sign = true;
      for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        auto img = oracle::apply(w, e, r);
        by_sign = by_sign && (img == e || oracle::is_negative(img));
      }
      bool by_product = false;
      for (auto l : all_levis(r)) {
        if (oracle::mul(w0, longest(oracle::parabolic(g, l.mask())), r) != w) continue;
        bool fixes = true;
        for (int i : l.indices()) {
          std::vector<int> e(r, 0);
          e[i] = 1;
          fixes = fixes && oracle::apply(w, e, r) == e;
        }
        by_product = by_product || fixes;
      }
      auto xi = bridge::to_weyl(rs, w);
      bool library = is_maximal(id, make_vertex(id, LeviSubset(), xi)).maximal;
      o.expect(by_class == by_sign && by_sign == by_product && by_product == library, [&] {
        return t + " " + xi.to_string() + ": class " + std::to_string(by_class) + ", sign " + std::to_string(by_sign) +
               ", product " + std::to_string(by_product) + ", library " + std::to_string(library);
      });
    }
  }
  return o;
}

// ---- 7 ----
Outcome coroots() {
  Outcome o;
  std::map<std::string, std::size_t> per_type;
  std::size_t mismatch_with_library = 0;
  for (const auto& t : kMatrix) {
    auto os = bridge::oracle_system(t);
    auto rs = build_root_system(t);
    const int r = rs->rank();
    for (auto s : all_levis(r)) {
      // Lifts of one relative root share their coordinates outside S. Their
      // projected coroots beta / (beta, beta) agree iff the lifts have equal length.
      std::map<std::vector<int>, std::map<long long, std::vector<int>>> groups;
      for (const auto& b : os.euclid.positive) {
        auto c = oracle::simple_coords(os.euclid, b);
        std::vector<int> key;
        for (int i = 0; i < r; ++i)
          if (!s.contains(i)) key.push_back(c[i]);
        if (std::all_of(key.begin(), key.end(), [](int x) { return x == 0; })) continue;
        groups[key].emplace(oracle::dot(b, b), c);
      }
      std::size_t conflicts = 0;
      for (const auto& [key, by_len] : groups) {
        o.expect(by_len.size() == 1, [&, &by_len = by_len] {
          std::ostringstream m;
          m << t << " S=" << s.to_string() << ": lifts";
          for (const auto& [n, c] : by_len) m << " " << RationalVector::from_ints(c).to_string() << " (|.|^2=" << n << ")";
          m << " project to different coroots";
          return m.str();
        });
        if (by_len.size() > 1) ++per_type[t], ++conflicts;
      }
      std::size_t lib = 0;
      for (const auto& a : positive_relative_roots(*rs, s)) lib += !a.coroot_conflicts.empty();
      mismatch_with_library += lib != conflicts;
    }
  }
  std::ostringstream d;
  if (per_type.empty()) d << "every relative coroot is lift independent";
  else {
    d << "lift-dependent relative roots:";
    for (const auto& [t, n] : per_type) d << " " << t << "=" << n;
  }
  if (mismatch_with_library) {
    o.pass = false;
    d << "; library disagrees with the oracle on " << mismatch_with_library << " Levis";
  }
  o.detail = d.str();
  return o;
}

// ---- 3, 8, 9 share one pass of the invariant suite ----
Outcome from_report(const CheckReport& report, const std::vector<std::string>& names) {
  Outcome o;
  for (const auto& n : names) {
    const auto* r = report.find(n);
    if (!r) {
      o.pass = false;
      o.failures.push_back(n + " never ran");
      continue;
    }
    o.cases += r->cases;
    if (!r->pass()) {
      o.pass = false;
      for (const auto& c : r->counterexamples)
        if (o.failures.size() < 3) o.failures.push_back(n + ": " + c);
    }
  }
  return o;
}

Outcome cones_direct(const std::vector<Universe>& us, Outcome o) {
  for (const auto& u : us) {
    const auto& g = u.graph;
    for (int c : {0, 1, 10}) {
      std::vector<ConeSample> samples;
      for (const auto& v : g.vertices()) {
        samples.push_back(sample_cone_point(u.theta, v, c));
        o.expect(in_cone_DMtheta(u.theta, v, samples.back().lambda, c).pass,
                 [&] { return where(u.theta, v) + ": sample outside its cone, c=" + std::to_string(c); });
      }
      for (const auto& e : g.edges()) {
        const auto& smp = samples[*g.index_of(e.source)];
        auto moved = act(e.symmetry.element, smp.lambda);
        o.expect(in_cone_DMtheta(u.theta, e.target, moved, c).pass,
                 [&] { return where(u.theta, e.source) + " -> " + e.target.to_string() + ": transport leaves the cone"; });
      }
    }
  }
  return o;
}

Outcome planner_direct(const std::vector<Universe>& us, Outcome o) {
  for (const auto& u : us) {
    const auto& rs = u.theta.system();
    for (const auto& v : u.graph.vertices()) {
      auto p = functional_equation_plan(u.theta, v, 1);
      auto back = plan_from_json(plan_to_json(p));
      o.expect(verify_plan(p).ok && verify_plan(back).ok && plan_to_json(back) == plan_to_json(p),
               [&] { return where(u.theta, v) + ": plan does not verify or round-trip"; });
      WeylElement next = WeylElement::identity(rs);
      bool tele = true;
      for (std::size_t i = p.steps.size(); i-- > 0;) {
        tele = tele && p.steps[i].w == multiply(next, p.steps[i].s_alpha);
        tele = tele && simple_image(p.steps[i].w, p.steps[i].source.levi) == std::optional<LeviSubset>(v.levi);
        next = p.steps[i].w;
      }
      o.expect(tele, [&] { return where(u.theta, v) + ": telescoping identity fails"; });
    }
  }
  return o;
}

// ---- 10 ----
std::string run_to_file(std::vector<std::string> args, const std::filesystem::path& file, int& code) {
  args.insert(args.begin(), "twinv");
  args.push_back("--out");
  args.push_back(file.string());
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  std::ifstream f(file, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  auto dir = std::filesystem::temp_directory_path() / "twinv_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> commands = {
      {"graph", "--type", "A3", "--inv", "3,2,1"},
      {"graph", "--type", "D4", "--inv", "1,2,4,3", "--format", "json"},
      {"graph", "--type", "B3", "--levi", "", "--levi", "2"},
      {"plan", "--type", "A3", "--inv", "3,2,1", "--xi", ""},
      {"plan", "--type", "B3", "--levi", "1", "--xi", "", "--c", "5/2", "--format", "text"},
  };
  for (const auto& cmd : commands) {
    int c1 = -1, c2 = -1;
    auto a = run_to_file(cmd, dir / "first", c1);
    auto b = run_to_file(cmd, dir / "second", c2);
    std::string joined;
    for (const auto& s : cmd) joined += s + " ";
    o.expect(c1 == 0 && c2 == 0 && !a.empty() && a == b, [&] { return joined + ": outputs differ or the command failed"; });
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  std::cout << "acceptance over " << kMatrix.size() << " root systems and all of their diagram involutions\n";

  auto t0 = Clock::now();
  failed += report_line(1, "twisted-involution counts match the brute-force filter", counts(), seconds_since(t0));

  t0 = Clock::now();
  auto universes = build_universes(kMatrix);
  auto o2 = maximality(universes);
  const double s2 = seconds_since(t0);
  if (s2 >= 60) o2.pass = false, o2.failures.push_back("took longer than 60 s");
  failed += report_line(2, "definition, simple-root and graph-local maximality agree", o2, s2);

  t0 = Clock::now();
  CheckReport report;
  for (const auto& u : universes) check_involution(u.theta, report, {0, 1, 10});
  const double suite = seconds_since(t0);

  failed += report_line(3, "eigenspaces, fixed relative roots and admissibility at L",
                        from_report(report, {"twist.levi_minus_eigenspace", "twist.levi_plus_decomposition",
                                             "twist.levi_fixed_roots", "twist.levi_admissible_at_L"}),
                        suite);

  t0 = Clock::now();
  failed += report_line(4, "paths reach maximal vertices, weight +2 per step, bounded length", paths(universes),
                        seconds_since(t0));

  t0 = Clock::now();
  failed += report_line(5, "root-level modulus check at every maximal vertex", modulus(universes), seconds_since(t0));

  t0 = Clock::now();
  failed += report_line(6, "maximal involutions for theta = id (conjugacy classes by brute force)", maximal_involutions(),
                        seconds_since(t0));

  t0 = Clock::now();
  failed += report_line(7, "relative coroots are independent of the lift", coroots(), seconds_since(t0));

  t0 = Clock::now();
  auto o8 = cones_direct(universes,
                         from_report(report, {"cones.sample_in_cone", "cones.containment", "cones.transport"}));
  failed += report_line(8, "cone samples for c in {0, 1, 10} and transport along edges", o8, seconds_since(t0));

  t0 = Clock::now();
  auto o9 = planner_direct(universes, from_report(report, {"planner.verify_plan", "planner.json_roundtrip",
                                                           "planner.telescoping", "planner.lambda_transport"}));
  failed += report_line(9, "plans verify, round-trip through JSON and telescope", o9, seconds_since(t0));

  t0 = Clock::now();
  failed += report_line(10, "graph and plan output files are byte-identical across runs", determinism(), seconds_since(t0));

  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
