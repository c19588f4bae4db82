#include "twinv/orbitgraph.hpp"

#include "twinv/errors.hpp"
#include "twinv/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace twinv {

const std::vector<RelativeRoot>& RelativeRootCache::positive(LeviSubset s) {
  auto it = cache_.find(s.mask());
  if (it == cache_.end()) it = cache_.emplace(s.mask(), positive_relative_roots(*rs_, s)).first;
  return it->second;
}

int weight(const DiagramInvolution& theta, const Vertex& v, const std::vector<RelativeRoot>& positive_relative) {
  int n = 0;
  for (const auto& a : positive_relative)
    if (a.indivisible && root_sign(xi_theta(theta, v, a.lifts.front())) < 0) ++n;
  return n;
}

int weight(const DiagramInvolution& theta, const Vertex& v) {
  return weight(theta, v, positive_relative_roots(*theta.system(), v.levi));
}

std::vector<int> ascents(const DiagramInvolution& theta, const Vertex& v) {
  std::vector<int> out;
  for (int i = 0; i < theta.system()->rank(); ++i)
    if (!v.levi.contains(i) && classify_simple(theta, v, i) == SimpleMove::Positive) out.push_back(i);
  return out;
}

std::vector<int> descents(const DiagramInvolution& theta, const Vertex& v) {
  std::vector<int> out;
  for (int i = 0; i < theta.system()->rank(); ++i)
    if (!v.levi.contains(i) && classify_simple(theta, v, i) == SimpleMove::Negative) out.push_back(i);
  return out;
}

namespace {

Vertex transport(const DiagramInvolution& theta, const Vertex& v, const ElementarySymmetry& sym) {
  const auto& s = sym.element;
  WeylElement moved = multiply(multiply(s, v.xi), invert(theta.apply(s)));
  LeviSubset t = sym.target;
  return Vertex{t, min_double_coset_rep(moved, t, theta.apply(t))};
}

}  // namespace

Edge make_edge(const DiagramInvolution& theta, const Vertex& v, int i) {
  const auto& rs = theta.system();
  if (i < 0 || i >= rs->rank() || v.levi.contains(i) || classify_simple(theta, v, i) != SimpleMove::Negative)
    throw PreconditionError("no edge labelled " + std::to_string(i + 1) + " leaves " + v.to_string());
  auto sym = elementary_symmetry(rs, v.levi, i);
  Vertex target = transport(theta, v, sym);
  return Edge{v, i, std::move(sym), std::move(target)};
}

std::pair<Vertex, Edge> ascend(const DiagramInvolution& theta, const Vertex& v, int i) {
  const auto& rs = theta.system();
  if (i < 0 || i >= rs->rank() || v.levi.contains(i) || classify_simple(theta, v, i) != SimpleMove::Positive)
    throw PreconditionError("alpha_" + std::to_string(i + 1) + " is not an ascent of " + v.to_string());
  auto sym = elementary_symmetry(rs, v.levi, i);
  Vertex up = transport(theta, v, sym);
  if (auto why = vertex_violation(theta, up.levi, up.xi))
    throw InvariantViolation("ascend produced an invalid vertex " + up.to_string() + ": " + *why);
  const LeviSubset rest(v.levi.with(i).mask() & ~up.levi.mask());
  if (rest.size() != 1) throw InvariantViolation("ascend: cannot identify the return label at " + up.to_string());
  const int j = rest.indices().front();
  Edge e = make_edge(theta, up, j);
  if (!(e.target == v))
    throw InvariantViolation("ascend: edge from " + up.to_string() + " lands at " + e.target.to_string() + ", not " + v.to_string());
  return {std::move(up), std::move(e)};
}

std::optional<std::size_t> OrbitGraph::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

OrbitGraph build_graph(const DiagramInvolution& theta, const std::optional<std::vector<LeviSubset>>& levi_filter,
                       std::size_t cap) {
  const auto& rs = theta.system();
  OrbitGraph g(theta);
  std::vector<LeviSubset> levis = levi_filter ? *levi_filter : all_levis(rs->rank());
  std::sort(levis.begin(), levis.end());
  levis.erase(std::unique(levis.begin(), levis.end()), levis.end());
  if (levis.empty()) return g;

  auto twisted = enumerate_twisted(theta, cap);
  for (auto s : levis)
    for (auto& v : enumerate_admissible(theta, s, twisted)) g.vertices_.push_back(std::move(v));
  std::sort(g.vertices_.begin(), g.vertices_.end());
  for (std::size_t k = 0; k < g.vertices_.size(); ++k) g.index_.emplace(g.vertices_[k], k);

  RelativeRootCache cache(rs);
  g.out_.resize(g.vertices_.size());
  g.in_.resize(g.vertices_.size());
  for (std::size_t k = 0; k < g.vertices_.size(); ++k) {
    const auto& v = g.vertices_[k];
    g.weights_.push_back(weight(theta, v, cache.positive(v.levi)));
    g.maximal_.push_back(is_maximal(theta, v).maximal);
    for (int i : descents(theta, v)) {
      Edge e = make_edge(theta, v, i);
      auto t = g.index_of(e.target);
      if (!t) {
        if (std::binary_search(levis.begin(), levis.end(), e.target.levi))
          throw InvariantViolation("edge target " + e.target.to_string() + " is not an admissible vertex");
        continue;
      }
      g.out_[k].push_back(g.edges_.size());
      g.in_[*t].push_back(g.edges_.size());
      g.edges_.push_back(std::move(e));
    }
  }
  return g;
}

Path path_to_maximal(const DiagramInvolution& theta, const Vertex& v) {
  std::vector<Vertex> up{v};
  std::vector<Edge> down;
  for (;;) {
    auto asc = ascents(theta, up.back());
    if (asc.empty()) break;
    auto [next, e] = ascend(theta, up.back(), asc.front());
    up.push_back(std::move(next));
    down.push_back(std::move(e));
  }
  Path p;
  p.vertices.assign(up.rbegin(), up.rend());
  p.edges.assign(down.rbegin(), down.rend());
  return p;
}

std::string graph_to_dot(const OrbitGraph& g) {
  std::ostringstream os;
  os << "digraph orbit_graph {\n";
  os << "  // type " << g.system()->type_spec() << ", theta " << g.theta().to_string() << "\n";
  for (std::size_t k = 0; k < g.vertices().size(); ++k) {
    const auto& v = g.vertices()[k];
    os << "  v" << k << " [label=\"" << v.levi.to_string() << " | " << v.xi.to_string() << " | " << g.weight(k) << "\"";
    if (g.maximal(k)) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : g.edges())
    os << "  v" << *g.index_of(e.source) << " -> v" << *g.index_of(e.target) << " [label=\"" << e.alpha + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const OrbitGraph& g) {
  Json j;
  j["type"] = g.system()->type_spec();
  j["theta"] = g.theta().one_based();
  Json vs = Json::array(), es = Json::array(), mx = Json::array();
  for (std::size_t k = 0; k < g.vertices().size(); ++k) {
    Json v = to_json(g.vertices()[k]);
    v["weight"] = g.weight(k);
    vs.push_back(std::move(v));
    if (g.maximal(k)) mx.push_back(to_json(g.vertices()[k]));
  }
  for (const auto& e : g.edges()) {
    Json je;
    je["source"] = to_json(e.source);
    je["alpha"] = e.alpha + 1;
    je["target"] = to_json(e.target);
    es.push_back(std::move(je));
  }
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  j["maximal"] = std::move(mx);
  return j.dump(2) + "\n";
}

}  // namespace twinv
