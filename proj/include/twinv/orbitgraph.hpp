#pragma once

// The orbit graph on admissible vertices (S, xi).
//
// An edge (S, xi) --i--> (S1, xi1) exists when alpha = (alpha_i)_M satisfies
// xi theta(alpha) < 0 and xi theta(alpha) != -alpha. With s = s_alpha the
// elementary symmetry, S1 is its target Levi and xi1 is the minimal
// representative of s xi theta(s)^{-1} in W^{S1} . W^{theta S1}.
//
// The weight of (S, xi) is the number of indivisible positive relative roots
// alpha of S with xi theta(alpha) < 0. For S = {} this is the length of xi.

#include "twinv/twist.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace twinv {

struct Edge {
  Vertex source;
  /// 0-based simple index i, alpha = (alpha_i)_M at the source.
  int alpha = -1;
  ElementarySymmetry symmetry;
  Vertex target;
};

/// Per-Levi cache of positive relative roots, shared by weight computations.
class RelativeRootCache {
 public:
  explicit RelativeRootCache(RootSystemPtr rs) : rs_(std::move(rs)) {}
  const std::vector<RelativeRoot>& positive(LeviSubset s);

 private:
  RootSystemPtr rs_;
  std::map<std::uint32_t, std::vector<RelativeRoot>> cache_;
};

int weight(const DiagramInvolution& theta, const Vertex& v);
int weight(const DiagramInvolution& theta, const Vertex& v, const std::vector<RelativeRoot>& positive_relative);

/// Simple indices i outside S with xi theta(alpha_i)_M > 0 and != (alpha_i)_M.
std::vector<int> ascents(const DiagramInvolution& theta, const Vertex& v);
/// Simple indices i outside S carrying an outgoing edge.
std::vector<int> descents(const DiagramInvolution& theta, const Vertex& v);

/// The edge leaving v with label i. Throws PreconditionError if i is not a descent.
Edge make_edge(const DiagramInvolution& theta, const Vertex& v, int i);

/// The vertex above v reached through the ascent i, and the edge from it back down to v.
/// Throws PreconditionError if i is not an ascent, InvariantViolation if the result is inconsistent.
std::pair<Vertex, Edge> ascend(const DiagramInvolution& theta, const Vertex& v, int i);

class OrbitGraph {
 public:
  OrbitGraph(DiagramInvolution theta) : theta_(std::move(theta)) {}

  const DiagramInvolution& theta() const { return theta_; }
  const RootSystemPtr& system() const { return theta_.system(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int weight(std::size_t k) const { return weights_[k]; }
  bool maximal(std::size_t k) const { return maximal_[k]; }
  std::optional<std::size_t> index_of(const Vertex& v) const;
  /// Indices of edges leaving / entering vertex k.
  const std::vector<std::size_t>& out_edges(std::size_t k) const { return out_[k]; }
  const std::vector<std::size_t>& in_edges(std::size_t k) const { return in_[k]; }

 private:
  friend OrbitGraph build_graph(const DiagramInvolution&, const std::optional<std::vector<LeviSubset>>&, std::size_t);
  DiagramInvolution theta_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> weights_;
  std::vector<bool> maximal_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::unordered_map<Vertex, std::size_t, VertexHash> index_;
};

/// All vertices over the given Levis (every Levi when the filter is absent) and
/// every edge with both endpoints present. Vertices are sorted; edges are
/// sorted by source and label.
OrbitGraph build_graph(const DiagramInvolution& theta,
                       const std::optional<std::vector<LeviSubset>>& levi_filter = std::nullopt,
                       std::size_t cap = kDefaultEnumerationCap);

/// vertices.front() is maximal, vertices.back() is the input and
/// edges[k] goes from vertices[k] to vertices[k + 1].
struct Path {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Repeated ascend through the smallest ascent index.
Path path_to_maximal(const DiagramInvolution& theta, const Vertex& v);

std::string graph_to_dot(const OrbitGraph& g);
std::string graph_to_json(const OrbitGraph& g);

}  // namespace twinv
