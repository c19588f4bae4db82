#pragma once

// Diagram involutions, twisted involutions and admissible vertices.
//
// theta is a Cartan-matrix automorphism of order <= 2 given as a permutation
// of the simple roots. It acts on roots by permuting coordinates and on W by
// theta(s_i) = s_{theta(i)}. A twisted involution is xi with theta(xi) = xi^{-1};
// a vertex (S, xi) additionally satisfies xi(Delta_0^{theta S}) = Delta_0^S and
// xi is the minimal representative of W^S xi W^{theta S}. On such a vertex,
// xi theta is an involution of a_M^*.

#include "twinv/weyl.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twinv {

class DiagramInvolution {
 public:
  /// perm is 0-based. Throws InputError unless perm is an involutive Cartan automorphism.
  DiagramInvolution(RootSystemPtr rs, std::vector<int> perm);
  static DiagramInvolution identity(RootSystemPtr rs);
  /// Parses "2,1" (1-based). An empty string means the identity.
  static DiagramInvolution parse(RootSystemPtr rs, const std::string& text);

  const RootSystemPtr& system() const { return rs_; }
  const std::vector<int>& perm() const { return perm_; }
  std::vector<int> one_based() const;
  bool is_identity() const;
  int operator()(int i) const { return perm_[i]; }

  Root apply(const Root& beta) const;
  RationalVector apply(const RationalVector& lambda) const;
  LeviSubset apply(LeviSubset s) const;
  /// theta(w) = theta w theta^{-1}.
  WeylElement apply(const WeylElement& w) const;

  std::string to_string() const;

 private:
  RootSystemPtr rs_;
  std::vector<int> perm_;
};

/// Every diagram involution of the root system (identity first, then
/// lexicographic in the permutation).
std::vector<DiagramInvolution> all_diagram_involutions(const RootSystemPtr& rs);

bool is_twisted_involution(const DiagramInvolution& theta, const WeylElement& xi);

/// The set J_0(theta), sorted by (length, word).
std::vector<WeylElement> enumerate_twisted(const DiagramInvolution& theta, std::size_t cap = kDefaultEnumerationCap);

struct Vertex {
  LeviSubset levi;
  WeylElement xi;

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.levi == b.levi && a.xi == b.xi; }
  /// By Levi, then by xi length, then by reduced word.
  friend bool operator<(const Vertex& a, const Vertex& b);
  /// "({1} | s1 s2)"
  std::string to_string() const;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

/// The violated vertex invariant, or nullopt when (S, xi) is a valid vertex.
std::optional<std::string> vertex_violation(const DiagramInvolution& theta, LeviSubset s, const WeylElement& xi);
/// Throws InputError naming the violated invariant.
Vertex make_vertex(const DiagramInvolution& theta, LeviSubset s, const WeylElement& xi);

/// J_M(theta) as vertices. The second form filters a precomputed J_0(theta).
std::vector<Vertex> enumerate_admissible(const DiagramInvolution& theta, LeviSubset s,
                                         std::size_t cap = kDefaultEnumerationCap);
std::vector<Vertex> enumerate_admissible(const DiagramInvolution& theta, LeviSubset s,
                                         const std::vector<WeylElement>& twisted);

/// xi theta applied to an absolute root / a vector of a_0^*.
Root xi_theta(const DiagramInvolution& theta, const Vertex& v, const Root& beta);
RationalVector xi_theta(const DiagramInvolution& theta, const Vertex& v, const RationalVector& lambda);

/// How xi theta moves the simple relative root (alpha_i)_M.
enum class SimpleMove { Fixed, Negated, Positive, Negative };
SimpleMove classify_simple(const DiagramInvolution& theta, const Vertex& v, int i);

struct MaximalityReport {
  bool maximal = false;
  /// First alpha_i (0-based) with xi theta alpha > 0 and != alpha.
  std::optional<int> witness;
  /// L_{xi,theta}, only when maximal.
  std::optional<LeviSubset> levi_l;
};

/// Simple-root criterion, cross-checked against the definition through
/// L = S + {fixed simple relative roots}: when maximal, xi must equal
/// longest_relative(theta(L), full). Throws InvariantViolation if they disagree.
MaximalityReport is_maximal(const DiagramInvolution& theta, const Vertex& v);

/// Definition-style test for one candidate L: L contains S, xi = w_{theta L}^G,
/// and xi theta fixes Delta_M^L pointwise.
bool satisfies_maximal_definition(const DiagramInvolution& theta, const Vertex& v, LeviSubset l);
/// Brute force over every L containing S.
std::optional<LeviSubset> find_maximal_definition_levi(const DiagramInvolution& theta, const Vertex& v);

/// L_{xi,theta} = S + {i : xi theta fixes (alpha_i)_M}. Throws PreconditionError if v is not maximal.
LeviSubset levi_L(const DiagramInvolution& theta, const Vertex& v);

/// Basis of a_M^*: (alpha_i)_M for i outside S, in increasing i.
std::vector<RationalVector> levi_dual_basis(const RootSystem& rs, LeviSubset s);

/// Matrix of xi theta on a_M^* in the levi_dual_basis. Integer entries.
RationalMatrix xi_theta_matrix(const DiagramInvolution& theta, const Vertex& v);

struct EigenSplit {
  std::vector<RationalVector> plus;
  std::vector<RationalVector> minus;
};

/// Bases (in a_0^* coordinates) of the +1 and -1 eigenspaces of xi theta on a_M^*,
/// built from b + xi theta(b) and b - xi theta(b).
EigenSplit eigen_split(const DiagramInvolution& theta, const Vertex& v);

/// Same construction for xi theta restricted to a_L^* for a larger Levi L
/// stable under xi theta.
EigenSplit eigen_split_on(const DiagramInvolution& theta, const Vertex& v, LeviSubset l);

}  // namespace twinv
