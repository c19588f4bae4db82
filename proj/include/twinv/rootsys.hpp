#pragma once

// Finite root systems in the simple-root basis.
//
// Conventions. Simple roots alpha_1..alpha_r carry squared half-norms d_i
// (the symmetrizer), with (alpha_i, alpha_j) = -max(d_i, d_j) for adjacent
// nodes. The Cartan matrix is
//
//     cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
//
// so the simple reflection is s_i(v) = v - (sum_j v_j cartan[i][j]) alpha_i.
//
//   type | nodes                          | d (short = 1)
//   -----+--------------------------------+------------------------------
//   A_n  | 1-2-...-n                      | all 1
//   B_n  | 1-2-...-(n-1)=>n               | d_n = 1, others 2 (alpha_n short)
//   C_n  | 1-2-...-(n-1)<=n               | d_n = 2, others 1 (alpha_n long)
//   D_n  | 1-...-(n-2), (n-2)-(n-1), (n-2)-n | all 1
//   E_n  | 1-3-4-5-...-n, 2-4 (Bourbaki)  | all 1
//   F_4  | 1-2=>3-4                       | d = (2, 2, 1, 1)
//   G_2  | 1<=2 (triple)                  | d = (1, 3), alpha_1 short
//
// Hence G2 has <alpha_2, alpha_1^vee> = -3 and <alpha_1, alpha_2^vee> = -1.
// Products "A2xB3" are direct sums with indices renumbered left to right.

#include "twinv/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace twinv {

using Root = std::vector<int>;

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

struct SimpleType {
  char letter;
  int rank;
};

/// Subset S of the simple roots, stored as a bit mask (bit i = alpha_{i+1}).
class LeviSubset {
 public:
  LeviSubset() = default;
  explicit LeviSubset(std::uint32_t mask) : mask_(mask) {}
  /// From 0-based indices.
  static LeviSubset of(const std::vector<int>& indices);
  static LeviSubset full(int rank) { return LeviSubset(rank >= 32 ? ~0u : ((1u << rank) - 1)); }

  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  bool subset_of(LeviSubset o) const { return (mask_ & ~o.mask_) == 0; }
  LeviSubset with(int i) const { return LeviSubset(mask_ | (1u << i)); }
  /// 0-based indices in increasing order.
  std::vector<int> indices() const;
  /// 1-based indices, for serialization.
  std::vector<int> one_based() const;
  /// "{1,3}" rendering.
  std::string to_string() const;

  friend bool operator==(LeviSubset a, LeviSubset b) { return a.mask_ == b.mask_; }
  /// Deterministic order: by size, then lexicographically by sorted index list.
  friend bool operator<(LeviSubset a, LeviSubset b);

 private:
  std::uint32_t mask_ = 0;
};

/// All subsets of {0..rank-1} in the deterministic LeviSubset order.
std::vector<LeviSubset> all_levis(int rank);

/// Immutable root datum. Build with build_root_system().
class RootSystem {
 public:
  /// Raw constructor; performs no consistency checks. Used directly only by
  /// tests that need corrupted fixtures.
  RootSystem(std::string type_spec, std::vector<SimpleType> components,
             std::vector<std::vector<int>> cartan, std::vector<int> symmetrizer,
             std::vector<Root> positive_roots);

  const std::string& type_spec() const { return type_spec_; }
  const std::vector<SimpleType>& components() const { return components_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  /// Ordered by height, then lexicographically descending (alpha_1 before alpha_2).
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Index into positive_roots() of +beta or -beta, or nullopt if beta is not a root.
  std::optional<std::size_t> root_index(const Root& beta) const;
  bool is_root(const Root& beta) const { return root_index(beta).has_value(); }

  /// Symmetrized form (u, v) = sum u_i v_j d_i cartan[i][j] on integer vectors.
  long long form(const Root& u, const Root& v) const;
  Rational form(const RationalVector& u, const RationalVector& v) const;
  /// <v, alpha_i^vee> for integer v.
  int pair_simple(const Root& v, int i) const;
  Rational pair_simple(const RationalVector& v, int i) const;
  /// Coordinates of beta^vee in the simple-coroot basis; beta must be a root.
  std::vector<Rational> coroot(const Root& beta) const;
  /// <lambda, H> for lambda in simple-root and H in simple-coroot coordinates.
  Rational pair_root_coroot(const RationalVector& lambda, const std::vector<Rational>& h) const;

  /// s_i applied to an integer vector.
  Root reflect(const Root& v, int i) const;

  /// Half sum of positive roots.
  const RationalVector& rho() const { return rho_; }
  RationalVector simple_root(int i) const;
  LeviSubset full_levi() const { return LeviSubset::full(rank_); }

 private:
  std::string type_spec_;
  std::vector<SimpleType> components_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Root> positive_;
  std::unordered_map<Root, std::size_t, RootHash> index_;
  RationalVector rho_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Parses "A3", "A2xB3" etc. and enumerates positive roots by reflection closure.
/// Throws InputError on malformed tokens or unsupported ranks.
RootSystemPtr build_root_system(const std::string& type_spec);

/// Classical number of positive roots of a (product) type.
std::size_t classical_positive_count(const std::vector<SimpleType>& components);

/// Sign of a root in simple coordinates: +1, -1, or 0 for the zero vector.
int root_sign(const Root& beta);
int height(const Root& beta);
Root negate(Root beta);
/// Support of beta is contained in S.
bool root_in_levi(const Root& beta, LeviSubset s);

/// <lambda, beta^vee> for any absolute root beta. Throws InputError if beta is not a root.
Rational pairing(const RootSystem& rs, const RationalVector& lambda, const Root& beta);

/// lambda -> lambda_M along a_0^* = a_M^* (+) span(Delta_0^M).
RationalVector project_to_levi_dual(const RootSystem& rs, const RationalVector& lambda, LeviSubset s);

/// Coroot-space projection a_0 -> a_M (kills span of alpha_j^vee, j in S).
std::vector<Rational> project_coroot(const RootSystem& rs, const std::vector<Rational>& h, LeviSubset s);

/// rho of P_lower cap L_upper in a_{M_lower}^*: projection of the half sum of
/// positive roots of L_upper to the dual of a_{M_lower}. rho(S, full) = rho_P.
/// Throws PreconditionError unless lower is contained in upper.
RationalVector rho(const RootSystem& rs, LeviSubset lower, LeviSubset upper);

/// Relative root of T_M: a nonzero restriction together with all of its lifts.
struct RelativeRoot {
  RationalVector restriction;
  int sign = 0;
  /// Projected coroot of the first lift, in simple-coroot coordinates.
  std::vector<Rational> coroot;
  /// In root order, so lifts.front() has minimal height.
  std::vector<Root> lifts;
  /// Lifts whose projected coroot differs from `coroot`. Empty in simply-laced types.
  std::vector<Root> coroot_conflicts;
  /// Half of it is not a relative root.
  bool indivisible = true;
  /// When the restriction is a simple relative root, the index i with
  /// restriction = (alpha_i)_M; otherwise -1.
  int simple_index = -1;
};

/// All relative roots (both signs) of the Levi S, positive ones first in root
/// order, then their negatives. Lifts of one restriction can project to
/// different coroots when root lengths differ (B2, S = {2}: alpha_1 and
/// alpha_1 + alpha_2). With strict set this throws InvariantViolation;
/// otherwise the disagreeing lifts are listed in coroot_conflicts.
std::vector<RelativeRoot> relative_roots(const RootSystem& rs, LeviSubset s, bool strict = false);

/// Positive relative roots only.
std::vector<RelativeRoot> positive_relative_roots(const RootSystem& rs, LeviSubset s, bool strict = false);

/// Simple root alpha_i projected to a_M^*.
RationalVector simple_restriction(const RootSystem& rs, int i, LeviSubset s);

}  // namespace twinv
