#pragma once

// Weyl group elements in canonical form.
//
// An element is stored as the images w(alpha_1), ..., w(alpha_r) of the simple
// roots, i.e. its integer matrix in the simple-root basis (column i = w(alpha_i)).
// Two elements are equal iff their images agree. Each element also carries its
// length and the lexicographically smallest reduced word, computed once at
// construction.

#include "twinv/rootsys.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace twinv {

class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  static WeylElement simple_reflection(RootSystemPtr rs, int i);
  /// Product s_{word[0]} s_{word[1]} ... (0-based indices; need not be reduced).
  static WeylElement from_word(RootSystemPtr rs, const std::vector<int>& word);
  /// Validates that the images are roots preserving the symmetrized form.
  static WeylElement from_images(RootSystemPtr rs, std::vector<int> images);
  /// No validation; the images must come from group operations on existing elements.
  static WeylElement from_trusted_images(RootSystemPtr rs, std::vector<int> images);

  const RootSystemPtr& system() const { return rs_; }
  int rank() const { return rs_->rank(); }
  int length() const { return static_cast<int>(word_.size()); }
  /// Lexicographically smallest reduced word, 0-based.
  const std::vector<int>& word() const { return word_; }
  std::vector<int> word_one_based() const;
  bool is_identity() const { return word_.empty(); }

  /// Column-major images: images()[i * rank + j] = coefficient of alpha_j in w(alpha_i).
  const std::vector<int>& images() const { return images_; }
  Root image(int i) const;
  Root apply(const Root& v) const;
  RationalVector apply(const RationalVector& v) const;
  /// Matrix on a_0^* in simple-root coordinates.
  RationalMatrix matrix() const;

  /// "s1 s2 s1", or "e".
  std::string to_string() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rs_ == b.rs_ && a.images_ == b.images_;
  }
  /// Deterministic order: by length, then by reduced word.
  friend bool operator<(const WeylElement& a, const WeylElement& b);

 private:
  WeylElement(RootSystemPtr rs, std::vector<int> images);
  RootSystemPtr rs_;
  std::vector<int> images_;
  std::vector<int> word_;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// Group laws. Throws InputError for elements of different root systems.
WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement invert(const WeylElement& u);
RationalVector act(const WeylElement& u, const RationalVector& lambda);

/// s_i * w and w * s_i.
WeylElement left_mul_simple(int i, const WeylElement& w);
WeylElement right_mul_simple(const WeylElement& w, int i);

constexpr std::size_t kDefaultEnumerationCap = 200000;

/// Order of W from the classical formulas.
std::size_t weyl_order(const RootSystem& rs);

/// Full group by breadth-first closure, sorted by (length, word).
/// Throws CapExceeded when |W| > cap.
std::vector<WeylElement> enumerate_weyl(const RootSystemPtr& rs, std::size_t cap = kDefaultEnumerationCap);

/// Parabolic subgroup W^S generated by the simple reflections in S.
std::vector<WeylElement> enumerate_parabolic(const RootSystemPtr& rs, LeviSubset s,
                                             std::size_t cap = kDefaultEnumerationCap);

/// Longest element of W^S.
WeylElement longest_element(const RootSystemPtr& rs, LeviSubset s);

/// Minimal-length element of W^{left} w W^{right}. Characterized by
/// w^{-1}(Delta_0^{left}) > 0 and w(Delta_0^{right}) > 0.
WeylElement min_double_coset_rep(const WeylElement& w, LeviSubset left, LeviSubset right);
bool is_min_double_coset_rep(const WeylElement& w, LeviSubset left, LeviSubset right);

/// If w maps every alpha_i (i in s) to a simple root, the index set of those images.
std::optional<LeviSubset> simple_image(const WeylElement& w, LeviSubset s);

struct RelativeWeylElement {
  WeylElement element;
  LeviSubset target;
};

/// W^L(M): elements of W^L minimal in wW^M with wMw^{-1} a standard Levi of L.
/// Throws PreconditionError unless s_m is contained in s_l.
std::vector<RelativeWeylElement> W_L_of_M(const RootSystemPtr& rs, LeviSubset s_m, LeviSubset s_l);

/// w_M^L, the l_M-maximal element of W^L(M). Equal to w_0^L w_0^M.
WeylElement longest_relative(const RootSystemPtr& rs, LeviSubset s_m, LeviSubset s_l);

struct ElementarySymmetry {
  LeviSubset source;
  /// 0-based index i with alpha = (alpha_i)_M.
  int alpha = -1;
  WeylElement element;
  LeviSubset target;
};

/// s_alpha = w_M^{L_alpha} for alpha = (alpha_i)_M, where Delta_0^{L_alpha} = S + {i}.
/// Throws PreconditionError if i is in S.
ElementarySymmetry elementary_symmetry(const RootSystemPtr& rs, LeviSubset s, int i);
/// Same, for a relative root; it must be simple.
ElementarySymmetry elementary_symmetry(const RootSystemPtr& rs, LeviSubset s, const RelativeRoot& alpha);

/// Factorization of w in W(M) into elementary symmetries, in order of
/// application: w = out.back().element * ... * out.front().element, with each
/// symmetry's source equal to the previous target. At each step the smallest
/// index i outside the current Levi with w(alpha_i) < 0 is peeled off.
/// Throws PreconditionError if w is not in W(M).
std::vector<ElementarySymmetry> decompose_symmetries(const WeylElement& w, LeviSubset s);

/// l_M(w) as the length of decompose_symmetries(w, s).
int relative_length(const WeylElement& w, LeviSubset s);

/// Sign of w applied to a relative root of M (via any lift): +1 or -1.
int relative_sign(const WeylElement& w, const RelativeRoot& alpha);

/// Reduced-word serialization (1-based indices) and its inverse.
std::vector<int> to_word_json(const WeylElement& w);
WeylElement from_word_one_based(const RootSystemPtr& rs, const std::vector<int>& word);

}  // namespace twinv
