#include "twinv/weyl.hpp"

#include "twinv/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace twinv {

namespace {

using Images = std::vector<int>;

int col_sign(const Images& im, int rank, int i) {
  for (int j = 0; j < rank; ++j) {
    int c = im[i * rank + j];
    if (c > 0) return 1;
    if (c < 0) return -1;
  }
  return 0;
}

// w -> w s_i: column j becomes w(alpha_j) - cartan[i][j] w(alpha_i).
void right_simple_inplace(Images& im, const RootSystem& rs, int i) {
  const int r = rs.rank();
  for (int j = 0; j < r; ++j) {
    if (j == i) continue;
    int c = rs.cartan(i, j);
    if (c == 0) continue;
    for (int k = 0; k < r; ++k) im[j * r + k] -= c * im[i * r + k];
  }
  for (int k = 0; k < r; ++k) im[i * r + k] = -im[i * r + k];
}

// w -> s_i w: reflect every column.
void left_simple_inplace(Images& im, const RootSystem& rs, int i) {
  const int r = rs.rank();
  for (int j = 0; j < r; ++j) {
    int p = 0;
    for (int k = 0; k < r; ++k) p += im[j * r + k] * rs.cartan(i, k);
    im[j * r + i] -= p;
  }
}

Images identity_images(int r) {
  Images im(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) im[i * r + i] = 1;
  return im;
}

Images inverse_images(const Images& im, const RootSystem& rs) {
  // Strip right descents: w = s_{r_k} ... s_{r_1}, so w^{-1} = s_{r_1} ... s_{r_k}.
  const int r = rs.rank();
  Images cur = im;
  Images inv = identity_images(r);
  while (true) {
    int d = -1;
    for (int i = 0; i < r; ++i)
      if (col_sign(cur, r, i) < 0) {
        d = i;
        break;
      }
    if (d < 0) break;
    right_simple_inplace(cur, rs, d);
    right_simple_inplace(inv, rs, d);
  }
  return inv;
}

void require_same(const WeylElement& u, const WeylElement& v) {
  if (u.system() != v.system()) throw InputError("Weyl elements belong to different root systems");
}

}  // namespace

WeylElement::WeylElement(RootSystemPtr rs, std::vector<int> images) : rs_(std::move(rs)), images_(std::move(images)) {
  const int r = rs_->rank();
  // Greedy smallest left descent on w, tracked through w^{-1}: s_i is a left
  // descent of w iff w^{-1}(alpha_i) < 0.
  Images inv = inverse_images(images_, *rs_);
  while (true) {
    int d = -1;
    for (int i = 0; i < r; ++i)
      if (col_sign(inv, r, i) < 0) {
        d = i;
        break;
      }
    if (d < 0) break;
    word_.push_back(d);
    right_simple_inplace(inv, *rs_, d);
  }
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  const int r = rs->rank();
  return WeylElement(std::move(rs), identity_images(r));
}

WeylElement WeylElement::simple_reflection(RootSystemPtr rs, int i) {
  if (i < 0 || i >= rs->rank()) throw InputError("simple reflection index out of range");
  Images im = identity_images(rs->rank());
  right_simple_inplace(im, *rs, i);
  return WeylElement(std::move(rs), std::move(im));
}

WeylElement WeylElement::from_word(RootSystemPtr rs, const std::vector<int>& word) {
  Images im = identity_images(rs->rank());
  for (int i : word) {
    if (i < 0 || i >= rs->rank()) throw InputError("word letter out of range");
    right_simple_inplace(im, *rs, i);
  }
  return WeylElement(std::move(rs), std::move(im));
}

WeylElement WeylElement::from_images(RootSystemPtr rs, std::vector<int> images) {
  const int r = rs->rank();
  if (images.size() != static_cast<std::size_t>(r * r)) throw InputError("image list has wrong size");
  std::vector<Root> cols;
  for (int i = 0; i < r; ++i) {
    Root c(images.begin() + i * r, images.begin() + (i + 1) * r);
    if (!rs->is_root(c)) throw InputError("image of a simple root is not a root");
    cols.push_back(std::move(c));
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Root ei(r, 0), ej(r, 0);
      ei[i] = 1;
      ej[j] = 1;
      if (rs->form(cols[i], cols[j]) != rs->form(ei, ej))
        throw InputError("images do not preserve the Cartan form");
    }
  // An isometry permuting roots lies in W iff it sends the positive system to
  // the positive system of some chamber; stripping descents reaches the
  // identity exactly in that case.
  Images cur = images;
  for (std::size_t steps = 0; steps <= rs->positive_roots().size(); ++steps) {
    int d = -1;
    for (int i = 0; i < r; ++i)
      if (col_sign(cur, r, i) < 0) {
        d = i;
        break;
      }
    if (d < 0) break;
    right_simple_inplace(cur, *rs, d);
  }
  if (cur != identity_images(r)) throw InputError("images define a diagram automorphism outside W");
  return WeylElement(std::move(rs), std::move(images));
}

std::vector<int> WeylElement::word_one_based() const {
  auto w = word_;
  for (auto& i : w) ++i;
  return w;
}

Root WeylElement::image(int i) const {
  const int r = rank();
  return Root(images_.begin() + i * r, images_.begin() + (i + 1) * r);
}

Root WeylElement::apply(const Root& v) const {
  const int r = rank();
  Root out(r, 0);
  for (int i = 0; i < r; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < r; ++j) out[j] += v[i] * images_[i * r + j];
  }
  return out;
}

RationalVector WeylElement::apply(const RationalVector& v) const {
  const int r = rank();
  if (v.size() != static_cast<std::size_t>(r)) throw InputError("vector has wrong dimension");
  RationalVector out(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < r; ++j)
      if (images_[i * r + j] != 0) out[j] += v[i] * images_[i * r + j];
  }
  return out;
}

RationalMatrix WeylElement::matrix() const {
  const int r = rank();
  RationalMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(j, i) = images_[i * r + j];
  return m;
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word_.size(); ++k) os << (k ? " " : "") << "s" << (word_[k] + 1);
  return os.str();
}

bool operator<(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

std::size_t WeylHash::operator()(const WeylElement& w) const noexcept { return RootHash{}(w.images()); }

WeylElement WeylElement::from_trusted_images(RootSystemPtr rs, std::vector<int> images) {
  return WeylElement(std::move(rs), std::move(images));
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  require_same(u, v);
  const int r = u.rank();
  Images im(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i) {
    Root c = u.apply(v.image(i));
    std::copy(c.begin(), c.end(), im.begin() + i * r);
  }
  return WeylElement::from_trusted_images(u.system(), std::move(im));
}

WeylElement invert(const WeylElement& u) {
  return WeylElement::from_trusted_images(u.system(), inverse_images(u.images(), *u.system()));
}

RationalVector act(const WeylElement& u, const RationalVector& lambda) { return u.apply(lambda); }

WeylElement left_mul_simple(int i, const WeylElement& w) {
  Images im = w.images();
  left_simple_inplace(im, *w.system(), i);
  return WeylElement::from_trusted_images(w.system(), std::move(im));
}

WeylElement right_mul_simple(const WeylElement& w, int i) {
  Images im = w.images();
  right_simple_inplace(im, *w.system(), i);
  return WeylElement::from_trusted_images(w.system(), std::move(im));
}

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<WeylElement> closure(const RootSystemPtr& rs, LeviSubset gens, std::size_t cap) {
  const int r = rs->rank();
  std::unordered_map<Images, std::size_t, RootHash> seen;
  std::vector<Images> order;
  Images id = identity_images(r);
  seen.emplace(id, 0);
  order.push_back(id);
  const auto gen_idx = gens.indices();
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i : gen_idx) {
      Images next = order[head];
      right_simple_inplace(next, *rs, i);
      if (seen.count(next)) continue;
      if (order.size() >= cap) throw CapExceeded("Weyl group enumeration exceeded cap " + std::to_string(cap));
      seen.emplace(next, order.size());
      order.push_back(std::move(next));
    }
  }
  std::vector<WeylElement> out;
  out.reserve(order.size());
  for (auto& im : order) out.push_back(WeylElement::from_trusted_images(rs, std::move(im)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t weyl_order(const RootSystem& rs) {
  std::size_t total = 1;
  for (auto t : rs.components()) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.letter) {
      case 'A': total *= factorial(n + 1); break;
      case 'B':
      case 'C': total *= (std::size_t{1} << n) * factorial(n); break;
      case 'D': total *= (std::size_t{1} << (n - 1)) * factorial(n); break;
      case 'E': total *= n == 6 ? 51840 : n == 7 ? 2903040 : 696729600; break;
      case 'F': total *= 1152; break;
      case 'G': total *= 12; break;
    }
  }
  return total;
}

std::vector<WeylElement> enumerate_weyl(const RootSystemPtr& rs, std::size_t cap) {
  if (!rs->components().empty() && weyl_order(*rs) > cap)
    throw CapExceeded("|W(" + rs->type_spec() + ")| = " + std::to_string(weyl_order(*rs)) + " exceeds cap " +
                      std::to_string(cap));
  return closure(rs, rs->full_levi(), cap);
}

std::vector<WeylElement> enumerate_parabolic(const RootSystemPtr& rs, LeviSubset s, std::size_t cap) {
  return closure(rs, s, cap);
}

WeylElement longest_element(const RootSystemPtr& rs, LeviSubset s) {
  const int r = rs->rank();
  Images im = identity_images(r);
  const auto idx = s.indices();
  while (true) {
    int a = -1;
    for (int i : idx)
      if (col_sign(im, r, i) > 0) {
        a = i;
        break;
      }
    if (a < 0) break;
    right_simple_inplace(im, *rs, a);
  }
  return WeylElement::from_trusted_images(rs, std::move(im));
}

bool is_min_double_coset_rep(const WeylElement& w, LeviSubset left, LeviSubset right) {
  const int r = w.rank();
  for (int j : right.indices())
    if (col_sign(w.images(), r, j) < 0) return false;
  if (left.empty()) return true;
  Images inv = inverse_images(w.images(), *w.system());
  for (int i : left.indices())
    if (col_sign(inv, r, i) < 0) return false;
  return true;
}

WeylElement min_double_coset_rep(const WeylElement& w, LeviSubset left, LeviSubset right) {
  const auto& rs = *w.system();
  const int r = w.rank();
  Images im = w.images();
  Images inv = inverse_images(im, rs);
  const auto li = left.indices();
  const auto ri = right.indices();
  while (true) {
    bool moved = false;
    for (int i : li)
      if (col_sign(inv, r, i) < 0) {
        // s_i w, and (s_i w)^{-1} = w^{-1} s_i
        left_simple_inplace(im, rs, i);
        right_simple_inplace(inv, rs, i);
        moved = true;
        break;
      }
    if (moved) continue;
    for (int j : ri)
      if (col_sign(im, r, j) < 0) {
        right_simple_inplace(im, rs, j);
        left_simple_inplace(inv, rs, j);
        moved = true;
        break;
      }
    if (!moved) break;
  }
  return WeylElement::from_trusted_images(w.system(), std::move(im));
}

std::optional<LeviSubset> simple_image(const WeylElement& w, LeviSubset s) {
  const int r = w.rank();
  std::uint32_t mask = 0;
  for (int i : s.indices()) {
    int hit = -1;
    for (int j = 0; j < r; ++j) {
      int c = w.images()[i * r + j];
      if (c == 0) continue;
      if (c != 1 || hit >= 0) return std::nullopt;
      hit = j;
    }
    if (hit < 0) return std::nullopt;
    mask |= 1u << hit;
  }
  return LeviSubset(mask);
}

std::vector<RelativeWeylElement> W_L_of_M(const RootSystemPtr& rs, LeviSubset s_m, LeviSubset s_l) {
  if (!s_m.subset_of(s_l))
    throw PreconditionError("W_L_of_M: " + s_m.to_string() + " is not contained in " + s_l.to_string());
  std::vector<RelativeWeylElement> out;
  for (auto& w : enumerate_parabolic(rs, s_l)) {
    auto target = simple_image(w, s_m);
    if (!target || !target->subset_of(s_l)) continue;
    out.push_back({std::move(w), *target});
  }
  return out;
}

WeylElement longest_relative(const RootSystemPtr& rs, LeviSubset s_m, LeviSubset s_l) {
  if (!s_m.subset_of(s_l))
    throw PreconditionError("longest_relative: " + s_m.to_string() + " is not contained in " + s_l.to_string());
  return multiply(longest_element(rs, s_l), longest_element(rs, s_m));
}

ElementarySymmetry elementary_symmetry(const RootSystemPtr& rs, LeviSubset s, int i) {
  if (i < 0 || i >= rs->rank() || s.contains(i))
    throw PreconditionError("elementary_symmetry: alpha_" + std::to_string(i + 1) +
                            " does not restrict to a simple relative root of " + s.to_string());
  auto w = longest_relative(rs, s, s.with(i));
  auto target = simple_image(w, s);
  if (!target) throw InvariantViolation("elementary symmetry does not conjugate the Levi to a standard one");
  return {s, i, std::move(w), *target};
}

ElementarySymmetry elementary_symmetry(const RootSystemPtr& rs, LeviSubset s, const RelativeRoot& alpha) {
  if (alpha.simple_index < 0) throw PreconditionError("elementary_symmetry: relative root is not simple");
  return elementary_symmetry(rs, s, alpha.simple_index);
}

std::vector<ElementarySymmetry> decompose_symmetries(const WeylElement& w, LeviSubset s) {
  const auto& rs = w.system();
  auto target = simple_image(w, s);
  if (!target) throw PreconditionError("decompose_symmetries: " + w.to_string() + " is not in W(M) for M = " + s.to_string());
  std::vector<ElementarySymmetry> out;
  WeylElement cur = w;
  LeviSubset levi = s;
  const int r = w.rank();
  while (!cur.is_identity()) {
    int pick = -1;
    for (int i = 0; i < r; ++i)
      if (!levi.contains(i) && col_sign(cur.images(), r, i) < 0) {
        pick = i;
        break;
      }
    if (pick < 0) throw InvariantViolation("decompose_symmetries: no negative simple relative root for " + cur.to_string());
    auto sym = elementary_symmetry(rs, levi, pick);
    cur = multiply(cur, invert(sym.element));
    levi = sym.target;
    out.push_back(std::move(sym));
  }
  return out;
}

int relative_length(const WeylElement& w, LeviSubset s) { return static_cast<int>(decompose_symmetries(w, s).size()); }

int relative_sign(const WeylElement& w, const RelativeRoot& alpha) { return root_sign(w.apply(alpha.lifts.front())); }

std::vector<int> to_word_json(const WeylElement& w) { return w.word_one_based(); }

WeylElement from_word_one_based(const RootSystemPtr& rs, const std::vector<int>& word) {
  std::vector<int> z;
  z.reserve(word.size());
  for (int i : word) {
    if (i < 1 || i > rs->rank()) throw InputError("word letter " + std::to_string(i) + " out of range");
    z.push_back(i - 1);
  }
  return WeylElement::from_word(rs, z);
}

}  // namespace twinv
