#include "twinv/twist.hpp"

#include "twinv/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace twinv {

DiagramInvolution::DiagramInvolution(RootSystemPtr rs, std::vector<int> perm)
    : rs_(std::move(rs)), perm_(std::move(perm)) {
  const int r = rs_->rank();
  if (static_cast<int>(perm_.size()) != r)
    throw InputError("involution has " + std::to_string(perm_.size()) + " entries, expected rank " + std::to_string(r));
  for (int i = 0; i < r; ++i)
    if (perm_[i] < 0 || perm_[i] >= r) throw InputError("involution entry out of range");
  for (int i = 0; i < r; ++i)
    if (perm_[perm_[i]] != i) throw InputError("involution does not square to the identity");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rs_->cartan(perm_[i], perm_[j]) != rs_->cartan(i, j))
        throw InputError("involution does not preserve the Cartan matrix");
}

DiagramInvolution DiagramInvolution::identity(RootSystemPtr rs) {
  std::vector<int> p(rs->rank());
  for (int i = 0; i < rs->rank(); ++i) p[i] = i;
  return DiagramInvolution(std::move(rs), std::move(p));
}

DiagramInvolution DiagramInvolution::parse(RootSystemPtr rs, const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) return identity(std::move(rs));
  std::vector<int> p;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
      p.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw InputError("malformed involution entry '" + tok + "'");
    }
  }
  return DiagramInvolution(std::move(rs), std::move(p));
}

std::vector<int> DiagramInvolution::one_based() const {
  auto p = perm_;
  for (auto& i : p) ++i;
  return p;
}

bool DiagramInvolution::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

Root DiagramInvolution::apply(const Root& beta) const {
  Root out(beta.size(), 0);
  for (std::size_t i = 0; i < beta.size(); ++i) out[perm_[i]] = beta[i];
  return out;
}

RationalVector DiagramInvolution::apply(const RationalVector& lambda) const {
  RationalVector out(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) out[perm_[i]] = lambda[i];
  return out;
}

LeviSubset DiagramInvolution::apply(LeviSubset s) const {
  std::uint32_t m = 0;
  for (int i : s.indices()) m |= 1u << perm_[i];
  return LeviSubset(m);
}

WeylElement DiagramInvolution::apply(const WeylElement& w) const {
  const int r = rs_->rank();
  std::vector<int> im(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i) {
    Root c = apply(w.image(perm_[i]));
    std::copy(c.begin(), c.end(), im.begin() + i * r);
  }
  return WeylElement::from_trusted_images(w.system(), std::move(im));
}

std::string DiagramInvolution::to_string() const {
  std::ostringstream os;
  auto p = one_based();
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

std::vector<DiagramInvolution> all_diagram_involutions(const RootSystemPtr& rs) {
  const int r = rs->rank();
  std::vector<std::vector<int>> perms;
  std::vector<int> p(r, -1);
  std::function<void(int)> rec = [&](int i) {
    while (i < r && p[i] >= 0) ++i;
    if (i == r) {
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          if (rs->cartan(p[a], p[b]) != rs->cartan(a, b)) return;
      perms.push_back(p);
      return;
    }
    p[i] = i;
    rec(i + 1);
    for (int j = i + 1; j < r; ++j) {
      if (p[j] >= 0 || rs->cartan(i, i) != rs->cartan(j, j) || rs->symmetrizer()[i] != rs->symmetrizer()[j]) continue;
      p[i] = j;
      p[j] = i;
      rec(i + 1);
      p[j] = -1;
    }
    p[i] = -1;
  };
  rec(0);
  std::sort(perms.begin(), perms.end());
  std::vector<DiagramInvolution> out;
  for (auto& q : perms) out.emplace_back(rs, std::move(q));
  return out;
}

bool is_twisted_involution(const DiagramInvolution& theta, const WeylElement& xi) {
  // theta(xi) = xi^{-1}  <=>  theta(xi) xi = e
  return multiply(theta.apply(xi), xi).is_identity();
}

std::vector<WeylElement> enumerate_twisted(const DiagramInvolution& theta, std::size_t cap) {
  std::vector<WeylElement> out;
  for (auto& w : enumerate_weyl(theta.system(), cap))
    if (is_twisted_involution(theta, w)) out.push_back(std::move(w));
  return out;
}

bool operator<(const Vertex& a, const Vertex& b) {
  if (!(a.levi == b.levi)) return a.levi < b.levi;
  return a.xi < b.xi;
}

std::string Vertex::to_string() const { return "(" + levi.to_string() + " | " + xi.to_string() + ")"; }

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  return WeylHash{}(v.xi) * 31u + v.levi.mask();
}

std::optional<std::string> vertex_violation(const DiagramInvolution& theta, LeviSubset s, const WeylElement& xi) {
  if (xi.system() != theta.system()) return "xi and theta belong to different root systems";
  if (!s.subset_of(theta.system()->full_levi())) return "Levi index out of range";
  if (!is_twisted_involution(theta, xi)) return "twisted involution: theta(xi) != xi^-1";
  auto img = simple_image(xi, theta.apply(s));
  if (!img || !(*img == s)) return "admissibility: xi does not map Delta_0^{theta S} onto Delta_0^S";
  if (!is_min_double_coset_rep(xi, s, theta.apply(s)))
    return "double coset: xi is not minimal in W^S xi W^{theta S}";
  return std::nullopt;
}

Vertex make_vertex(const DiagramInvolution& theta, LeviSubset s, const WeylElement& xi) {
  if (auto why = vertex_violation(theta, s, xi)) throw InputError("invalid vertex " + s.to_string() + ", " + xi.to_string() + ": " + *why);
  return Vertex{s, xi};
}

std::vector<Vertex> enumerate_admissible(const DiagramInvolution& theta, LeviSubset s, std::size_t cap) {
  return enumerate_admissible(theta, s, enumerate_twisted(theta, cap));
}

std::vector<Vertex> enumerate_admissible(const DiagramInvolution& theta, LeviSubset s,
                                         const std::vector<WeylElement>& twisted) {
  std::vector<Vertex> out;
  const LeviSubset ts = theta.apply(s);
  for (const auto& xi : twisted) {
    auto img = simple_image(xi, ts);
    if (!img || !(*img == s)) continue;
    if (!is_min_double_coset_rep(xi, s, ts)) continue;
    out.push_back(Vertex{s, xi});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Root xi_theta(const DiagramInvolution& theta, const Vertex& v, const Root& beta) {
  return v.xi.apply(theta.apply(beta));
}

RationalVector xi_theta(const DiagramInvolution& theta, const Vertex& v, const RationalVector& lambda) {
  return v.xi.apply(theta.apply(lambda));
}

namespace {

// Projections to a_M^* agree iff the coordinates outside S agree.
bool same_outside(const Root& a, const Root& b, LeviSubset s, int sign_b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!s.contains(static_cast<int>(k)) && a[k] != sign_b * b[k]) return false;
  return true;
}

}  // namespace

SimpleMove classify_simple(const DiagramInvolution& theta, const Vertex& v, int i) {
  const int r = theta.system()->rank();
  Root a(r, 0);
  a[i] = 1;
  Root g = xi_theta(theta, v, a);
  if (same_outside(g, a, v.levi, 1)) return SimpleMove::Fixed;
  if (same_outside(g, a, v.levi, -1)) return SimpleMove::Negated;
  return root_sign(g) > 0 ? SimpleMove::Positive : SimpleMove::Negative;
}

bool satisfies_maximal_definition(const DiagramInvolution& theta, const Vertex& v, LeviSubset l) {
  const auto& rs = theta.system();
  if (!v.levi.subset_of(l)) return false;
  if (!(v.xi == longest_relative(rs, theta.apply(l), rs->full_levi()))) return false;
  for (int i : l.indices())
    if (!v.levi.contains(i) && classify_simple(theta, v, i) != SimpleMove::Fixed) return false;
  return true;
}

std::optional<LeviSubset> find_maximal_definition_levi(const DiagramInvolution& theta, const Vertex& v) {
  const int r = theta.system()->rank();
  std::optional<LeviSubset> found;
  for (std::uint32_t m = 0; m < (1u << r); ++m) {
    LeviSubset l(m);
    if (!v.levi.subset_of(l)) continue;
    if (satisfies_maximal_definition(theta, v, l)) {
      if (found) throw InvariantViolation("maximal twisted involution " + v.to_string() + " admits two Levis L");
      found = l;
    }
  }
  return found;
}

MaximalityReport is_maximal(const DiagramInvolution& theta, const Vertex& v) {
  const int r = theta.system()->rank();
  MaximalityReport rep;
  LeviSubset l = v.levi;
  for (int i = 0; i < r; ++i) {
    if (v.levi.contains(i)) continue;
    auto mv = classify_simple(theta, v, i);
    if (mv == SimpleMove::Positive && !rep.witness) rep.witness = i;
    if (mv == SimpleMove::Fixed) l = l.with(i);
  }
  rep.maximal = !rep.witness.has_value();
  const bool def = satisfies_maximal_definition(theta, v, l);
  if (def != rep.maximal)
    throw InvariantViolation("maximality criteria disagree at " + v.to_string() + " with L = " + l.to_string());
  if (rep.maximal) rep.levi_l = l;
  return rep;
}

LeviSubset levi_L(const DiagramInvolution& theta, const Vertex& v) {
  auto rep = is_maximal(theta, v);
  if (!rep.maximal) throw PreconditionError("levi_L: vertex " + v.to_string() + " is not maximal");
  return *rep.levi_l;
}

std::vector<RationalVector> levi_dual_basis(const RootSystem& rs, LeviSubset s) {
  std::vector<RationalVector> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (!s.contains(i)) out.push_back(simple_restriction(rs, i, s));
  return out;
}

RationalMatrix xi_theta_matrix(const DiagramInvolution& theta, const Vertex& v) {
  const int r = theta.system()->rank();
  std::vector<int> outside;
  for (int i = 0; i < r; ++i)
    if (!v.levi.contains(i)) outside.push_back(i);
  const std::size_t k = outside.size();
  RationalMatrix m(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    Root a(r, 0);
    a[outside[c]] = 1;
    Root g = xi_theta(theta, v, a);
    for (std::size_t row = 0; row < k; ++row) m(row, c) = g[outside[row]];
  }
  return m;
}

EigenSplit eigen_split_on(const DiagramInvolution& theta, const Vertex& v, LeviSubset l) {
  EigenSplit out;
  std::vector<RationalVector> plus, minus;
  for (const auto& b : levi_dual_basis(*theta.system(), l)) {
    auto tb = xi_theta(theta, v, b);
    plus.push_back(b + tb);
    minus.push_back(b - tb);
  }
  out.plus = independent_subset(plus);
  out.minus = independent_subset(minus);
  return out;
}

EigenSplit eigen_split(const DiagramInvolution& theta, const Vertex& v) { return eigen_split_on(theta, v, v.levi); }

}  // namespace twinv
