#include "twinv/rootsys.hpp"

#include "twinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace twinv {

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int c : r) h ^= std::hash<int>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

LeviSubset LeviSubset::of(const std::vector<int>& indices) {
  std::uint32_t m = 0;
  for (int i : indices) m |= 1u << i;
  return LeviSubset(m);
}

std::vector<int> LeviSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> LeviSubset::one_based() const {
  auto out = indices();
  for (auto& i : out) ++i;
  return out;
}

std::string LeviSubset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : one_based()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << "}";
  return os.str();
}

bool operator<(LeviSubset a, LeviSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

std::vector<LeviSubset> all_levis(int rank) {
  std::vector<LeviSubset> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

int root_sign(const Root& beta) {
  for (int c : beta) {
    if (c > 0) return 1;
    if (c < 0) return -1;
  }
  return 0;
}

int height(const Root& beta) {
  int h = 0;
  for (int c : beta) h += c;
  return h;
}

Root negate(Root beta) {
  for (auto& c : beta) c = -c;
  return beta;
}

bool root_in_levi(const Root& beta, LeviSubset s) {
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0 && !s.contains(static_cast<int>(i))) return false;
  return true;
}

RootSystem::RootSystem(std::string type_spec, std::vector<SimpleType> components,
                       std::vector<std::vector<int>> cartan, std::vector<int> symmetrizer,
                       std::vector<Root> positive_roots)
    : type_spec_(std::move(type_spec)),
      components_(std::move(components)),
      rank_(static_cast<int>(cartan.size())),
      cartan_(std::move(cartan)),
      symmetrizer_(std::move(symmetrizer)),
      positive_(std::move(positive_roots)),
      rho_(static_cast<std::size_t>(rank_)) {
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k], k);
  for (const auto& beta : positive_)
    for (int i = 0; i < rank_; ++i) rho_[i] += beta[i];
  rho_ *= Rational(1, 2);
}

std::optional<std::size_t> RootSystem::root_index(const Root& beta) const {
  int sg = root_sign(beta);
  if (sg == 0) return std::nullopt;
  auto it = index_.find(sg > 0 ? beta : negate(beta));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long long RootSystem::form(const Root& u, const Root& v) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += static_cast<long long>(u[i]) * v[j] * symmetrizer_[i] * cartan_[i][j];
  }
  return s;
}

Rational RootSystem::form(const RationalVector& u, const RationalVector& v) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (cartan_[i][j] != 0) s += u[i] * v[j] * symmetrizer_[i] * cartan_[i][j];
  }
  return s;
}

int RootSystem::pair_simple(const Root& v, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += v[j] * cartan_[i][j];
  return s;
}

Rational RootSystem::pair_simple(const RationalVector& v, int i) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    if (cartan_[i][j] != 0) s += v[j] * cartan_[i][j];
  return s;
}

std::vector<Rational> RootSystem::coroot(const Root& beta) const {
  // beta^vee = beta / d_beta and alpha_j^vee = alpha_j / d_j.
  long long norm2 = form(beta, beta);
  Rational d_beta(static_cast<long>(norm2), 2L);
  d_beta.canonicalize();
  std::vector<Rational> out(rank_);
  for (int j = 0; j < rank_; ++j) out[j] = Rational(beta[j] * symmetrizer_[j]) / d_beta;
  return out;
}

Rational RootSystem::pair_root_coroot(const RationalVector& lambda, const std::vector<Rational>& h) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (lambda[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (cartan_[j][i] != 0 && h[j] != 0) s += lambda[i] * h[j] * cartan_[j][i];
  }
  return s;
}

Root RootSystem::reflect(const Root& v, int i) const {
  Root out = v;
  out[i] -= pair_simple(v, i);
  return out;
}

RationalVector RootSystem::simple_root(int i) const {
  RationalVector v(static_cast<std::size_t>(rank_));
  v[i] = 1;
  return v;
}

namespace {

struct Diagram {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> d;
};

Diagram diagram_for(SimpleType t) {
  Diagram g;
  const int n = t.rank;
  g.d.assign(n, 1);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) g.edges.emplace_back(i, i + 1);
  };
  switch (t.letter) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n);
      std::fill(g.d.begin(), g.d.end() - 1, 2);
      break;
    case 'C':
      chain(n);
      g.d[n - 1] = 2;
      break;
    case 'D':
      chain(n - 1);
      g.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      g.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      g.d = {2, 2, 1, 1};
      break;
    case 'G':
      chain(2);
      g.d = {1, 3};
      break;
  }
  return g;
}

void validate_rank(SimpleType t, const std::string& token) {
  bool ok = false;
  switch (t.letter) {
    case 'A': ok = t.rank >= 1; break;
    case 'B':
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 3; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default:
      throw InputError("unknown Cartan type letter in '" + token + "'");
  }
  if (!ok) throw InputError("unsupported rank in '" + token + "'");
}

std::vector<SimpleType> parse_type_spec(const std::string& spec) {
  std::vector<SimpleType> out;
  if (spec.empty()) throw InputError("empty type spec");
  std::size_t pos = 0;
  while (true) {
    auto next = spec.find('x', pos);
    std::string token = spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (token.size() < 2 || !std::isupper(static_cast<unsigned char>(token[0])))
      throw InputError("malformed type token '" + token + "'");
    for (std::size_t k = 1; k < token.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(token[k])))
        throw InputError("malformed type token '" + token + "'");
    if (token.size() > 4) throw InputError("unsupported rank in '" + token + "'");
    SimpleType t{token[0], std::stoi(token.substr(1))};
    validate_rank(t, token);
    out.push_back(t);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<Root> close_positive_roots(const std::vector<std::vector<int>>& cartan, std::size_t limit) {
  const int r = static_cast<int>(cartan.size());
  std::vector<Root> roots;
  std::unordered_set<Root, RootHash> seen;
  std::deque<Root> queue;
  for (int i = 0; i < r; ++i) {
    Root e(r, 0);
    e[i] = 1;
    seen.insert(e);
    roots.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Root beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      int p = 0;
      for (int j = 0; j < r; ++j) p += beta[j] * cartan[i][j];
      if (p == 0) continue;
      Root gamma = beta;
      gamma[i] -= p;
      if (root_sign(gamma) <= 0) continue;
      if (seen.insert(gamma).second) {
        if (roots.size() >= limit) throw InvariantViolation("root closure does not terminate; Cartan matrix is not of finite type");
        roots.push_back(gamma);
        queue.push_back(gamma);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return roots;
}

}  // namespace

RootSystemPtr build_root_system(const std::string& type_spec) {
  auto components = parse_type_spec(type_spec);
  int rank = 0;
  for (auto t : components) rank += t.rank;
  if (rank > 31) throw InputError("total rank too large");
  std::vector<std::vector<int>> cartan(rank, std::vector<int>(rank, 0));
  std::vector<int> sym(rank, 1);
  int offset = 0;
  for (auto t : components) {
    auto g = diagram_for(t);
    for (int i = 0; i < t.rank; ++i) {
      cartan[offset + i][offset + i] = 2;
      sym[offset + i] = g.d[i];
    }
    for (auto [a, b] : g.edges) {
      int ip = -std::max(g.d[a], g.d[b]);
      cartan[offset + a][offset + b] = ip / g.d[a];
      cartan[offset + b][offset + a] = ip / g.d[b];
    }
    offset += t.rank;
  }
  auto roots = close_positive_roots(cartan, 4096);
  return std::make_shared<const RootSystem>(type_spec, std::move(components), std::move(cartan),
                                            std::move(sym), std::move(roots));
}

std::size_t classical_positive_count(const std::vector<SimpleType>& components) {
  std::size_t total = 0;
  for (auto t : components) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.letter) {
      case 'A': total += n * (n + 1) / 2; break;
      case 'B':
      case 'C': total += n * n; break;
      case 'D': total += n * (n - 1); break;
      case 'E': total += n == 6 ? 36 : n == 7 ? 63 : 120; break;
      case 'F': total += 24; break;
      case 'G': total += 6; break;
    }
  }
  return total;
}

Rational pairing(const RootSystem& rs, const RationalVector& lambda, const Root& beta) {
  if (!rs.is_root(beta)) throw InputError("pairing: argument is not a root");
  return rs.pair_root_coroot(lambda, rs.coroot(beta));
}

RationalVector project_to_levi_dual(const RootSystem& rs, const RationalVector& lambda, LeviSubset s) {
  const auto idx = s.indices();
  if (idx.empty()) return lambda;
  const std::size_t k = idx.size();
  RationalMatrix a(k, k);
  std::vector<Rational> b(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a(r, c) = rs.cartan(idx[r], idx[c]);
    b[r] = rs.pair_simple(lambda, idx[r]);
  }
  auto coeff = solve(std::move(a), std::move(b));
  RationalVector out = lambda;
  for (std::size_t c = 0; c < k; ++c) out[idx[c]] -= coeff[c];
  return out;
}

std::vector<Rational> project_coroot(const RootSystem& rs, const std::vector<Rational>& h, LeviSubset s) {
  const auto idx = s.indices();
  if (idx.empty()) return h;
  const std::size_t k = idx.size();
  RationalMatrix a(k, k);
  std::vector<Rational> b(k);
  for (std::size_t r = 0; r < k; ++r) {
    // <alpha_i, alpha_j^vee> = cartan[j][i]
    for (std::size_t c = 0; c < k; ++c) a(r, c) = rs.cartan(idx[c], idx[r]);
    Rational v = 0;
    for (int j = 0; j < rs.rank(); ++j) v += h[j] * rs.cartan(j, idx[r]);
    b[r] = v;
  }
  auto coeff = solve(std::move(a), std::move(b));
  auto out = h;
  for (std::size_t c = 0; c < k; ++c) out[idx[c]] -= coeff[c];
  return out;
}

RationalVector rho(const RootSystem& rs, LeviSubset lower, LeviSubset upper) {
  if (!lower.subset_of(upper))
    throw PreconditionError("rho: " + lower.to_string() + " is not contained in " + upper.to_string());
  RationalVector sum(static_cast<std::size_t>(rs.rank()));
  for (const auto& beta : rs.positive_roots()) {
    if (!root_in_levi(beta, upper)) continue;
    for (int i = 0; i < rs.rank(); ++i) sum[i] += beta[i];
  }
  sum *= Rational(1, 2);
  return project_to_levi_dual(rs, sum, lower);
}

RationalVector simple_restriction(const RootSystem& rs, int i, LeviSubset s) {
  return project_to_levi_dual(rs, rs.simple_root(i), s);
}

std::vector<RelativeRoot> relative_roots(const RootSystem& rs, LeviSubset s, bool strict) {
  std::vector<RelativeRoot> out;
  auto add_lift = [&](const Root& beta) {
    auto proj = project_to_levi_dual(rs, RationalVector::from_ints(beta), s);
    auto cor = project_coroot(rs, rs.coroot(beta), s);
    for (auto& rr : out) {
      if (rr.restriction == proj) {
        if (rr.coroot != cor) {
          if (strict) throw InvariantViolation("relative coroot depends on the lift at Levi " + s.to_string());
          rr.coroot_conflicts.push_back(beta);
        }
        rr.lifts.push_back(beta);
        return;
      }
    }
    RelativeRoot rr;
    rr.restriction = std::move(proj);
    rr.sign = root_sign(beta);
    rr.coroot = std::move(cor);
    rr.lifts.push_back(beta);
    out.push_back(std::move(rr));
  };
  for (const auto& beta : rs.positive_roots())
    if (!root_in_levi(beta, s)) add_lift(beta);
  const std::size_t npos = out.size();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const auto& beta = rs.positive_roots()[k];
    if (!root_in_levi(beta, s)) add_lift(negate(beta));
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if ((k < npos) != (out[k].sign > 0))
      throw InvariantViolation("relative root with lifts of both signs at Levi " + s.to_string());
  }
  std::vector<RationalVector> simple;
  for (int i = 0; i < rs.rank(); ++i) simple.push_back(s.contains(i) ? RationalVector() : simple_restriction(rs, i, s));
  for (auto& rr : out) {
    RationalVector half = Rational(1, 2) * rr.restriction;
    rr.indivisible = std::none_of(out.begin(), out.end(), [&](const RelativeRoot& o) { return o.restriction == half; });
    for (int i = 0; i < rs.rank(); ++i)
      if (!s.contains(i) && rr.restriction == simple[i]) rr.simple_index = i;
  }
  return out;
}

std::vector<RelativeRoot> positive_relative_roots(const RootSystem& rs, LeviSubset s, bool strict) {
  auto all = relative_roots(rs, s, strict);
  std::vector<RelativeRoot> out;
  for (auto& rr : all)
    if (rr.sign > 0) out.push_back(std::move(rr));
  return out;
}

}  // namespace twinv
