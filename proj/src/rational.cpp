#include "twinv/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace twinv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_pq_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RationalVector RationalVector::from_ints(const std::vector<int>& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool RationalVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string RationalVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& c = coords_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1) os << mag.get_str() << " ";
    os << "a" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> RationalVector::to_pq_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& c : coords_) out.push_back(to_pq_string(c));
  return out;
}

RationalVector parse_rational_vector(std::string_view text) {
  std::vector<Rational> coords;
  if (trim(text).empty()) return RationalVector(std::move(coords));
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    coords.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalVector(std::move(coords));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// Gaussian elimination on rows; returns the indices of pivot rows in input order.
std::vector<std::size_t> pivot_rows(const std::vector<RationalVector>& vectors) {
  std::vector<std::size_t> kept;
  std::vector<RationalVector> echelon;
  std::vector<std::size_t> pivots;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    RationalVector v = vectors[idx];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const auto p = pivots[e];
      if (v[p] != 0) {
        Rational f = v[p] / echelon[e][p];
        v -= f * echelon[e];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    echelon.push_back(std::move(v));
    pivots.push_back(p);
    kept.push_back(idx);
  }
  return kept;
}

}  // namespace

std::size_t span_rank(const std::vector<RationalVector>& vectors) {
  return pivot_rows(vectors).size();
}

std::vector<RationalVector> independent_subset(const std::vector<RationalVector>& vectors) {
  std::vector<RationalVector> out;
  for (auto i : pivot_rows(vectors)) out.push_back(vectors[i]);
  return out;
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
  auto with = basis;
  with.push_back(v);
  return span_rank(with) == span_rank(basis);
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  auto r = span_rank(a);
  if (r != span_rank(b)) return false;
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both) == r;
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("solve: singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

}  // namespace twinv
