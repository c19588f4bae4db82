#include "twinv/serialize.hpp"

#include "twinv/errors.hpp"

#include <sstream>

namespace twinv {

namespace {

std::vector<int> parse_index_list(const std::string& text, int rank, const char* what) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError(std::string("malformed ") + what + " entry '" + tok + "'");
    }
    if (v < 1 || v > rank) throw InputError(std::string(what) + " index " + std::to_string(v) + " out of range 1.." + std::to_string(rank));
    out.push_back(v);
  }
  return out;
}

}  // namespace

Json to_json(LeviSubset s) { return Json(s.one_based()); }

Json to_json(const WeylElement& w) { return Json(w.word_one_based()); }

Json to_json(const Vertex& v) {
  Json j;
  j["levi"] = to_json(v.levi);
  j["xi"] = to_json(v.xi);
  return j;
}

Json to_json(const RationalVector& v) { return Json(v.to_pq_strings()); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_pq_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LeviSubset levi_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw InputError("Levi must be a JSON array");
  std::vector<int> idx;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("Levi entries must be integers");
    int v = e.get<int>();
    if (v < 1 || v > rank) throw InputError("Levi index out of range");
    idx.push_back(v - 1);
  }
  return LeviSubset::of(idx);
}

WeylElement weyl_from_json(const RootSystemPtr& rs, const Json& j) {
  if (!j.is_array()) throw InputError("Weyl element must be a JSON array of simple indices");
  std::vector<int> word;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("word letters must be integers");
    word.push_back(e.get<int>());
  }
  return from_word_one_based(rs, word);
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be a JSON array");
  std::vector<Rational> c;
  try {
    for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
  } catch (const std::exception& e) {
    throw InputError(std::string("bad vector entry: ") + e.what());
  }
  return RationalVector(std::move(c));
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be a JSON array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("ragged matrix");
    auto row = vector_from_json(j[r]);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Vertex vertex_from_json(const DiagramInvolution& theta, const Json& j) {
  if (!j.is_object() || !j.contains("levi") || !j.contains("xi")) throw InputError("vertex must be {\"levi\":[...], \"xi\":[...]}");
  const auto& rs = theta.system();
  return make_vertex(theta, levi_from_json(j["levi"], rs->rank()), weyl_from_json(rs, j["xi"]));
}

LeviSubset parse_levi(const std::string& text, int rank) {
  std::vector<int> idx;
  for (int v : parse_index_list(text, rank, "Levi")) idx.push_back(v - 1);
  return LeviSubset::of(idx);
}

WeylElement parse_word(const RootSystemPtr& rs, const std::string& text) {
  return from_word_one_based(rs, parse_index_list(text, rs->rank(), "word"));
}

}  // namespace twinv
