#include "voa/core/json_io.hpp"

#include "voa/core/errors.hpp"

namespace voa {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const Series& s) {
  Json j;
  if (s.exact()) {
    int lo = s.is_zero() ? 0 : s.valuation();
    j["valuation"] = lo;
    j["truncation"] = nullptr;
    Json coeffs = Json::array();
    for (int k = lo; !s.is_zero() && k <= s.last_exponent(); ++k) coeffs.push_back(to_string(s.coeff(k)));
    j["coeffs"] = coeffs;
    return j;
  }
  j["valuation"] = s.valuation();
  j["truncation"] = s.truncation();
  Json coeffs = Json::array();
  for (const auto& c : s.window_coeffs()) coeffs.push_back(to_string(c));
  j["coeffs"] = coeffs;
  return j;
}

Json to_json(const LogSeries& s) {
  Json branches = Json::array();
  for (const auto& [lambda, b] : s.branches()) {
    Json entry;
    entry["exponent"] = to_string(lambda);
    Json logs = Json::array();
    for (const auto& c : b) logs.push_back(to_json(c));
    entry["log_powers"] = logs;
    branches.push_back(entry);
  }
  return branches;
}

Json to_json(const SparseRationalMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (const auto& [k, v] : m.entries()) entries.push_back(Json::array({k.first, k.second, to_string(v)}));
  j["entries"] = entries;
  return j;
}

Json to_json(const QMatrix& m) { return to_json(SparseRationalMatrix(m)); }

Json to_json(const Matrix<Poly>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const QVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

Series series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("valuation") || !j.contains("coeffs"))
    throw ParseError("series needs valuation and coeffs");
  int v = j.at("valuation").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  if (!j.contains("truncation") || j.at("truncation").is_null()) return Series(v, std::move(coeffs));
  return Series::from_window(v, j.at("truncation").get<int>(), std::move(coeffs));
}

SparseRationalMatrix sparse_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sparse matrix must be an object");
  SparseRationalMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [i, j, \"p/q\"]");
    m.add_to(e[0].get<std::size_t>(), e[1].get<std::size_t>(), rational_from_json(e[2]));
  }
  return m;
}

QMatrix matrix_from_json(const Json& j) {
  if (j.is_object()) return sparse_from_json(j).dense();
  if (!j.is_array()) throw ParseError("matrix must be an object or a list of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

QVector vector_from_json(const Json& j) {
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace voa
