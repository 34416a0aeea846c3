#pragma once

#include <json.hpp>

#include "voa/core/log_series.hpp"
#include "voa/core/matrix.hpp"
#include "voa/core/mpoly.hpp"
#include "voa/core/poly.hpp"
#include "voa/core/series.hpp"
#include "voa/core/sparse_matrix.hpp"

namespace voa {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings, never as floats.
Json to_json(const Rational& x);
Json to_json(const Poly& p);  // coefficient list, constant term first
Json to_json(const Series& s);
Json to_json(const LogSeries& s);
Json to_json(const SparseRationalMatrix& m);
Json to_json(const QMatrix& m);
Json to_json(const Matrix<Poly>& m);
Json to_json(const QVector& v);

Rational rational_from_json(const Json& j);
Series series_from_json(const Json& j);
SparseRationalMatrix sparse_from_json(const Json& j);
/// Accepts either the sparse object form or a dense list of rows.
QMatrix matrix_from_json(const Json& j);
QVector vector_from_json(const Json& j);

}  // namespace voa
