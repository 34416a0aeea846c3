#include "voa/hodge/connection.hpp"

#include <algorithm>

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"

namespace voa::hodge {

FilteredConnection FilteredConnection::standard_flag(const ConnectionMatrix& gamma) {
  FilteredConnection fc;
  fc.gamma = gamma;
  fc.basis = Matrix<Series>::identity(gamma.rows());
  for (std::size_t i = 0; i < gamma.rows(); ++i) fc.degrees.push_back(static_cast<int>(gamma.rows() - 1 - i));
  return fc;
}

std::vector<std::vector<Series>> FilteredConnection::frame(int p) const {
  std::vector<std::vector<Series>> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] >= p) out.push_back(basis.col(i));
  return out;
}

Json FilteredConnection::to_json() const {
  Json j;
  j["gamma"] = voa::to_json(gamma);
  j["basis"] = voa::to_json(basis.transpose());
  j["degrees"] = degrees;
  if (window) j["window"] = *window;
  return j;
}

FilteredConnection FilteredConnection::from_json(const Json& j) {
  ConnectionMatrix gamma = series_matrix_from_json(j.at("gamma"));
  if (!gamma.square()) throw ShapeError("connection matrix must be square");
  FilteredConnection fc;
  if (!j.contains("basis") || j.at("basis") == "standard") {
    fc = standard_flag(gamma);
  } else {
    fc.gamma = gamma;
    fc.basis = series_matrix_from_json(j.at("basis")).transpose();
    fc.degrees = j.at("degrees").get<std::vector<int>>();
  }
  if (fc.basis.rows() != gamma.rows() || fc.basis.cols() != gamma.rows() || fc.degrees.size() != gamma.rows())
    throw ShapeError("frame must be a basis with one degree per vector");
  if (j.contains("window")) fc.window = j.at("window").get<int>();
  return fc;
}

Json GriffithsReport::to_json() const {
  Json j;
  j["ok"] = ok;
  if (!ok) {
    j["p"] = p;
    j["vector"] = vector;
    j["offending_basis_vector"] = offending;
    j["coefficient"] = coefficient;
  }
  return j;
}

Json StrictnessReport::to_json() const {
  Json j;
  j["strict"] = strict;
  j["oper_type"] = oper_type;
  if (witness) j["witness"] = *witness;
  if (!reason.empty()) j["reason"] = reason;
  Json maps = Json::array();
  for (const auto& [p, m] : graded_maps) {
    Json e;
    e["p"] = p;
    e["map"] = voa::to_json(m);
    maps.push_back(e);
  }
  j["graded_maps"] = maps;
  return j;
}

namespace {

int window_of(const FilteredConnection& fc) {
  if (fc.window) return *fc.window;
  int w = Series::kExact;
  for (std::size_t i = 0; i < fc.rank(); ++i)
    for (std::size_t j = 0; j < fc.rank(); ++j) {
      w = std::min(w, fc.gamma(i, j).precision());
      if (!fc.basis(i, j).exact()) w = std::min(w, fc.basis(i, j).precision() - 1);
    }
  return w;
}

/// Coordinates of nabla b_i in the frame: column i of B^-1 (B' + gamma B).
Matrix<Series> frame_coordinates(const FilteredConnection& fc) {
  const std::size_t n = fc.rank();
  if (fc.basis.rows() != n || fc.basis.cols() != n || fc.degrees.size() != n)
    throw ShapeError("frame must be a basis with one degree per vector");
  const int w = window_of(fc);
  Matrix<Series> d = fc.basis.map([](const Series& s) { return s.derivative(); }) + fc.gamma * fc.basis;
  return gauge_inverse(fc.basis, w >= Series::kExact ? std::nullopt : std::optional<int>(w + 2 * static_cast<int>(n) + 2)) * d;
}

bool vanishes(const Series& s, int window) {
  if (!s.is_zero()) return false;
  if (s.precision() < window)
    throw PrecisionError("coefficient known only to O(t^" + std::to_string(s.precision()) + "), cannot decide membership");
  return true;
}

}  // namespace

GriffithsReport griffiths_check(const FilteredConnection& fc) {
  GriffithsReport r;
  Matrix<Series> c = frame_coordinates(fc);
  const int w = window_of(fc);
  std::vector<std::size_t> order(fc.rank());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fc.degrees[a] > fc.degrees[b]; });
  for (std::size_t i : order) {
    const int p = fc.degrees[i];
    for (std::size_t j = 0; j < fc.rank(); ++j) {
      if (fc.degrees[j] >= p - 1) continue;
      if (!vanishes(c(j, i), w)) {
        r.ok = false;
        r.p = p;
        r.vector = i;
        r.offending = j;
        r.coefficient = c(j, i).to_string();
        return r;
      }
    }
  }
  return r;
}

StrictnessReport strictness_check(const FilteredConnection& fc) {
  StrictnessReport r;
  Matrix<Series> c = frame_coordinates(fc);
  std::vector<int> ds = fc.degrees;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  auto indices = [&](int p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fc.degrees.size(); ++i)
      if (fc.degrees[i] == p) out.push_back(i);
    return out;
  };
  const int low = ds.empty() ? 0 : ds.front(), high = ds.empty() ? 0 : ds.back();
  for (int p = high; p > low; --p) {
    std::vector<std::size_t> src = indices(p), dst = indices(p - 1);
    Matrix<Series> m(dst.size(), src.size());
    for (std::size_t a = 0; a < dst.size(); ++a)
      for (std::size_t b = 0; b < src.size(); ++b) m(a, b) = c(dst[a], src[b]);
    r.graded_maps.emplace_back(p, m);
    if (!r.strict) continue;
    if (src.size() != dst.size()) {
      r.strict = false;
      r.witness = p;
      r.reason = "Gr^" + std::to_string(p) + " and Gr^" + std::to_string(p - 1) + " have different ranks";
    } else if (!det_expand(m).is_unit()) {
      r.strict = false;
      r.witness = p;
      r.reason = "graded map Gr^" + std::to_string(p) + " -> Gr^" + std::to_string(p - 1) + " has determinant " +
                 det_expand(m).to_string() + ", not a unit";
    }
  }
  if (high == low && fc.rank() > 1) {
    r.strict = false;
    r.reason = "filtration has a single step";
  }
  r.oper_type = r.strict && griffiths_check(fc).ok;
  return r;
}

}  // namespace voa::hodge
