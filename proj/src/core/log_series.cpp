#include "voa/core/log_series.hpp"

#include <sstream>

namespace voa {

void LogSeries::add(const Rational& lambda, unsigned log_power, const Series& s) {
  Branch& b = branches_[lambda];
  if (b.size() <= log_power) b.resize(log_power + 1);
  b[log_power] += s;
  prune();
}

unsigned LogSeries::max_log_power() const {
  unsigned j = 0;
  for (const auto& [lambda, b] : branches_)
    if (!b.empty()) j = std::max(j, static_cast<unsigned>(b.size() - 1));
  return j;
}

Series LogSeries::component(const Rational& lambda, unsigned log_power) const {
  auto it = branches_.find(lambda);
  if (it == branches_.end() || it->second.size() <= log_power) return {};
  return it->second[log_power];
}

LogSeries LogSeries::euler_derivative() const {
  // x d/dx [x^lambda S(x) L^j] = x^lambda [(lambda S + x S') L^j + j S L^{j-1}].
  LogSeries out;
  for (const auto& [lambda, b] : branches_) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Series& s = b[j];
      out.add(lambda, static_cast<unsigned>(j), s * lambda + s.derivative().shifted(1));
      if (j > 0) out.add(lambda, static_cast<unsigned>(j - 1), s * Rational(static_cast<long>(j)));
    }
  }
  return out;
}

LogSeries LogSeries::times(const Series& s) const {
  LogSeries out;
  for (const auto& [lambda, b] : branches_)
    for (std::size_t j = 0; j < b.size(); ++j) out.add(lambda, static_cast<unsigned>(j), b[j] * s);
  return out;
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
  for (const auto& [lambda, b] : o.branches_)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Branch& mine = branches_[lambda];
      if (mine.size() <= j) mine.resize(j + 1);
      mine[j] += b[j];
    }
  prune();
  return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& o) {
  LogSeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

LogSeries& LogSeries::operator*=(const Rational& s) {
  for (auto& [lambda, b] : branches_)
    for (auto& c : b) c *= s;
  prune();
  return *this;
}

void LogSeries::prune() {
  for (auto& [lambda, b] : branches_) {
    // Keep precision information of trailing zero components only if inexact.
    while (!b.empty() && b.back().is_zero() && b.back().exact()) b.pop_back();
  }
  for (auto it = branches_.begin(); it != branches_.end();) {
    if (it->second.empty())
      it = branches_.erase(it);
    else
      ++it;
  }
}

bool LogSeries::is_zero() const {
  for (const auto& [lambda, b] : branches_)
    for (const auto& s : b)
      if (!s.is_zero()) return false;
  return true;
}

bool operator==(const LogSeries& a, const LogSeries& b) {
  return (a - b).is_zero();
}

std::string LogSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, b] : branches_) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << var << "^(" << voa::to_string(lambda) << ")";
      if (j > 0) os << "*log(" << var << ")" << (j > 1 ? "^" + std::to_string(j) : "");
      os << "*[" << b[j].to_string(var) << "]";
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace voa
