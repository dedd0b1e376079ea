// Copyright 2026 The Complearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPLEARN_VEC_HPP_
#define COMPLEARN_VEC_HPP_

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace complearn {

// Thrown when two objects disagree on a dimension. Carries both sides.
class DimensionError : public std::invalid_argument {
 public:
  DimensionError(const std::string& context, std::size_t expected,
                 std::size_t got)
      : std::invalid_argument(context + ": dimension mismatch (expected " +
                              std::to_string(expected) + ", got " +
                              std::to_string(got) + ")"),
        expected_(expected),
        got_(got) {}

  std::size_t expected() const { return expected_; }
  std::size_t got() const { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

// Thrown when a value that must be finite is NaN or infinite.
class NonFiniteError : public std::runtime_error {
 public:
  explicit NonFiniteError(const std::string& where)
      : std::runtime_error("non-finite value: " + where) {}
};

// Thrown when an error model is evaluated outside its valid domain.
// Carries the offending coordinate index and value.
class ModelDomainError : public std::domain_error {
 public:
  ModelDomainError(const std::string& model, const std::string& site,
                   std::size_t index, double value)
      : std::domain_error(model + ": " + site + " coordinate " +
                          std::to_string(index) + " = " +
                          std::to_string(value) + " is outside the valid domain"),
        index_(index),
        value_(value) {}

  std::size_t index() const { return index_; }
  double value() const { return value_; }

 private:
  std::size_t index_;
  double value_;
};

// A finite-dimensional real vector. Entries are validated to be finite on
// construction, so NaN/Inf surfaces as an error at the operation that
// produced it instead of propagating.
class Vec {
 public:
  Vec() = default;

  explicit Vec(std::vector<double> data) : data_(std::move(data)) {
    check_finite();
  }

  Vec(std::initializer_list<double> values) : data_(values) { check_finite(); }

  static Vec zeros(std::size_t dim) { return Vec(std::vector<double>(dim, 0.0)); }

  std::size_t dim() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  const std::vector<double>& data() const { return data_; }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool operator==(const Vec& other) const { return data_ == other.data_; }

 private:
  void check_finite() const {
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!std::isfinite(data_[i])) {
        throw NonFiniteError("Vec entry " + std::to_string(i));
      }
    }
  }

  std::vector<double> data_;
};

// Absolute/relative comparison tolerance; at least one part must be positive.
struct Tolerance {
  double abs = 0.0;
  double rel = 0.0;

  Tolerance(double abs_part, double rel_part = 0.0)
      : abs(abs_part), rel(rel_part) {
    if (!(abs > 0.0) && !(rel > 0.0)) {
      throw std::invalid_argument(
          "Tolerance: at least one of abs, rel must be positive");
    }
    if (abs < 0.0 || rel < 0.0) {
      throw std::invalid_argument("Tolerance: parts must be nonnegative");
    }
  }
};

inline void require_dim(const std::string& context, std::size_t expected,
                        std::size_t got) {
  if (expected != got) throw DimensionError(context, expected, got);
}

// True iff |x_i - y_i| <= abs + rel * max(|x_i|, |y_i|) for every i.
inline bool approx_eq(const Vec& x, const Vec& y, const Tolerance& tol) {
  require_dim("approx_eq", x.dim(), y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double bound = tol.abs + tol.rel * std::max(std::fabs(x[i]), std::fabs(y[i]));
    if (std::fabs(x[i] - y[i]) > bound) return false;
  }
  return true;
}

inline double max_abs_diff(const Vec& x, const Vec& y) {
  require_dim("max_abs_diff", x.dim(), y.dim());
  double m = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    m = std::max(m, std::fabs(x[i] - y[i]));
  }
  return m;
}

inline Vec concat(const Vec& x, const Vec& y) {
  std::vector<double> out;
  out.reserve(x.dim() + y.dim());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return Vec(std::move(out));
}

// Half-open slice [lo, hi).
inline Vec slice(const Vec& x, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi > x.dim()) {
    throw std::out_of_range("slice [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + ") of Vec with dim " +
                            std::to_string(x.dim()));
  }
  return Vec(std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(lo),
                                 x.begin() + static_cast<std::ptrdiff_t>(hi)));
}

inline Vec add(const Vec& x, const Vec& y) {
  require_dim("add", x.dim(), y.dim());
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + y[i];
  return Vec(std::move(out));
}

inline Vec sub(const Vec& x, const Vec& y) {
  require_dim("sub", x.dim(), y.dim());
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] - y[i];
  return Vec(std::move(out));
}

inline Vec scale(double c, const Vec& x) {
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = c * x[i];
  return Vec(std::move(out));
}

}  // namespace complearn

#endif  // COMPLEARN_VEC_HPP_
