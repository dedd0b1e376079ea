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

#ifndef COMPLEARN_ERROR_MODEL_HPP_
#define COMPLEARN_ERROR_MODEL_HPP_

#include <cmath>
#include <functional>
#include <string>

#include "complearn/para.hpp"
#include "complearn/vec.hpp"

namespace complearn {

// The data that parametrises the descent functor: a pointwise error e(x, y),
// its x-derivative, the closed-form inverse of v = de_dx(x0, y) in y, a
// codomain-dimension weight alpha(m) > 0, and the valid domain of the x slot.
//
// inv_de_dx must invert de_dx in the second slot wherever valid:
// inv_de_dx(x0, de_dx(x0, y)) == y. Inverses are supplied in closed form;
// exactness is what makes composite requests chain.
struct ErrorModel {
  std::string name;
  std::function<double(double, double)> e;
  std::function<double(double, double)> de_dx;
  std::function<double(double, double)> inv_de_dx;  // (x0, v) -> y
  std::function<double(std::size_t)> alpha;
  std::function<bool(double)> valid_point;

  void require_valid(const std::string& site, std::size_t index,
                     double x) const {
    if (!valid_point(x)) throw ModelDomainError(name, site, index, x);
  }
};

// e(x, y) = (x - y)^2 / 2. The derivative in x is x - y, whose inverse in y
// is v -> x0 - v (its own inverse).
inline ErrorModel quadratic() {
  ErrorModel m;
  m.name = "quadratic";
  m.e = [](double x, double y) { return 0.5 * (x - y) * (x - y); };
  m.de_dx = [](double x, double y) { return x - y; };
  m.inv_de_dx = [](double x0, double v) { return x0 - v; };
  m.alpha = [](std::size_t) { return 1.0; };
  m.valid_point = [](double) { return true; };
  return m;
}

// e(x, y) = y ln x + (1 - y) ln(1 - x), defined for 0 < x < 1. The total
// error is averaged over the codomain dimension: alpha(m) = 1/m.
inline ErrorModel cross_entropy() {
  ErrorModel m;
  m.name = "cross_entropy";
  auto in_domain = [](double x) { return x > 0.0 && x < 1.0; };
  m.valid_point = in_domain;
  m.e = [in_domain](double x, double y) {
    if (!in_domain(x)) throw ModelDomainError("cross_entropy", "e", 0, x);
    return y * std::log(x) + (1.0 - y) * std::log(1.0 - x);
  };
  m.de_dx = [in_domain](double x, double y) {
    if (!in_domain(x)) throw ModelDomainError("cross_entropy", "de_dx", 0, x);
    return (y - x) / (x * (1.0 - x));
  };
  m.inv_de_dx = [in_domain](double x0, double v) {
    if (!in_domain(x0)) {
      throw ModelDomainError("cross_entropy", "inv_de_dx", 0, x0);
    }
    return x0 + x0 * (1.0 - x0) * v;
  };
  m.alpha = [](std::size_t dim) { return 1.0 / static_cast<double>(dim); };
  return m;
}

// e(x, y) = x y, whose x-derivative is y; the inverse is the identity.
inline ErrorModel xy_error() {
  ErrorModel m;
  m.name = "xy";
  m.e = [](double x, double y) { return x * y; };
  m.de_dx = [](double, double y) { return y; };
  m.inv_de_dx = [](double, double v) { return v; };
  m.alpha = [](std::size_t) { return 1.0; };
  m.valid_point = [](double) { return true; };
  return m;
}

inline ErrorModel model_by_name(const std::string& name) {
  if (name == "quadratic") return quadratic();
  if (name == "cross_entropy") return cross_entropy();
  if (name == "xy") return xy_error();
  throw std::invalid_argument(
      "unknown error model \"" + name +
      "\"; valid names: quadratic, cross_entropy, xy");
}

struct TotalError {
  double value = 0.0;
};

// alpha(out_dim) weighted coordinatewise sum of e over the outputs.
inline TotalError total_error(const ErrorModel& model, const ParamFn& f,
                              const Vec& p, const Vec& a, const Vec& b) {
  require_dim("total_error: target", f.out_dim, b.dim());
  Vec out = f.eval(p, a);
  double sum = 0.0;
  for (std::size_t j = 0; j < out.dim(); ++j) {
    model.require_valid("total_error output", j, out[j]);
    sum += model.e(out[j], b[j]);
  }
  if (out.dim() == 0) return TotalError{0.0};
  double value = model.alpha(out.dim()) * sum;
  if (!std::isfinite(value)) throw NonFiniteError("total_error value");
  return TotalError{value};
}

}  // namespace complearn

#endif  // COMPLEARN_ERROR_MODEL_HPP_
