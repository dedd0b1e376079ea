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

#ifndef COMPLEARN_FINITE_DIFF_HPP_
#define COMPLEARN_FINITE_DIFF_HPP_

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "complearn/vec.hpp"

namespace complearn {

// Central-difference estimate of the vector-Jacobian product w^T J_f(x):
// result_i = sum_j w_j * (f_j(x + h e_i) - f_j(x - h e_i)) / (2h).
//
// This is the independent oracle every analytic pullback in the library is
// checked against. Central differences have O(h^2) truncation error, which
// with the default h keeps gradient checks comfortably inside 1e-5 in double
// precision.
inline Vec finite_diff_pullback(const std::function<Vec(const Vec&)>& f,
                                const Vec& x, const Vec& w, double h = 1e-6) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("finite_diff_pullback: requires h > 0");
  }
  std::vector<double> out(x.dim(), 0.0);
  std::vector<double> probe(x.data());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    auto eval = [&](double delta, const char* side) {
      probe[i] = x[i] + delta;
      Vec y;
      try {
        y = f(Vec(probe));
      } catch (const NonFiniteError&) {
        throw NonFiniteError("finite_diff_pullback: f at probe coordinate " +
                             std::to_string(i) + " (" + side + ")");
      }
      probe[i] = x[i];
      require_dim("finite_diff_pullback: f output vs cotangent", w.dim(),
                  y.dim());
      return y;
    };
    Vec plus = eval(h, "+h");
    Vec minus = eval(-h, "-h");
    double acc = 0.0;
    for (std::size_t j = 0; j < w.dim(); ++j) {
      acc += w[j] * (plus[j] - minus[j]) / (2.0 * h);
    }
    if (!std::isfinite(acc)) {
      throw NonFiniteError("finite_diff_pullback: estimate at coordinate " +
                           std::to_string(i));
    }
    out[i] = acc;
  }
  return Vec(std::move(out));
}

}  // namespace complearn

#endif  // COMPLEARN_FINITE_DIFF_HPP_
