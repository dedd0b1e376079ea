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

#ifndef COMPLEARN_BIMONOID_HPP_
#define COMPLEARN_BIMONOID_HPP_

#include <string>
#include <utility>
#include <vector>

#include "complearn/descent.hpp"
#include "complearn/learner.hpp"
#include "complearn/nnet.hpp"
#include "complearn/para.hpp"
#include "complearn/vec.hpp"

namespace complearn {

// A dense linear map, row-major.
struct LinearMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> entries;

  LinearMap(std::size_t r, std::size_t c, std::vector<double> values)
      : rows(r), cols(c), entries(std::move(values)) {
    require_dim("LinearMap entries", rows * cols, entries.size());
  }

  Vec apply(const Vec& x) const {
    require_dim("LinearMap apply", cols, x.dim());
    std::vector<double> y(rows, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) y[r] += entries[r * cols + c] * x[c];
    }
    return Vec(std::move(y));
  }

  Vec apply_transpose(const Vec& w) const {
    require_dim("LinearMap apply_transpose", rows, w.dim());
    std::vector<double> y(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) y[c] += entries[r * cols + c] * w[r];
    }
    return Vec(std::move(y));
  }
};

// A linear map as a trivially parametrised morphism: forward Ma, pullback
// M^T w.
inline ParamFn linear_para(const LinearMap& m, std::string label) {
  return lift_function(
      m.cols, m.rows, [m](const Vec& x) { return m.apply(x); },
      [m](const Vec&, const Vec& w) { return m.apply_transpose(w); },
      std::move(label));
}

// Image of a linear map under the descent functor; parameter space is R^0.
inline Learner linear_learner(const LinearMap& m, const DescentConfig& cfg) {
  return descend(cfg, linear_para(m, "linear_" + std::to_string(m.rows) + "x" +
                                         std::to_string(m.cols)));
}

// The four bimonoid structure maps on R, as descent images of the linear
// maps [1 1], the empty 1x0 map, [1; 1], and the empty 0x1 map.
inline Learner mu(const DescentConfig& cfg) {
  return linear_learner(LinearMap(1, 2, {1.0, 1.0}), cfg);
}

inline Learner eta(const DescentConfig& cfg) {
  return linear_learner(LinearMap(1, 0, {}), cfg);
}

inline Learner delta(const DescentConfig& cfg) {
  return linear_learner(LinearMap(2, 1, {1.0, 1.0}), cfg);
}

inline Learner counit(const DescentConfig& cfg) {
  return linear_learner(LinearMap(0, 1, {}), cfg);
}

// Scalar multiplication (w, x) -> w x as a parametrised function.
inline ParamFn scalar_mult_para() {
  ParamFn out;
  out.param_dim = 1;
  out.in_dim = 1;
  out.out_dim = 1;
  out.label = "scalar_mult";
  out.forward = [](const Vec& p, const Vec& x) { return Vec{p[0] * x[0]}; };
  out.pullback = [](const Vec& p, const Vec& x, const Vec& w) {
    return PullbackResult{Vec{w[0] * x[0]}, Vec{w[0] * p[0]}};
  };
  return out;
}

inline Learner scalar_mult(const DescentConfig& cfg) {
  return descend(cfg, scalar_mult_para());
}

inline Learner bias(const DescentConfig& cfg) {
  return descend(cfg, param_constant(1));
}

// Pointwise activation on R as a learner.
inline ParamFn activation_para(const Activation& act) {
  return lift_function(
      1, 1, [act](const Vec& x) { return Vec{act.sigma(x[0])}; },
      [act](const Vec& x, const Vec& w) { return Vec{w[0] * act.dsigma(x[0])}; },
      "act_" + act.name);
}

inline Learner act_learner(const Activation& act, const DescentConfig& cfg) {
  return descend(cfg, activation_para(act));
}

// Left fold of mu's taking k wires down to one.
inline Learner mu_tree(std::size_t wires, const DescentConfig& cfg) {
  if (wires < 1) throw std::invalid_argument("mu_tree: requires wires >= 1");
  if (wires == 1) return identity_learn(1);
  Learner acc = mu(cfg);
  for (std::size_t k = 2; k < wires; ++k) {
    acc = compose_learn(parallel_learn(acc, identity_learn(1)), mu(cfg));
  }
  return acc;
}

// One neuron: n scalar multiplications beside a bias, merged by a mu tree,
// then the activation. Parameter layout: n weights, then the bias.
inline Learner build_neuron(std::size_t n_inputs, const Activation& act,
                            const DescentConfig& cfg) {
  if (n_inputs < 1) {
    throw std::invalid_argument("build_neuron: requires n_inputs >= 1");
  }
  Learner weights = scalar_mult(cfg);
  for (std::size_t k = 1; k < n_inputs; ++k) {
    weights = parallel_learn(weights, scalar_mult(cfg));
  }
  Learner front = parallel_learn(weights, bias(cfg));
  return compose_learn(compose_learn(front, mu_tree(n_inputs + 1, cfg)),
                       act_learner(act, cfg));
}

// kn x n map stacking k copies of the identity.
inline LinearMap block_copier(std::size_t n, std::size_t copies) {
  std::vector<double> entries(copies * n * n, 0.0);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < n; ++i) entries[(c * n + i) * n + i] = 1.0;
  }
  return LinearMap(copies * n, n, std::move(entries));
}

// Ties one parameter block across its use sites. body must be trivially
// parametrised, with its first copies*block_dim inputs being the parameter
// slots. The tied function routes a single R^block_dim parameter through a
// parametrised constant and a copier, so its gradient is the sum of the
// per-site gradients; param_dim is block_dim, not copies*block_dim.
inline ParamFn tie_weights(const ParamFn& body, std::size_t block_dim,
                           std::size_t copies) {
  if (body.param_dim != 0) {
    throw DimensionError("tie_weights: body must be trivially parametrised", 0,
                         body.param_dim);
  }
  if (copies < 1) throw std::invalid_argument("tie_weights: requires copies >= 1");
  if (body.in_dim < copies * block_dim) {
    throw DimensionError("tie_weights: body input too small for " +
                             std::to_string(copies) + " copies of the block",
                         copies * block_dim, body.in_dim);
  }
  std::size_t data_dim = body.in_dim - copies * block_dim;
  ParamFn feed = compose_para(param_constant(block_dim),
                              linear_para(block_copier(block_dim, copies),
                                          "copy_" + std::to_string(copies)));
  ParamFn tied = compose_para(parallel_para(feed, identity_para(data_dim)), body);
  tied.label = "tied(" + body.label + ")";
  return tied;
}

}  // namespace complearn

#endif  // COMPLEARN_BIMONOID_HPP_
