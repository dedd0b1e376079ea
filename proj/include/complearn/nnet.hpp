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

#ifndef COMPLEARN_NNET_HPP_
#define COMPLEARN_NNET_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complearn/para.hpp"
#include "complearn/vec.hpp"

namespace complearn {

// A sparse connectivity layer: connections are 1-indexed (output, input)
// pairs, so (j, i) means output node j reads input node i.
struct Layer {
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  std::vector<std::pair<std::size_t, std::size_t>> connections;

  Layer(std::size_t in, std::size_t out,
        std::vector<std::pair<std::size_t, std::size_t>> conns)
      : n_in(in), n_out(out), connections(std::move(conns)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [j, i] : connections) {
      if (j < 1 || j > n_out) {
        throw std::invalid_argument("Layer: output index " + std::to_string(j) +
                                    " out of range [1, " +
                                    std::to_string(n_out) + "]");
      }
      if (i < 1 || i > n_in) {
        throw std::invalid_argument("Layer: input index " + std::to_string(i) +
                                    " out of range [1, " +
                                    std::to_string(n_in) + "]");
      }
      if (!seen.insert({j, i}).second) {
        throw std::invalid_argument("Layer: duplicate connection (" +
                                    std::to_string(j) + ", " +
                                    std::to_string(i) + ")");
      }
    }
  }

  std::size_t param_count() const { return connections.size() + n_out; }

  static Layer full(std::size_t in, std::size_t out) {
    std::vector<std::pair<std::size_t, std::size_t>> conns;
    conns.reserve(in * out);
    for (std::size_t j = 1; j <= out; ++j) {
      for (std::size_t i = 1; i <= in; ++i) conns.push_back({j, i});
    }
    return Layer(in, out, std::move(conns));
  }
};

// A sequence of layers with chained widths. The empty sequence is the
// 0-layer network on its declared width.
struct Network {
  std::size_t width_in = 0;
  std::vector<Layer> layers;

  Network(std::size_t width, std::vector<Layer> layer_list)
      : width_in(width), layers(std::move(layer_list)) {
    std::size_t width_cursor = width_in;
    for (std::size_t k = 0; k < layers.size(); ++k) {
      if (layers[k].n_in != width_cursor) {
        throw DimensionError("Network: layer " + std::to_string(k) + " input",
                             width_cursor, layers[k].n_in);
      }
      width_cursor = layers[k].n_out;
    }
  }

  std::size_t width_out() const {
    return layers.empty() ? width_in : layers.back().n_out;
  }

  std::size_t param_count() const {
    std::size_t total = 0;
    for (const Layer& layer : layers) total += layer.param_count();
    return total;
  }
};

inline Network concat_networks(const Network& n1, const Network& n2) {
  if (n1.width_out() != n2.width_in) {
    throw DimensionError("concat_networks", n1.width_out(), n2.width_in);
  }
  std::vector<Layer> layers = n1.layers;
  layers.insert(layers.end(), n2.layers.begin(), n2.layers.end());
  return Network(n1.width_in, std::move(layers));
}

// A differentiable scalar activation with its derivative in closed form.
struct Activation {
  std::string name;
  std::function<double(double)> sigma;
  std::function<double(double)> dsigma;
};

// identity, sigmoid, tanh. ReLU is deliberately absent: its kink breaks the
// everywhere-differentiability the descent functor assumes. A custom
// Activation can still be registered by callers.
inline Activation builtin_activation(const std::string& name) {
  if (name == "identity") {
    return Activation{"identity", [](double x) { return x; },
                      [](double) { return 1.0; }};
  }
  if (name == "sigmoid") {
    auto sig = [](double x) { return 1.0 / (1.0 + std::exp(-x)); };
    return Activation{"sigmoid", sig, [sig](double x) {
                        double s = sig(x);
                        return s * (1.0 - s);
                      }};
  }
  if (name == "tanh") {
    return Activation{"tanh", [](double x) { return std::tanh(x); },
                      [](double x) {
                        double t = std::tanh(x);
                        return 1.0 - t * t;
                      }};
  }
  throw std::invalid_argument(
      "unknown activation \"" + name +
      "\"; valid names: identity, sigmoid, tanh");
}

// The parametrised function of one layer:
//   out_j = sigma(sum over (j,i) in C of w_ji * x_i  +  w_j).
// Parameter layout: weights in lexicographic (j, i) order over C, then
// biases for j = 1..n_out. Fixed so that file formats and composite layouts
// are deterministic.
inline ParamFn layer_param_fn(const Layer& layer, const Activation& act) {
  auto conns = layer.connections;
  std::sort(conns.begin(), conns.end());
  std::size_t n_weights = conns.size();
  std::size_t n_out = layer.n_out;

  auto preactivations = [conns, n_weights, n_out](const Vec& p, const Vec& x) {
    std::vector<double> z(n_out);
    for (std::size_t j = 0; j < n_out; ++j) z[j] = p[n_weights + j];
    for (std::size_t k = 0; k < conns.size(); ++k) {
      z[conns[k].first - 1] += p[k] * x[conns[k].second - 1];
    }
    return z;
  };

  ParamFn out;
  out.param_dim = layer.param_count();
  out.in_dim = layer.n_in;
  out.out_dim = n_out;
  out.label = "layer_" + std::to_string(layer.n_in) + "to" +
              std::to_string(n_out) + "_" + act.name;
  out.forward = [preactivations, act, n_out](const Vec& p, const Vec& x) {
    std::vector<double> z = preactivations(p, x);
    std::vector<double> y(n_out);
    for (std::size_t j = 0; j < n_out; ++j) y[j] = act.sigma(z[j]);
    return Vec(std::move(y));
  };
  out.pullback = [preactivations, act, conns, n_weights, n_out, in = layer.n_in](
                     const Vec& p, const Vec& x, const Vec& w) {
    std::vector<double> z = preactivations(p, x);
    std::vector<double> t(n_out);  // cotangent through the activation
    for (std::size_t j = 0; j < n_out; ++j) t[j] = w[j] * act.dsigma(z[j]);
    std::vector<double> gp(n_weights + n_out, 0.0);
    std::vector<double> gx(in, 0.0);
    for (std::size_t k = 0; k < conns.size(); ++k) {
      std::size_t j = conns[k].first - 1;
      std::size_t i = conns[k].second - 1;
      gp[k] = t[j] * x[i];
      gx[i] += t[j] * p[k];
    }
    for (std::size_t j = 0; j < n_out; ++j) gp[n_weights + j] = t[j];
    return PullbackResult{Vec(std::move(gp)), Vec(std::move(gx))};
  };
  return out;
}

// Left-to-right composite of the layers' parametrised functions; the
// 0-layer network maps to the identity.
inline ParamFn implement_network(const Network& net, const Activation& act) {
  if (net.layers.empty()) return identity_para(net.width_in);
  ParamFn acc = layer_param_fn(net.layers[0], act);
  for (std::size_t k = 1; k < net.layers.size(); ++k) {
    acc = compose_para(acc, layer_param_fn(net.layers[k], act));
  }
  return acc;
}

}  // namespace complearn

#endif  // COMPLEARN_NNET_HPP_
