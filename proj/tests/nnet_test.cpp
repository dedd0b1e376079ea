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

#include <cmath>

#include <gtest/gtest.h>

#include "complearn/io.hpp"
#include "complearn/nnet.hpp"
#include "complearn/para.hpp"
#include "complearn/rng.hpp"

namespace complearn {
namespace {

TEST(Layer, ValidatesConnectionRanges) {
  EXPECT_NO_THROW(Layer(2, 2, {{1, 1}, {2, 2}}));
  EXPECT_THROW(Layer(2, 2, {{3, 1}}), std::invalid_argument);
  EXPECT_THROW(Layer(2, 2, {{1, 0}}), std::invalid_argument);
  EXPECT_THROW(Layer(2, 2, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST(Network, ChainsWidths) {
  EXPECT_NO_THROW(Network(2, {Layer::full(2, 3), Layer::full(3, 1)}));
  EXPECT_THROW(Network(2, {Layer::full(2, 3), Layer::full(2, 1)}),
               DimensionError);
  Network empty(3, {});
  EXPECT_EQ(empty.width_out(), 3u);
}

TEST(ConcatNetworks, ZeroLayerIsIdentity) {
  Network a(2, {Layer::full(2, 1)});
  Network none(1, {});
  Network left_none(2, {});
  EXPECT_EQ(concat_networks(a, none).layers.size(), 1u);
  EXPECT_EQ(concat_networks(left_none, a).layers.size(), 1u);
}

TEST(ConcatNetworks, ConcatenatesAndChecksWidths) {
  Network a(2, {Layer::full(2, 3)});
  Network b(3, {Layer::full(3, 1)});
  Network joined = concat_networks(a, b);
  EXPECT_EQ(joined.layers.size(), 2u);
  EXPECT_EQ(joined.width_in, 2u);
  EXPECT_EQ(joined.width_out(), 1u);
  EXPECT_THROW(concat_networks(b, a), DimensionError);
}

TEST(ConcatNetworks, Associative) {
  Network a(1, {Layer::full(1, 2)});
  Network b(2, {Layer::full(2, 2)});
  Network c(2, {Layer::full(2, 1)});
  Network left = concat_networks(concat_networks(a, b), c);
  Network right = concat_networks(a, concat_networks(b, c));
  EXPECT_EQ(left.layers.size(), right.layers.size());
  EXPECT_EQ(left.param_count(), right.param_count());
}

TEST(LayerParamFn, SparseForwardExample) {
  // Connections {(1,1),(2,1),(2,2)} with identity activation, all weights 1,
  // zero biases, input (1,1): outputs (1, 2).
  Layer layer(2, 2, {{1, 1}, {2, 1}, {2, 2}});
  ParamFn f = layer_param_fn(layer, builtin_activation("identity"));
  EXPECT_EQ(f.param_dim, 5u);
  EXPECT_EQ(f.eval(Vec{1.0, 1.0, 1.0, 0.0, 0.0}, Vec{1.0, 1.0}),
            Vec({1.0, 2.0}));
}

TEST(LayerParamFn, NoConnectionsIsBiasOnly) {
  Layer layer(2, 1, {});
  ParamFn f = layer_param_fn(layer, builtin_activation("sigmoid"));
  EXPECT_EQ(f.param_dim, 1u);
  double bias_out = f.eval(Vec{0.3}, Vec{5.0, -5.0})[0];
  EXPECT_NEAR(bias_out, 1.0 / (1.0 + std::exp(-0.3)), 1e-15);
  EXPECT_NEAR(f.eval(Vec{0.3}, Vec{-2.0, 2.0})[0], bias_out, 0.0);
}

TEST(LayerParamFn, PullbackMatchesFiniteDifferences) {
  SplitMix64 rng(1);
  Layer layer(2, 2, {{1, 1}, {1, 2}, {2, 1}});
  for (const char* name : {"identity", "sigmoid", "tanh"}) {
    ParamFn f = layer_param_fn(layer, builtin_activation(name));
    EXPECT_TRUE(check_pullback(f, rng)) << name;
  }
}

TEST(ImplementNetwork, ZeroLayerIsIdentity) {
  SplitMix64 rng(2);
  ParamFn f = implement_network(Network(3, {}), builtin_activation("sigmoid"));
  EXPECT_EQ(f.param_dim, 0u);
  for (int t = 0; t < 10; ++t) {
    Vec a = sample_vec(rng, 3);
    EXPECT_EQ(f.eval(Vec{}, a), a);
  }
}

TEST(ImplementNetwork, TwoLayerClosedForm) {
  // First layer 2->2 over {(1,1),(1,2),(2,1)}, second layer full 2->1;
  // parameters [p11, p12, p21, p1b, p2b, q1, q2, qb]. The composite is
  // sigma(q1 sigma(p11 a1 + p12 a2 + p1b) + q2 sigma(p21 a1 + p2b) + qb).
  Activation act = builtin_activation("sigmoid");
  Network net(2, {Layer(2, 2, {{1, 1}, {1, 2}, {2, 1}}), Layer::full(2, 1)});
  ParamFn f = implement_network(net, act);
  EXPECT_EQ(f.param_dim, 8u);
  SplitMix64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Vec pq = sample_vec(rng, 8);
    Vec a = sample_vec(rng, 2);
    double hidden1 = act.sigma(pq[0] * a[0] + pq[1] * a[1] + pq[3]);
    double hidden2 = act.sigma(pq[2] * a[0] + pq[4]);
    double expected = act.sigma(pq[5] * hidden1 + pq[6] * hidden2 + pq[7]);
    EXPECT_NEAR(f.eval(pq, a)[0], expected, 1e-15);
  }
}

TEST(ImplementNetwork, PreservesConcatenation) {
  SplitMix64 rng(4);
  Activation act = builtin_activation("sigmoid");
  Network n1(2, {Layer::full(2, 3)});
  Network n2(3, {Layer::full(3, 1)});
  ParamFn whole = implement_network(concat_networks(n1, n2), act);
  ParamFn split =
      compose_para(implement_network(n1, act), implement_network(n2, act));
  for (int t = 0; t < 30; ++t) {
    Vec p = sample_vec(rng, whole.param_dim);
    Vec a = sample_vec(rng, whole.in_dim);
    EXPECT_LE(max_abs_diff(whole.eval(p, a), split.eval(p, a)), 1e-12);
    Vec w = sample_vec(rng, whole.out_dim);
    PullbackResult gw = whole.vjp(p, a, w);
    PullbackResult gs = split.vjp(p, a, w);
    EXPECT_LE(max_abs_diff(gw.param_grad, gs.param_grad), 1e-12);
    EXPECT_LE(max_abs_diff(gw.input_grad, gs.input_grad), 1e-12);
  }
}

TEST(ImplementNetwork, ParamCountSumsLayerCounts) {
  Network net(2, {Layer(2, 2, {{1, 1}, {1, 2}, {2, 1}}), Layer::full(2, 1)});
  EXPECT_EQ(net.param_count(), (3u + 2u) + (2u + 1u));
  EXPECT_EQ(implement_network(net, builtin_activation("identity")).param_dim,
            net.param_count());
}

TEST(BuiltinActivation, ClosedForms) {
  Activation sig = builtin_activation("sigmoid");
  EXPECT_DOUBLE_EQ(sig.sigma(0.0), 0.5);
  EXPECT_DOUBLE_EQ(sig.dsigma(0.0), 0.25);
  Activation th = builtin_activation("tanh");
  EXPECT_DOUBLE_EQ(th.sigma(0.0), 0.0);
  EXPECT_DOUBLE_EQ(th.dsigma(0.0), 1.0);
  Activation id = builtin_activation("identity");
  EXPECT_DOUBLE_EQ(id.sigma(-3.25), -3.25);
  EXPECT_DOUBLE_EQ(id.dsigma(-3.25), 1.0);
}

TEST(BuiltinActivation, UnknownNameListsValidOnes) {
  try {
    builtin_activation("relu");
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& err) {
    std::string what = err.what();
    EXPECT_NE(what.find("identity"), std::string::npos);
    EXPECT_NE(what.find("sigmoid"), std::string::npos);
    EXPECT_NE(what.find("tanh"), std::string::npos);
  }
}

TEST(BuiltinActivation, DerivativeMatchesFiniteDifference) {
  SplitMix64 rng(5);
  for (const char* name : {"identity", "sigmoid", "tanh"}) {
    Activation act = builtin_activation(name);
    for (int t = 0; t < 30; ++t) {
      double x = rng.uniform(-3.0, 3.0);
      double h = 1e-6;
      double numeric = (act.sigma(x + h) - act.sigma(x - h)) / (2.0 * h);
      EXPECT_LE(std::fabs(numeric - act.dsigma(x)), 1e-5) << name;
    }
  }
}

TEST(NetworkJson, ParsesTheDocumentedSchema) {
  std::string text = R"({
    "width_in": 2,
    "layers": [
      {"n_out": 2, "connections": [[1, 1], [1, 2], [2, 1]]},
      {"n_out": 1, "connections": [[1, 1], [1, 2]]}
    ],
    "activation": "sigmoid"
  })";
  NetworkFile file = parse_network_json(text);
  EXPECT_EQ(file.network.width_in, 2u);
  EXPECT_EQ(file.network.layers.size(), 2u);
  EXPECT_EQ(file.network.layers[0].connections.size(), 3u);
  EXPECT_EQ(file.activation, "sigmoid");
}

TEST(NetworkJson, RoundTrips) {
  NetworkFile file{
      Network(2, {Layer(2, 2, {{1, 1}, {1, 2}, {2, 1}}), Layer::full(2, 1)}),
      "tanh"};
  NetworkFile reparsed = parse_network_json(serialize_network_json(file));
  EXPECT_EQ(reparsed.network.width_in, file.network.width_in);
  EXPECT_EQ(reparsed.network.layers.size(), file.network.layers.size());
  EXPECT_EQ(reparsed.network.layers[0].connections,
            file.network.layers[0].connections);
  EXPECT_EQ(reparsed.activation, "tanh");
}

TEST(NetworkJson, RejectsBadInput) {
  EXPECT_THROW(parse_network_json("not json"), std::invalid_argument);
  EXPECT_THROW(parse_network_json(R"({"width_in": 2})"), std::invalid_argument);
  // 1-indexed: index 0 is out of range.
  EXPECT_THROW(parse_network_json(
                   R"({"width_in": 2,
                       "layers": [{"n_out": 1, "connections": [[1, 0]]}],
                       "activation": "sigmoid"})"),
               std::invalid_argument);
  // Unknown activation is rejected at parse time.
  EXPECT_THROW(parse_network_json(
                   R"({"width_in": 1, "layers": [], "activation": "relu"})"),
               std::invalid_argument);
}

}  // namespace
}  // namespace complearn
