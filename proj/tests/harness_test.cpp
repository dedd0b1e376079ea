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

#include "complearn/complearn.hpp"

namespace complearn {
namespace {

Network single_unit_network() {
  return Network(1, {Layer(1, 1, {{1, 1}})});
}

TEST(DatasetCsv, RoundTrips) {
  Dataset data;
  data.in_dim = 2;
  data.out_dim = 1;
  data.rows.push_back({Vec{0.1, -0.25}, Vec{1.0 / 3.0}});
  data.rows.push_back({Vec{2.0, 5.0e-17}, Vec{-42.125}});
  Dataset reparsed = parse_dataset_csv(serialize_dataset_csv(data), 2, 1);
  ASSERT_EQ(reparsed.rows.size(), data.rows.size());
  for (std::size_t r = 0; r < data.rows.size(); ++r) {
    EXPECT_EQ(reparsed.rows[r].first, data.rows[r].first);
    EXPECT_EQ(reparsed.rows[r].second, data.rows[r].second);
  }
}

TEST(DatasetCsv, RejectsBadRows) {
  EXPECT_THROW(parse_dataset_csv("1.0,2.0\n", 2, 1), DimensionError);
  EXPECT_THROW(parse_dataset_csv("1.0,oops,3.0\n", 2, 1),
               std::invalid_argument);
}

TEST(Train, ConvergesOnTheConvexSinglePointProblem) {
  // One connection plus one bias, identity activation, datum (1, 2): the
  // sum w + w_b contracts toward 2 with factor 0.8 per step.
  Dataset data = parse_dataset_csv("1,2\n", 1, 1);
  TrainOptions options;
  options.eps = 0.1;
  options.epochs = 200;
  options.seed = 7;
  TrainResult result =
      train_network(single_unit_network(), builtin_activation("identity"),
                    quadratic(), options, data);
  EXPECT_LE(result.final_total_error, 1e-6);
  EXPECT_NEAR(result.final_params[0] + result.final_params[1], 2.0, 1e-3);
}

TEST(Train, RejectsZeroEpochs) {
  Dataset data = parse_dataset_csv("1,2\n", 1, 1);
  TrainOptions options;
  options.epochs = 0;
  EXPECT_THROW(train_network(single_unit_network(),
                             builtin_activation("identity"), quadratic(),
                             options, data),
               std::invalid_argument);
}

TEST(Train, DeterministicGivenSeed) {
  Dataset data = parse_dataset_csv("1,2\n0.5,1\n", 1, 1);
  TrainOptions options;
  options.eps = 0.05;
  options.epochs = 20;
  options.seed = 123;
  Network net = single_unit_network();
  Activation act = builtin_activation("identity");
  TrainResult a = train_network(net, act, quadratic(), options, data);
  TrainResult b = train_network(net, act, quadratic(), options, data);
  EXPECT_EQ(a.final_params, b.final_params);
  EXPECT_EQ(a.final_total_error, b.final_total_error);
  options.seed = 124;
  TrainResult c = train_network(net, act, quadratic(), options, data);
  EXPECT_NE(a.initial_params, c.initial_params);
}

TEST(Train, ReportsDomainViolationWithEpochAndRow) {
  // Cross entropy over an identity-activation unit: outputs quickly leave
  // (0, 1).
  Dataset data = parse_dataset_csv("0.5,0.5\n", 1, 1);
  TrainOptions options;
  options.eps = 0.5;
  options.epochs = 50;
  options.seed = 1;
  try {
    train_network(single_unit_network(), builtin_activation("identity"),
                  cross_entropy(), options, data);
    FAIL() << "expected a domain error wrapped with epoch/row";
  } catch (const std::runtime_error& err) {
    std::string what = err.what();
    EXPECT_NE(what.find("epoch"), std::string::npos);
    EXPECT_NE(what.find("row"), std::string::npos);
  }
}

TEST(ParamsJson, RoundTrips) {
  Vec params{0.1, -2.0, 1.0 / 3.0};
  EXPECT_EQ(parse_params_json(serialize_params_json(params)), params);
  EXPECT_THROW(parse_params_json("{}"), std::invalid_argument);
}

TEST(ParseVecArg, CommaSeparatedScalars) {
  EXPECT_EQ(parse_vec_arg("0.5,0.25"), Vec({0.5, 0.25}));
  EXPECT_EQ(parse_vec_arg("3"), Vec({3.0}));
  EXPECT_THROW(parse_vec_arg("1,x"), std::invalid_argument);
}

TEST(RunSuite, UnknownNameListsSuites) {
  try {
    verify::run_suite("nope", 1);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& err) {
    std::string what = err.what();
    EXPECT_NE(what.find("functoriality"), std::string::npos);
    EXPECT_NE(what.find("section6"), std::string::npos);
  }
}

TEST(RunSuite, ReportsAreValidJsonWithStableSchema) {
  Report rep = verify::run_suite("bimonoid", 5, 20);
  std::string text = render_report(rep);
  nlohmann::json doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc.at("schema_version").get<int>(), 1);
  EXPECT_EQ(doc.at("suite").get<std::string>(), "bimonoid");
  EXPECT_TRUE(doc.at("checks").is_array());
  EXPECT_TRUE(doc.at("pass").is_boolean());
}

TEST(RunSuite, PassIffAllChecksPass) {
  Report rep;
  rep.command = "verify";
  rep.add_check("good", 0.0, 1e-9);
  EXPECT_TRUE(rep.pass());
  rep.add_check("bad", 1.0, 1e-9);
  EXPECT_FALSE(rep.pass());
}

TEST(RunSuite, ByteIdenticalGivenSeed) {
  std::string first = render_report(verify::run_suite("neurons", 11, 10));
  std::string second = render_report(verify::run_suite("neurons", 11, 10));
  EXPECT_EQ(first, second);
}

TEST(RunSuite, ToleranceOverrideApplies) {
  Report rep = verify::run_suite("learn-axioms", 3, 5, 1e-3);
  for (const Check& check : rep.checks) {
    EXPECT_DOUBLE_EQ(check.tolerance, 1e-3);
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
  double reparsed = std::stod(format_double(5.0e-17));
  EXPECT_EQ(reparsed, 5.0e-17);
}

TEST(Request, ZeroLayerNetworkReachesTargetInOneStep) {
  // A 0-layer network implements the identity with no parameters; under the
  // quadratic model its request jumps straight to the target.
  NetworkFile file = parse_network_json(
      R"({"width_in": 1, "layers": [], "activation": "identity"})");
  ParamFn f = implement_network(file.network, builtin_activation(file.activation));
  EXPECT_EQ(f.param_dim, 0u);
  DescentConfig cfg(0.1, quadratic());
  RequestTrajectory traj =
      request_iterate(cfg, f, Vec{}, Vec{0.4}, Vec{2.0}, 1);
  ASSERT_EQ(traj.points.size(), 2u);
  EXPECT_DOUBLE_EQ(
      total_error(quadratic(), f, Vec{}, traj.points[1], Vec{2.0}).value, 0.0);
}

TEST(FileIo, WriteAndReadBack) {
  std::string path = testing::TempDir() + "complearn_io_test.json";
  write_file(path, "{\"params\": [1.5]}");
  EXPECT_EQ(parse_params_json(read_file(path)), Vec({1.5}));
  EXPECT_THROW(read_file(path + ".missing"), std::runtime_error);
}

}  // namespace
}  // namespace complearn
