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

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "complearn/complearn.hpp"

namespace {

using complearn::Report;

Report do_verify(const std::string& suite, std::uint64_t seed,
                 std::optional<std::size_t> trials,
                 std::optional<double> tol) {
  return complearn::verify::run_suite(suite, seed, trials, tol);
}

Report do_train(const std::string& net_path, const std::string& data_path,
                const std::string& error_name, double eps, std::size_t epochs,
                std::uint64_t seed, double init_low, double init_high,
                const std::string& out_path) {
  complearn::NetworkFile net_file =
      complearn::parse_network_json(complearn::read_file(net_path));
  complearn::Activation act =
      complearn::builtin_activation(net_file.activation);
  complearn::ErrorModel model = complearn::model_by_name(error_name);
  complearn::Dataset data = complearn::parse_dataset_csv(
      complearn::read_file(data_path), net_file.network.width_in,
      net_file.network.width_out());
  complearn::TrainOptions options;
  options.eps = eps;
  options.epochs = epochs;
  options.seed = seed;
  options.init_low = init_low;
  options.init_high = init_high;
  complearn::TrainResult result =
      complearn::train_network(net_file.network, act, model, options, data);

  if (!out_path.empty()) {
    complearn::write_file(out_path,
                          complearn::serialize_params_json(result.final_params));
  }

  Report rep;
  rep.command = "train";
  rep.seed = seed;
  rep.extra["args"] = {{"net", net_path},
                       {"data", data_path},
                       {"error", error_name},
                       {"eps", eps},
                       {"epochs", epochs},
                       {"init", {{"uniform", {init_low, init_high}}}}};
  rep.extra["rows"] = result.rows;
  rep.extra["epochs"] = result.epochs;
  rep.extra["initial_total_error"] = result.initial_total_error;
  rep.extra["final_total_error"] = result.final_total_error;
  rep.extra["final_params"] = result.final_params.data();
  return rep;
}

Report do_request(const std::string& net_path, const std::string& params_path,
                  const std::string& input, const std::string& target,
                  std::size_t steps, const std::string& error_name,
                  double eps) {
  complearn::NetworkFile net_file =
      complearn::parse_network_json(complearn::read_file(net_path));
  complearn::Activation act =
      complearn::builtin_activation(net_file.activation);
  complearn::ParamFn f = complearn::implement_network(net_file.network, act);
  complearn::Vec params =
      complearn::parse_params_json(complearn::read_file(params_path));
  complearn::Vec a = complearn::parse_vec_arg(input);
  complearn::Vec b = complearn::parse_vec_arg(target);
  complearn::ErrorModel model = complearn::model_by_name(error_name);
  complearn::DescentConfig cfg(eps, model);
  complearn::RequestTrajectory traj =
      complearn::request_iterate(cfg, f, params, a, b, steps);

  Report rep;
  rep.command = "request";
  rep.extra["args"] = {{"net", net_path},
                       {"params", params_path},
                       {"input", a.data()},
                       {"target", b.data()},
                       {"steps", steps},
                       {"error", error_name}};
  auto points = nlohmann::ordered_json::array();
  auto errors = nlohmann::ordered_json::array();
  for (const complearn::Vec& point : traj.points) {
    points.push_back(point.data());
    // Error trajectories are reported, never asserted monotone.
    try {
      errors.push_back(
          complearn::total_error(model, f, params, point, b).value);
    } catch (const complearn::ModelDomainError&) {
      errors.push_back(nullptr);
    }
  }
  rep.extra["trajectory"] = points;
  rep.extra["total_error"] = errors;
  rep.extra["truncated"] = traj.truncated;
  if (traj.truncated) {
    rep.note("trajectory truncated: " + traj.truncation_reason);
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional learners: verify categorical laws, train toy "
               "networks, iterate requests"};
  app.require_subcommand(1);

  std::string suite;
  std::uint64_t seed = 42;
  std::optional<std::size_t> trials;
  std::optional<double> tol;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--trials", trials, "trials per check");
  verify->add_option("--tol", tol, "override every check tolerance");

  std::string net_path, data_path, out_path;
  std::string error_name = "quadratic";
  double eps = 0.1;
  std::size_t epochs = 1;
  std::uint64_t train_seed = 0;
  double init_low = -1.0, init_high = 1.0;
  CLI::App* train = app.add_subcommand("train", "train a network on a dataset");
  train->add_option("--net", net_path, "network JSON file")->required();
  train->add_option("--data", data_path, "dataset CSV file")->required();
  train->add_option("--error", error_name, "error model name");
  train->add_option("--eps", eps, "step size");
  train->add_option("--epochs", epochs, "training epochs");
  train->add_option("--seed", train_seed, "initialisation seed");
  train->add_option("--init-low", init_low, "uniform init lower bound");
  train->add_option("--init-high", init_high, "uniform init upper bound");
  train->add_option("--out", out_path, "write final parameters to this file");

  std::string params_path, input, target;
  std::size_t steps = 1;
  std::string req_error = "quadratic";
  double req_eps = 0.1;
  CLI::App* request =
      app.add_subcommand("request", "iterate the request function");
  request->add_option("--net", net_path, "network JSON file")->required();
  request->add_option("--params", params_path, "parameters JSON file")
      ->required();
  request->add_option("--input", input, "comma-separated input vector")
      ->required();
  request->add_option("--target", target, "comma-separated target vector")
      ->required();
  request->add_option("--steps", steps, "request iterations");
  request->add_option("--error", req_error, "error model name");
  request->add_option("--eps", req_eps, "step size (requests do not use it)");

  CLI11_PARSE(app, argc, argv);

  auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (verify->parsed()) {
      rep = do_verify(suite, seed, trials, tol);
    } else if (train->parsed()) {
      rep = do_train(net_path, data_path, error_name, eps, epochs, train_seed,
                     init_low, init_high, out_path);
    } else {
      rep = do_request(net_path, params_path, input, target, steps, req_error,
                       req_eps);
    }
  } catch (const std::exception& err) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = app.get_subcommands().front()->get_name();
    doc["error"] = err.what();
    doc["pass"] = false;
    std::cout << doc.dump(2) << "\n";
    return 1;
  }
  std::cout << complearn::render_report(rep);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  // Timing stays on stderr: the stdout report is byte-stable given a seed.
  std::cerr << "timing_ms " << elapsed.count() << "\n";
  return rep.pass() ? 0 : 1;
}
