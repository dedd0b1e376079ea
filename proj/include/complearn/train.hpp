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

#ifndef COMPLEARN_TRAIN_HPP_
#define COMPLEARN_TRAIN_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "complearn/descent.hpp"
#include "complearn/error_model.hpp"
#include "complearn/io.hpp"
#include "complearn/nnet.hpp"
#include "complearn/rng.hpp"

namespace complearn {

struct TrainOptions {
  double eps = 0.1;
  std::size_t epochs = 1;
  std::uint64_t seed = 0;
  double init_low = -1.0;
  double init_high = 1.0;

  void validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("train: requires eps > 0");
    if (epochs < 1) throw std::invalid_argument("train: requires epochs >= 1");
    if (!(init_low < init_high)) {
      throw std::invalid_argument("train: requires init_low < init_high");
    }
  }
};

struct TrainResult {
  Vec initial_params;
  Vec final_params;
  double initial_total_error = 0.0;
  double final_total_error = 0.0;
  std::size_t epochs = 0;
  std::size_t rows = 0;
};

inline double dataset_total_error(const ErrorModel& model, const ParamFn& f,
                                  const Vec& params, const Dataset& data) {
  double sum = 0.0;
  for (const auto& [a, b] : data.rows) {
    sum += total_error(model, f, params, a, b).value;
  }
  return sum;
}

// Sequential single-datum updates in row order, repeated per epoch.
// Parameters are initialised uniformly from the seed, so the result is
// deterministic given (seed, inputs). Model domain violations surface with
// the epoch and row.
inline TrainResult train_network(const Network& net, const Activation& act,
                                 const ErrorModel& model,
                                 const TrainOptions& options,
                                 const Dataset& data) {
  options.validate();
  ParamFn f = implement_network(net, act);
  require_dim("train: dataset input", f.in_dim, data.in_dim);
  require_dim("train: dataset target", f.out_dim, data.out_dim);
  SplitMix64 rng(options.seed);
  Vec params = sample_vec(rng, f.param_dim, options.init_low, options.init_high);
  Learner learner = descend(DescentConfig(options.eps, model), f);

  TrainResult result;
  result.initial_params = params;
  result.initial_total_error = dataset_total_error(model, f, params, data);
  result.epochs = options.epochs;
  result.rows = data.rows.size();
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    for (std::size_t row = 0; row < data.rows.size(); ++row) {
      try {
        params = learner.run_update(params, data.rows[row].first,
                                    data.rows[row].second);
      } catch (const ModelDomainError& err) {
        throw std::runtime_error("train: epoch " + std::to_string(epoch + 1) +
                                 ", row " + std::to_string(row + 1) + ": " +
                                 err.what());
      }
    }
  }
  result.final_params = params;
  result.final_total_error = dataset_total_error(model, f, params, data);
  return result;
}

}  // namespace complearn

#endif  // COMPLEARN_TRAIN_HPP_
