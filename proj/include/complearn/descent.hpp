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

#ifndef COMPLEARN_DESCENT_HPP_
#define COMPLEARN_DESCENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "complearn/error_model.hpp"
#include "complearn/learner.hpp"
#include "complearn/para.hpp"
#include "complearn/rng.hpp"
#include "complearn/vec.hpp"

namespace complearn {

// Step size and error model for the gradient-descent functor.
struct DescentConfig {
  double eps;
  ErrorModel model;

  DescentConfig(double step, ErrorModel error_model)
      : eps(step), model(std::move(error_model)) {
    if (!(eps > 0.0)) {
      throw std::invalid_argument("DescentConfig: requires eps > 0");
    }
  }
};

namespace detail {

// Both gradient blocks of the unweighted error sum(e(F_j(p,a), b_j)) from
// one pullback call per training datum: this is backpropagation, never
// per-coordinate differentiation. The cotangent is w_j = de_dx(F_j(p,a), b_j);
// callers apply the dimension weights. An empty codomain makes the sum
// identically zero, so both gradients are zero without consulting alpha(0).
inline PullbackResult unweighted_error_gradients(const ErrorModel& model,
                                                 const ParamFn& f, const Vec& p,
                                                 const Vec& a, const Vec& b) {
  Vec out = f.eval(p, a);
  if (f.out_dim == 0) {
    return PullbackResult{Vec::zeros(f.param_dim), Vec::zeros(f.in_dim)};
  }
  std::vector<double> w(out.dim());
  for (std::size_t j = 0; j < out.dim(); ++j) {
    model.require_valid("descend output", j, out[j]);
    w[j] = model.de_dx(out[j], b[j]);
  }
  return f.vjp(p, a, Vec(std::move(w)));
}

}  // namespace detail

// The gradient-descent/backpropagation functor on a single morphism: sends a
// parametrised function F : R^n -> R^m to the learner (P, I, U, r) with
//   E(p, a, b) = alpha(m) * sum_j e(F_j(p,a), b_j)
//   U(p, a, b) = p - eps * grad_p E(p, a, b)
//   r(p, a, b)_i = inv_de_dx(a_i, (1/alpha(n)) * grad_a E(p, a, b)_i)
// The request is normalised by the DOMAIN weight alpha(n), not the codomain
// weight: that is the normalisation under which composition is preserved
// exactly, since the alpha entering a downstream total error is the alpha of
// its domain, which is the upstream codomain. For constant alpha the two
// normalisations coincide and the request is simply the inverse derivative
// of the unweighted gradient. The request carries no step size; it is built
// by inverting the error derivative, not by descending.
inline Learner descend(const DescentConfig& cfg, const ParamFn& f) {
  Learner out;
  out.param_dim = f.param_dim;
  out.in_dim = f.in_dim;
  out.out_dim = f.out_dim;
  out.label = "descend(" + f.label + ")";
  out.implement = [f](const Vec& p, const Vec& a) { return f.eval(p, a); };
  double eps = cfg.eps;
  ErrorModel model = cfg.model;
  out.update = [f, model, eps](const Vec& p, const Vec& a, const Vec& b) {
    PullbackResult g = detail::unweighted_error_gradients(model, f, p, a, b);
    double alpha_out = f.out_dim == 0 ? 0.0 : model.alpha(f.out_dim);
    return sub(p, scale(eps * alpha_out, g.param_grad));
  };
  out.request = [f, model](const Vec& p, const Vec& a, const Vec& b) {
    PullbackResult g = detail::unweighted_error_gradients(model, f, p, a, b);
    double factor = 0.0;
    if (f.out_dim > 0 && f.in_dim > 0) {
      factor = model.alpha(f.out_dim) / model.alpha(f.in_dim);
    }
    std::vector<double> req(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      model.require_valid("descend request input", i, a[i]);
      req[i] = model.inv_de_dx(a[i], factor * g.input_grad[i]);
    }
    return Vec(std::move(req));
  };
  return out;
}

// Outcome of a functoriality check: worst deviation per learner function
// over the sampled trials.
struct FunctorialityReport {
  std::size_t trials = 0;
  std::size_t resamples = 0;
  double tol = 0.0;
  double max_dev_implement = 0.0;
  double max_dev_update = 0.0;
  double max_dev_request = 0.0;

  double max_dev() const {
    return std::max({max_dev_implement, max_dev_update, max_dev_request});
  }
  bool pass() const { return max_dev() <= tol; }
};

namespace detail {

// Rejection-samples each coordinate until the model accepts it, so that
// restricted-domain models (cross entropy) get valid trial points.
inline Vec sample_valid_vec(SplitMix64& rng, std::size_t dim,
                            const ErrorModel& model, double low, double high) {
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double x = rng.uniform(low, high);
    for (int tries = 0; !model.valid_point(x); ++tries) {
      if (tries > 200) {
        throw std::runtime_error(
            "sample_valid_vec: cannot find a valid coordinate for model " +
            model.name);
      }
      x = rng.uniform(low, high);
    }
    out[i] = x;
  }
  return Vec(std::move(out));
}

// Compares two learners of equal type at random model-valid points. A trial
// that still violates the model domain (e.g. a composite's intermediate
// value leaving the valid region) is resampled up to 10 times.
inline FunctorialityReport compare_learners_valid(
    const Learner& lhs, const Learner& rhs, const ErrorModel& model,
    std::size_t trials, double tol, SplitMix64& rng) {
  FunctorialityReport report;
  report.trials = trials;
  report.tol = tol;
  for (std::size_t t = 0; t < trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      Vec p = sample_vec(rng, lhs.param_dim, -1.0, 1.0);
      Vec a = sample_valid_vec(rng, lhs.in_dim, model, -1.0, 1.0);
      Vec b = sample_valid_vec(rng, lhs.out_dim, model, -1.0, 1.0);
      try {
        double di = max_abs_diff(lhs.run_implement(p, a), rhs.run_implement(p, a));
        double du = max_abs_diff(lhs.run_update(p, a, b), rhs.run_update(p, a, b));
        double dr = max_abs_diff(lhs.run_request(p, a, b), rhs.run_request(p, a, b));
        report.max_dev_implement = std::max(report.max_dev_implement, di);
        report.max_dev_update = std::max(report.max_dev_update, du);
        report.max_dev_request = std::max(report.max_dev_request, dr);
        break;
      } catch (const ModelDomainError&) {
        ++report.resamples;
        if (attempt >= 10) throw;
      }
    }
  }
  return report;
}

}  // namespace detail

// Series functoriality: descend(F * G) against descend(F) * descend(G),
// extensionally at random points. The equality is exact; observed deviation
// is floating-point noise.
inline FunctorialityReport verify_functoriality(const DescentConfig& cfg,
                                                const ParamFn& f,
                                                const ParamFn& g,
                                                std::size_t trials, double tol,
                                                SplitMix64& rng) {
  Learner composite = descend(cfg, compose_para(f, g));
  Learner split = compose_learn(descend(cfg, f), descend(cfg, g));
  return detail::compare_learners_valid(composite, split, cfg.model, trials,
                                        tol, rng);
}

// Monoidal functoriality: descend(F || G) against descend(F) || descend(G).
inline FunctorialityReport verify_functoriality_parallel(
    const DescentConfig& cfg, const ParamFn& f, const ParamFn& g,
    std::size_t trials, double tol, SplitMix64& rng) {
  Learner tensored = descend(cfg, parallel_para(f, g));
  Learner split = parallel_learn(descend(cfg, f), descend(cfg, g));
  return detail::compare_learners_valid(tensored, split, cfg.model, trials,
                                        tol, rng);
}

// Trajectory of repeated requests at fixed parameters and target. A domain
// violation truncates the trajectory and records the marker instead of
// failing.
struct RequestTrajectory {
  std::vector<Vec> points;  // starts at a; up to steps further points
  bool truncated = false;
  std::string truncation_reason;
};

inline RequestTrajectory request_iterate(const DescentConfig& cfg,
                                         const ParamFn& f, const Vec& p,
                                         const Vec& a, const Vec& b,
                                         std::size_t steps) {
  if (steps < 1) {
    throw std::invalid_argument("request_iterate: requires steps >= 1");
  }
  Learner learner = descend(cfg, f);
  RequestTrajectory traj;
  traj.points.push_back(a);
  Vec current = a;
  for (std::size_t s = 0; s < steps; ++s) {
    try {
      current = learner.run_request(p, current, b);
    } catch (const ModelDomainError& err) {
      traj.truncated = true;
      traj.truncation_reason = err.what();
      break;
    }
    traj.points.push_back(current);
  }
  return traj;
}

}  // namespace complearn

#endif  // COMPLEARN_DESCENT_HPP_
