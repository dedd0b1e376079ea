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

#ifndef COMPLEARN_PARA_HPP_
#define COMPLEARN_PARA_HPP_

#include <functional>
#include <string>
#include <utility>

#include "complearn/finite_diff.hpp"
#include "complearn/rng.hpp"
#include "complearn/vec.hpp"

namespace complearn {

// Gradients returned by a pullback, one block per input slot.
struct PullbackResult {
  Vec param_grad;
  Vec input_grad;
};

// A parametrised differentiable function R^param_dim x R^in_dim -> R^out_dim
// with an exact pullback (cotangent propagation) for both slots. Pullbacks,
// not Jacobian matrices, are the primitive: composition only ever needs
// w^T J, and pullbacks chain exactly as the chain rule does.
//
// forward and pullback must be pure. Differentiability is the constructor's
// obligation; check_pullback below enforces it statistically against the
// finite-difference oracle.
struct ParamFn {
  using Forward = std::function<Vec(const Vec&, const Vec&)>;
  using Pullback = std::function<PullbackResult(const Vec&, const Vec&, const Vec&)>;

  std::size_t param_dim = 0;
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  Forward forward;
  Pullback pullback;
  std::string label;

  // Dimension-checked calls; all composition below goes through these.
  Vec eval(const Vec& p, const Vec& a) const {
    require_dim(label + ": param", param_dim, p.dim());
    require_dim(label + ": input", in_dim, a.dim());
    Vec b = forward(p, a);
    require_dim(label + ": output", out_dim, b.dim());
    return b;
  }

  PullbackResult vjp(const Vec& p, const Vec& a, const Vec& w) const {
    require_dim(label + ": param", param_dim, p.dim());
    require_dim(label + ": input", in_dim, a.dim());
    require_dim(label + ": cotangent", out_dim, w.dim());
    PullbackResult g = pullback(p, a, w);
    require_dim(label + ": param grad", param_dim, g.param_grad.dim());
    require_dim(label + ": input grad", in_dim, g.input_grad.dim());
    return g;
  }
};

// Series composite: forward((p|q), a) = G(q, F(p, a)).
// Parameter layout: flattened concatenation, left factor first.
inline ParamFn compose_para(const ParamFn& f, const ParamFn& g) {
  if (f.out_dim != g.in_dim) {
    throw DimensionError("compose_para(" + f.label + ", " + g.label + ")",
                         f.out_dim, g.in_dim);
  }
  ParamFn out;
  out.param_dim = f.param_dim + g.param_dim;
  out.in_dim = f.in_dim;
  out.out_dim = g.out_dim;
  out.label = "(" + f.label + " * " + g.label + ")";
  out.forward = [f, g](const Vec& pq, const Vec& a) {
    Vec p = slice(pq, 0, f.param_dim);
    Vec q = slice(pq, f.param_dim, pq.dim());
    return g.eval(q, f.eval(p, a));
  };
  out.pullback = [f, g](const Vec& pq, const Vec& a, const Vec& w) {
    Vec p = slice(pq, 0, f.param_dim);
    Vec q = slice(pq, f.param_dim, pq.dim());
    Vec mid = f.eval(p, a);
    PullbackResult gg = g.vjp(q, mid, w);
    PullbackResult gf = f.vjp(p, a, gg.input_grad);
    return PullbackResult{concat(gf.param_grad, gg.param_grad), gf.input_grad};
  };
  return out;
}

// Parallel composite: forward((p|q), (a|c)) = (F(p, a) | G(q, c)).
// Blockwise in every slot, left factor first.
inline ParamFn parallel_para(const ParamFn& f, const ParamFn& g) {
  ParamFn out;
  out.param_dim = f.param_dim + g.param_dim;
  out.in_dim = f.in_dim + g.in_dim;
  out.out_dim = f.out_dim + g.out_dim;
  out.label = "(" + f.label + " || " + g.label + ")";
  out.forward = [f, g](const Vec& pq, const Vec& ac) {
    Vec p = slice(pq, 0, f.param_dim);
    Vec q = slice(pq, f.param_dim, pq.dim());
    Vec a = slice(ac, 0, f.in_dim);
    Vec c = slice(ac, f.in_dim, ac.dim());
    return concat(f.eval(p, a), g.eval(q, c));
  };
  out.pullback = [f, g](const Vec& pq, const Vec& ac, const Vec& w) {
    Vec p = slice(pq, 0, f.param_dim);
    Vec q = slice(pq, f.param_dim, pq.dim());
    Vec a = slice(ac, 0, f.in_dim);
    Vec c = slice(ac, f.in_dim, ac.dim());
    PullbackResult gf = f.vjp(p, a, slice(w, 0, f.out_dim));
    PullbackResult gg = g.vjp(q, c, slice(w, f.out_dim, w.dim()));
    return PullbackResult{concat(gf.param_grad, gg.param_grad),
                          concat(gf.input_grad, gg.input_grad)};
  };
  return out;
}

inline ParamFn identity_para(std::size_t n) {
  ParamFn out;
  out.param_dim = 0;
  out.in_dim = n;
  out.out_dim = n;
  out.label = "id_" + std::to_string(n);
  out.forward = [](const Vec&, const Vec& a) { return a; };
  out.pullback = [](const Vec&, const Vec&, const Vec& w) {
    return PullbackResult{Vec{}, w};
  };
  return out;
}

// Wraps a differentiable function as a trivially parametrised morphism.
inline ParamFn lift_function(std::size_t in_dim, std::size_t out_dim,
                             std::function<Vec(const Vec&)> f,
                             std::function<Vec(const Vec&, const Vec&)> f_pullback,
                             std::string label) {
  ParamFn out;
  out.param_dim = 0;
  out.in_dim = in_dim;
  out.out_dim = out_dim;
  out.label = std::move(label);
  out.forward = [f = std::move(f)](const Vec&, const Vec& a) { return f(a); };
  out.pullback = [pb = std::move(f_pullback)](const Vec&, const Vec& a,
                                              const Vec& w) {
    return PullbackResult{Vec{}, pb(a, w)};
  };
  return out;
}

// The parametrised constant P x R^0 -> P: forward(p, ()) = p.
inline ParamFn param_constant(std::size_t n) {
  ParamFn out;
  out.param_dim = n;
  out.in_dim = 0;
  out.out_dim = n;
  out.label = "const_" + std::to_string(n);
  out.forward = [](const Vec& p, const Vec&) { return p; };
  out.pullback = [](const Vec&, const Vec&, const Vec& w) {
    return PullbackResult{w, Vec{}};
  };
  return out;
}

// Block swap (a|b) -> (b|a) as a trivially parametrised morphism.
inline ParamFn braid_para(std::size_t n, std::size_t m) {
  auto swap_blocks = [n](const Vec& ab) {
    return concat(slice(ab, n, ab.dim()), slice(ab, 0, n));
  };
  auto swap_back = [m](const Vec&, const Vec& w) {
    return concat(slice(w, m, w.dim()), slice(w, 0, m));
  };
  return lift_function(n + m, m + n, swap_blocks, swap_back,
                       "swap_" + std::to_string(n) + "_" + std::to_string(m));
}

// Checks the analytic pullback against the finite-difference oracle at
// random interior points, jointly in both slots. Returns the worst
// relative deviation (absolute below magnitude 1).
inline double pullback_fd_deviation(const ParamFn& f, SplitMix64& rng,
                                    std::size_t points = 5, double h = 1e-6,
                                    double low = -1.0, double high = 1.0) {
  double worst = 0.0;
  for (std::size_t t = 0; t < points; ++t) {
    Vec p = sample_vec(rng, f.param_dim, low, high);
    Vec a = sample_vec(rng, f.in_dim, low, high);
    Vec w = sample_vec(rng, f.out_dim, low, high);
    PullbackResult analytic = f.vjp(p, a, w);
    Vec joint = concat(p, a);
    auto joint_fn = [&f](const Vec& x) {
      return f.eval(slice(x, 0, f.param_dim), slice(x, f.param_dim, x.dim()));
    };
    Vec numeric = finite_diff_pullback(joint_fn, joint, w, h);
    Vec analytic_joint = concat(analytic.param_grad, analytic.input_grad);
    for (std::size_t i = 0; i < joint.dim(); ++i) {
      double denom = std::max({1.0, std::fabs(analytic_joint[i]),
                               std::fabs(numeric[i])});
      worst = std::max(worst, std::fabs(analytic_joint[i] - numeric[i]) / denom);
    }
  }
  return worst;
}

inline bool check_pullback(const ParamFn& f, SplitMix64& rng,
                           std::size_t points = 5, double rel_tol = 1e-5,
                           double h = 1e-6) {
  return pullback_fd_deviation(f, rng, points, h) <= rel_tol;
}

}  // namespace complearn

#endif  // COMPLEARN_PARA_HPP_
