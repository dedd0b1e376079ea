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

#ifndef COMPLEARN_LEARNER_HPP_
#define COMPLEARN_LEARNER_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>

#include "complearn/rng.hpp"
#include "complearn/vec.hpp"

namespace complearn {

// A learner A -> B: a parameter space plus implement/update/request
// functions, all pure.
//
//   implement : P x A     -> B   the hypothesis at parameter p
//   update    : P x A x B -> P   the learning step on one training datum
//   request   : P x A x B -> A   the value passed back to upstream learners
struct Learner {
  using Implement = std::function<Vec(const Vec&, const Vec&)>;
  using Step = std::function<Vec(const Vec&, const Vec&, const Vec&)>;

  std::size_t param_dim = 0;
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  Implement implement;
  Step update;
  Step request;
  std::string label;

  Vec run_implement(const Vec& p, const Vec& a) const {
    require_dim(label + ": param", param_dim, p.dim());
    require_dim(label + ": input", in_dim, a.dim());
    Vec b = implement(p, a);
    require_dim(label + ": output", out_dim, b.dim());
    return b;
  }

  Vec run_update(const Vec& p, const Vec& a, const Vec& b) const {
    require_dim(label + ": param", param_dim, p.dim());
    require_dim(label + ": input", in_dim, a.dim());
    require_dim(label + ": target", out_dim, b.dim());
    Vec p2 = update(p, a, b);
    require_dim(label + ": updated param", param_dim, p2.dim());
    return p2;
  }

  Vec run_request(const Vec& p, const Vec& a, const Vec& b) const {
    require_dim(label + ": param", param_dim, p.dim());
    require_dim(label + ": input", in_dim, a.dim());
    require_dim(label + ": target", out_dim, b.dim());
    Vec a2 = request(p, a, b);
    require_dim(label + ": requested input", in_dim, a2.dim());
    return a2;
  }
};

// Series composite. With L1 = (P, I, U, r) and L2 = (Q, J, V, s):
//   implement((p|q), a)  = J(q, I(p, a))
//   update((p|q), a, c)  = (U(p, a, b') | V(q, b, c))  where b = I(p, a),
//                          b' = s(q, b, c)
//   request((p|q), a, c) = r(p, a, b')
// I(p, a) is evaluated once per update call and reused for both factors.
inline Learner compose_learn(const Learner& l1, const Learner& l2) {
  if (l1.out_dim != l2.in_dim) {
    throw DimensionError("compose_learn(" + l1.label + ", " + l2.label + ")",
                         l1.out_dim, l2.in_dim);
  }
  Learner out;
  out.param_dim = l1.param_dim + l2.param_dim;
  out.in_dim = l1.in_dim;
  out.out_dim = l2.out_dim;
  out.label = "(" + l1.label + " * " + l2.label + ")";
  out.implement = [l1, l2](const Vec& pq, const Vec& a) {
    Vec p = slice(pq, 0, l1.param_dim);
    Vec q = slice(pq, l1.param_dim, pq.dim());
    return l2.run_implement(q, l1.run_implement(p, a));
  };
  out.update = [l1, l2](const Vec& pq, const Vec& a, const Vec& c) {
    Vec p = slice(pq, 0, l1.param_dim);
    Vec q = slice(pq, l1.param_dim, pq.dim());
    Vec b = l1.run_implement(p, a);
    Vec back = l2.run_request(q, b, c);
    return concat(l1.run_update(p, a, back), l2.run_update(q, b, c));
  };
  out.request = [l1, l2](const Vec& pq, const Vec& a, const Vec& c) {
    Vec p = slice(pq, 0, l1.param_dim);
    Vec q = slice(pq, l1.param_dim, pq.dim());
    Vec b = l1.run_implement(p, a);
    return l1.run_request(p, a, l2.run_request(q, b, c));
  };
  return out;
}

// Parallel composite: blockwise in every slot, left factor first.
inline Learner parallel_learn(const Learner& l1, const Learner& l2) {
  Learner out;
  out.param_dim = l1.param_dim + l2.param_dim;
  out.in_dim = l1.in_dim + l2.in_dim;
  out.out_dim = l1.out_dim + l2.out_dim;
  out.label = "(" + l1.label + " || " + l2.label + ")";
  auto split3 = [l1](const Vec& pq, const Vec& ac, const Vec& bd) {
    return std::array<Vec, 6>{
        slice(pq, 0, l1.param_dim), slice(pq, l1.param_dim, pq.dim()),
        slice(ac, 0, l1.in_dim),    slice(ac, l1.in_dim, ac.dim()),
        slice(bd, 0, l1.out_dim),   slice(bd, l1.out_dim, bd.dim())};
  };
  out.implement = [l1, l2](const Vec& pq, const Vec& ac) {
    Vec p = slice(pq, 0, l1.param_dim);
    Vec q = slice(pq, l1.param_dim, pq.dim());
    Vec a = slice(ac, 0, l1.in_dim);
    Vec c = slice(ac, l1.in_dim, ac.dim());
    return concat(l1.run_implement(p, a), l2.run_implement(q, c));
  };
  out.update = [l1, l2, split3](const Vec& pq, const Vec& ac, const Vec& bd) {
    auto [p, q, a, c, b, d] = split3(pq, ac, bd);
    return concat(l1.run_update(p, a, b), l2.run_update(q, c, d));
  };
  out.request = [l1, l2, split3](const Vec& pq, const Vec& ac, const Vec& bd) {
    auto [p, q, a, c, b, d] = split3(pq, ac, bd);
    return concat(l1.run_request(p, a, b), l2.run_request(q, c, d));
  };
  return out;
}

// The identity learner (R^0, id, !, pi_2): request projects onto the target.
inline Learner identity_learn(std::size_t n) {
  Learner out;
  out.param_dim = 0;
  out.in_dim = n;
  out.out_dim = n;
  out.label = "id_" + std::to_string(n);
  out.implement = [](const Vec&, const Vec& a) { return a; };
  out.update = [](const Vec&, const Vec&, const Vec&) { return Vec{}; };
  out.request = [](const Vec&, const Vec&, const Vec& b) { return b; };
  return out;
}

// The braiding (R^0, swap, !, swap of the target).
inline Learner braid_learn(std::size_t n, std::size_t m) {
  Learner out;
  out.param_dim = 0;
  out.in_dim = n + m;
  out.out_dim = m + n;
  out.label = "braid_" + std::to_string(n) + "_" + std::to_string(m);
  out.implement = [n](const Vec&, const Vec& ab) {
    return concat(slice(ab, n, ab.dim()), slice(ab, 0, n));
  };
  out.update = [](const Vec&, const Vec&, const Vec&) { return Vec{}; };
  out.request = [m](const Vec&, const Vec&, const Vec& ba) {
    return concat(slice(ba, m, ba.dim()), slice(ba, 0, m));
  };
  return out;
}

// Worst pointwise disagreement between two learners of equal type, sampled
// at random (p, a, b).
struct LearnerDeviation {
  double implement = 0.0;
  double update = 0.0;
  double request = 0.0;

  double max() const { return std::max({implement, update, request}); }
};

inline LearnerDeviation compare_learners(const Learner& l1, const Learner& l2,
                                         std::size_t trials, SplitMix64& rng,
                                         double low = -1.0, double high = 1.0) {
  require_dim("compare_learners: param", l1.param_dim, l2.param_dim);
  require_dim("compare_learners: input", l1.in_dim, l2.in_dim);
  require_dim("compare_learners: output", l1.out_dim, l2.out_dim);
  LearnerDeviation dev;
  for (std::size_t t = 0; t < trials; ++t) {
    Vec p = sample_vec(rng, l1.param_dim, low, high);
    Vec a = sample_vec(rng, l1.in_dim, low, high);
    Vec b = sample_vec(rng, l1.out_dim, low, high);
    dev.implement = std::max(
        dev.implement, max_abs_diff(l1.run_implement(p, a), l2.run_implement(p, a)));
    dev.update = std::max(
        dev.update, max_abs_diff(l1.run_update(p, a, b), l2.run_update(p, a, b)));
    dev.request = std::max(
        dev.request, max_abs_diff(l1.run_request(p, a, b), l2.run_request(p, a, b)));
  }
  return dev;
}

// Extensional equivalence under the identity parameter correspondence:
// implement/update/request agree at `trials` random points within tol.
// Learners of different type are simply not equivalent.
inline bool equivalent_extensionally(const Learner& l1, const Learner& l2,
                                     std::size_t trials, const Tolerance& tol,
                                     SplitMix64& rng) {
  if (l1.param_dim != l2.param_dim || l1.in_dim != l2.in_dim ||
      l1.out_dim != l2.out_dim) {
    return false;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Vec p = sample_vec(rng, l1.param_dim);
    Vec a = sample_vec(rng, l1.in_dim);
    Vec b = sample_vec(rng, l1.out_dim);
    if (!approx_eq(l1.run_implement(p, a), l2.run_implement(p, a), tol)) return false;
    if (!approx_eq(l1.run_update(p, a, b), l2.run_update(p, a, b), tol)) return false;
    if (!approx_eq(l1.run_request(p, a, b), l2.run_request(p, a, b), tol)) return false;
  }
  return true;
}

}  // namespace complearn

#endif  // COMPLEARN_LEARNER_HPP_
