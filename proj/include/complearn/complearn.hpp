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

#ifndef COMPLEARN_COMPLEARN_HPP_
#define COMPLEARN_COMPLEARN_HPP_

#include "complearn/bimonoid.hpp"
#include "complearn/descent.hpp"
#include "complearn/error_model.hpp"
#include "complearn/finite_diff.hpp"
#include "complearn/io.hpp"
#include "complearn/learner.hpp"
#include "complearn/nnet.hpp"
#include "complearn/para.hpp"
#include "complearn/report.hpp"
#include "complearn/rng.hpp"
#include "complearn/train.hpp"
#include "complearn/vec.hpp"
#include "complearn/verify.hpp"

#endif  // COMPLEARN_COMPLEARN_HPP_
