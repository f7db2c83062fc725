// Copyright 2026 The habcsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HABCSM_HABCSM_HPP_
#define HABCSM_HABCSM_HPP_

#include "habcsm/model.hpp"
#include "habcsm/interaction.hpp"
#include "habcsm/habc.hpp"
#include "habcsm/strategy.hpp"
#include "habcsm/verifier.hpp"
#include "habcsm/io.hpp"
#include "habcsm/bench.hpp"

#endif  // HABCSM_HABCSM_HPP_
