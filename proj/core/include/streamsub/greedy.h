// Copyright 2026 The Authors.
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

#ifndef STREAMSUB_GREEDY_H_
#define STREAMSUB_GREEDY_H_

#include <cstddef>
#include <span>

#include "streamsub/oracle.h"

namespace streamsub {

// Offline greedy: k rounds of argmax marginal gain over `universe`, ties to
// the lowest id. Stops early once the best gain is <= 0. Each insertion's
// threshold entry is its own gain.
SolutionSet Greedy(const SubmodularOracle& oracle,
                   std::span<const ElementId> universe, std::size_t k);

// Same selection as Greedy() using stale upper bounds in a priority queue.
// Identical output requires a submodular oracle.
SolutionSet LazyGreedy(const SubmodularOracle& oracle,
                       std::span<const ElementId> universe, std::size_t k);

}  // namespace streamsub

#endif  // STREAMSUB_GREEDY_H_
