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

#include "streamsub/greedy.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "streamsub/errors.h"

namespace streamsub {
namespace {

std::vector<ElementId> Distinct(std::span<const ElementId> universe) {
  std::vector<ElementId> out(universe.begin(), universe.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SolutionSet Greedy(const SubmodularOracle& oracle,
                   std::span<const ElementId> universe, std::size_t k) {
  const std::vector<ElementId> items = Distinct(universe);
  SolutionSet s(k);
  while (!s.full()) {
    bool found = false;
    ElementId best_id;
    GainProbe best;
    for (ElementId e : items) {
      if (s.Contains(e)) continue;
      const GainProbe probe = ProbeGain(oracle, e, s);
      if (!found || probe.gain > best.gain) {
        found = true;
        best_id = e;
        best = probe;
      }
    }
    if (!found || !(best.gain > 0.0)) break;
    s.Insert(best_id, best.value_with, best.gain);
  }
  return s;
}

SolutionSet LazyGreedy(const SubmodularOracle& oracle,
                       std::span<const ElementId> universe, std::size_t k) {
  struct Entry {
    double bound;
    ElementId id;
    std::size_t round;  // size of S when bound was computed
    double value_with;
  };
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.id > b.id;
  };
  SolutionSet s(k);
  if (k == 0) return s;
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (ElementId e : Distinct(universe)) {
    const GainProbe probe = ProbeGain(oracle, e, s);
    heap.push(Entry{probe.gain, e, 0, probe.value_with});
  }
  while (!s.full() && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.round != s.size()) {
      const GainProbe probe = ProbeGain(oracle, top.id, s);
      heap.push(Entry{probe.gain, top.id, s.size(), probe.value_with});
      continue;
    }
    // Rounding can leave a stale bound a few ulps under its fresh gain, so
    // refresh everything within tolerance of the leader before choosing.
    const double floor = top.bound - 1e-9 * std::max(1.0, std::abs(top.bound));
    std::vector<Entry> near = {top};
    while (!heap.empty() && heap.top().bound >= floor) {
      Entry e = heap.top();
      heap.pop();
      if (e.round != s.size()) {
        const GainProbe probe = ProbeGain(oracle, e.id, s);
        e = Entry{probe.gain, e.id, s.size(), probe.value_with};
      }
      near.push_back(e);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < near.size(); ++i) {
      if (worse(near[best], near[i])) best = i;
    }
    for (std::size_t i = 0; i < near.size(); ++i) {
      if (i != best) heap.push(near[i]);
    }
    if (!(near[best].bound > 0.0)) break;
    s.Insert(near[best].id, near[best].value_with, near[best].bound);
  }
  return s;
}

}  // namespace streamsub
