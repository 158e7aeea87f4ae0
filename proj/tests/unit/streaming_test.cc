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

#include "streamsub/streaming.h"

#include <gtest/gtest.h>

#include <cmath>

#include "streamsub/exact.h"
#include "streamsub/instances.h"
#include "streamsub/objectives.h"
#include "support/reference.h"

namespace streamsub {
namespace {

using testing::Star;

std::vector<std::uint32_t> Members(const SolutionSet& s) {
  std::vector<std::uint32_t> out;
  for (ElementId e : s.members()) out.push_back(e.index);
  return out;
}

// Every insertion cleared the threshold it recorded.
void ExpectThresholdsHold(const SolutionSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_GE(s.gains()[i], s.thresholds()[i]) << "insertion " << i;
  }
}

TEST(SchedulePassTest, EmptyStream) {
  auto star = Star();
  const std::vector<ElementId> none;
  const Stream stream(none);
  const SolutionSet s =
      SchedulePass(*star, stream, 2, ThresholdSchedule::Flat(1.0, 0));
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.value(), 0.0);
}

TEST(SchedulePassTest, StarOnlyCenterClearsFour) {
  auto star = Star();
  const auto ids = MakeIds({3, 1, 0, 2, 4, 5});
  const Stream stream(ids);
  const SolutionSet s =
      SchedulePass(*star, stream, 1, ThresholdSchedule::Flat(4.0, ids.size()));
  EXPECT_EQ(Members(s), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(stream.reads(), ids.size());
}

TEST(SchedulePassTest, ModularTwoPhases) {
  ModularObjective f({3.0, 2.0});
  const auto ids = MakeIds({0, 1});
  const Stream stream(ids);
  const SolutionSet s =
      SchedulePass(f, stream, 2, ThresholdSchedule({{0.5, 3.0}, {1.0, 2.0}}, 2));
  EXPECT_EQ(s.value(), 5.0);
  ExpectThresholdsHold(s);
}

TEST(SievePassTest, KOneTakesFirstHalfOpt) {
  ModularObjective f({1.0, 2.5, 4.0, 5.0});
  const auto ids = MakeIds({0, 1, 2, 3});
  const Stream stream(ids);
  const SolutionSet s = SievePass(f, stream, 1, 5.0);
  EXPECT_EQ(Members(s), (std::vector<std::uint32_t>{1}));
}

TEST(SievePassTest, EmptyStreamAndBadGuess) {
  ModularObjective f({1.0});
  const std::vector<ElementId> none;
  EXPECT_TRUE(SievePass(f, Stream(none), 1, 1.0).empty());
  EXPECT_THROW(SievePass(f, Stream(none), 1, 0.0), std::invalid_argument);
}

TEST(SievePassTest, HalfOptOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const InstanceBundle b = GenRandomGraph(10, 0.25, seed);
    const double opt = testing::RefOpt(*b.oracle, 3);
    const auto ids = Shuffle(b, seed).Ids();
    const SolutionSet s = SievePass(*b.oracle, Stream(ids), 3, opt);
    EXPECT_GE(s.value(), (0.5 - 1e-9) * opt);
    ExpectThresholdsHold(s);
    EXPECT_TRUE(NearlyEqual(b.oracle->Eval(s.members()), s.value()));
  }
}

TEST(SmallKPassTest, KOneNeedsFullOpt) {
  ModularObjective f({1.0, 4.0, 5.0, 5.0});
  const auto ids = MakeIds({0, 1, 2, 3});
  const SolutionSet s = SmallKPass(f, Stream(ids), 1, 5.0);
  EXPECT_EQ(Members(s), (std::vector<std::uint32_t>{2}));
}

TEST(SmallKPassTest, FullRunsBeatOneMinusInverseE) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const InstanceBundle b = GenRandomGraph(9, 0.3, seed);
    const double opt = testing::RefOpt(*b.oracle, 2);
    const auto ids = Shuffle(b, seed + 100).Ids();
    const SolutionSet s = SmallKPass(*b.oracle, Stream(ids), 2, opt);
    if (s.full()) EXPECT_GE(s.value(), (1 - 1 / std::exp(1.0) - 1e-9) * opt);
  }
}

TEST(SalsaTest, DominatesEveryCandidate) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const InstanceBundle b = GenRandomGraph(12, 0.2, seed);
    const double opt = testing::RefOpt(*b.oracle, 3);
    const auto ids = Shuffle(b, seed).Ids();
    const StreamResult r = Salsa(*b.oracle, Stream(ids), 3, opt);
    ASSERT_EQ(r.candidates.size(), 5u);
    EXPECT_EQ(r.candidates[0].label, "dense");
    EXPECT_EQ(r.candidates[4].label, "sieve");
    bool matched = false;
    for (const CandidateReport& c : r.candidates) {
      EXPECT_LE(c.value, r.solution.value());
      matched |= c.value == r.solution.value();
    }
    EXPECT_TRUE(matched);
    const SolutionSet sieve = SievePass(*b.oracle, Stream(ids), 3, opt);
    EXPECT_GE(r.solution.value(), sieve.value());
    EXPECT_GE(r.solution.value(), (0.5 - 1e-9) * opt);
    EXPECT_LE(r.peak_stored, 15u);
  }
}

TEST(SalsaTest, TiesGoToEarliestCandidate) {
  ModularObjective f({1.0, 1.0});
  const auto ids = MakeIds({0, 1});
  // Every candidate with a reachable threshold ends at the same value.
  const StreamResult r = Salsa(f, Stream(ids), 2, 2.0);
  for (const CandidateReport& c : r.candidates) {
    if (c.value == r.solution.value()) {
      EXPECT_EQ(r.winner, c.label);
      break;
    }
  }
}

TEST(SalsaTest, SingleRead) {
  const InstanceBundle b = GenRandomGraph(12, 0.2, 3);
  const auto ids = CanonicalPlan(b).Ids();
  const Stream stream(ids);
  b.oracle->ResetStats();
  Salsa(*b.oracle, stream, 3, 8.0);
  EXPECT_EQ(stream.reads(), ids.size());
  EXPECT_LE(b.oracle->stats().max_query_size, 3u);
  EXPECT_LE(b.oracle->stats().eval_count, 5 * ids.size());
}

TEST(TwoPassTest, ModularTightExample) {
  // k=2, OPT=9: one element with gain exactly T1 = 3, one with T2 = 2.
  ModularObjective f({3.0, 2.0, 4.5, 4.5});
  const auto stream_ids = MakeIds({0, 1});
  const SolutionSet s = TwoPass(f, Stream(stream_ids), 2, 9.0);
  EXPECT_EQ(s.value(), 5.0);
  EXPECT_DOUBLE_EQ(s.value(), 5.0 / 9.0 * 9.0);
  ExpectThresholdsHold(s);
}

TEST(TwoPassTest, EmptyAndReads) {
  ModularObjective f({1.0});
  const std::vector<ElementId> none;
  EXPECT_TRUE(TwoPass(f, Stream(none), 1, 1.0).empty());
  const auto ids = MakeIds({0});
  const Stream stream(ids);
  TwoPass(f, stream, 1, 10.0);
  EXPECT_EQ(stream.reads(), 2u);
}

TEST(PPassTest, ReadsAndThresholds) {
  const InstanceBundle b = GenRandomGraph(10, 0.3, 1);
  const auto ids = CanonicalPlan(b).Ids();
  for (std::size_t p : {1u, 2u, 3u, 5u}) {
    const Stream stream(ids);
    const SolutionSet s = PPass(*b.oracle, stream, 3, 7.0, p);
    EXPECT_EQ(stream.reads(), p * ids.size());
    ExpectThresholdsHold(s);
  }
}

TEST(PPassTest, OneEqualsHalfThreshold) {
  ModularObjective f({1.0, 2.0, 3.0, 0.5});
  const auto ids = MakeIds({0, 1, 2, 3});
  const SolutionSet a = PPass(f, Stream(ids), 2, 4.0, 1);
  const SolutionSet b = SchedulePass(f, Stream(ids), 2,
                                     ThresholdSchedule::Flat(1.0, ids.size()));
  EXPECT_EQ(Members(a), Members(b));
}

TEST(PPassTest, TwoMatchesTwoPass) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const InstanceBundle b = GenRandomPoints(9, 2, seed);
    const double opt = testing::RefOpt(*b.oracle, 3);
    const auto ids = Shuffle(b, seed).Ids();
    EXPECT_EQ(Members(PPass(*b.oracle, Stream(ids), 3, opt, 2)),
              Members(TwoPass(*b.oracle, Stream(ids), 3, opt)));
  }
}

TEST(PPassTest, ThreePassBound) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const InstanceBundle b = GenRandomGraph(11, 0.2, seed);
    const double opt = testing::RefOpt(*b.oracle, 3);
    const auto ids = Shuffle(b, seed).Ids();
    const SolutionSet s = PPass(*b.oracle, Stream(ids), 3, opt, 3);
    EXPECT_GE(s.value(), (37.0 / 64.0 - 1e-9) * opt);
  }
}

}  // namespace
}  // namespace streamsub
