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

#include "streamsub/exact.h"

#include <gtest/gtest.h>

#include "streamsub/errors.h"
#include "streamsub/instances.h"
#include "streamsub/objectives.h"
#include "support/reference.h"

namespace streamsub {
namespace {

TEST(BruteForceTest, StarKOne) {
  auto star = testing::Star();
  const OptResult r = BruteForceOpt(*star, 1);
  EXPECT_EQ(r.value, 6.0);
  EXPECT_EQ(r.witness, MakeIds({0}));
}

TEST(BruteForceTest, KZero) {
  auto star = testing::Star();
  const OptResult r = BruteForceOpt(*star, 0);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.witness.empty());
}

TEST(BruteForceTest, IndexInstance) {
  const InstanceBundle b = GenIndexInstance(3, 3, {true, false, true}, 1);
  EXPECT_EQ(BruteForceOpt(*b.oracle, 3).value, 5.0);
}

TEST(BruteForceTest, LexicographicWitness) {
  ModularObjective f({1.0, 2.0, 2.0, 1.0});
  EXPECT_EQ(BruteForceOpt(f, 1).witness, MakeIds({1}));
  EXPECT_EQ(BruteForceOpt(f, 3).witness, MakeIds({0, 1, 2}));
  BruteForceOptions mono;
  mono.assume_monotone = true;
  EXPECT_EQ(BruteForceOpt(f, 3, mono).witness, MakeIds({0, 1, 2}));
}

TEST(BruteForceTest, MatchesReferenceAndIsMonotoneInK) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const InstanceBundle b = GenRandomGraph(10, 0.2, seed);
    double previous = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
      const OptResult r = BruteForceOpt(*b.oracle, k);
      EXPECT_EQ(r.value, testing::RefOpt(*b.oracle, k));
      EXPECT_EQ(b.oracle->Eval(r.witness), r.value);
      EXPECT_GE(r.value, previous);
      BruteForceOptions mono;
      mono.assume_monotone = true;
      EXPECT_EQ(BruteForceOpt(*b.oracle, k, mono).value, r.value);
      previous = r.value;
    }
  }
}

TEST(BruteForceTest, Guard) {
  ModularObjective f(std::vector<double>(40, 1.0));
  try {
    BruteForceOpt(f, 10);
    FAIL() << "expected SizeError";
  } catch (const SizeError& e) {
    EXPECT_EQ(e.limit(), 5'000'000u);
    EXPECT_EQ(e.required(), CountSubsets(40, 10, false));
  }
}

TEST(CountSubsetsTest, Values) {
  EXPECT_EQ(CountSubsets(5, 2, true), 10u);
  EXPECT_EQ(CountSubsets(5, 2, false), 16u);
  EXPECT_EQ(CountSubsets(3, 7, false), 8u);
}

TEST(VerifyRatioTest, Examples) {
  EXPECT_TRUE(VerifyRatio(5, 9, 5.0 / 9.0).passed);
  EXPECT_FALSE(VerifyRatio(4.4, 9, 5.0 / 9.0).passed);
  EXPECT_TRUE(VerifyRatio(9, 9, 1.0).passed);
  EXPECT_THROW(VerifyRatio(1, 0, 0.5), ParameterError);
  const RatioCheck c = VerifyRatio(6, 8, 0.5);
  EXPECT_DOUBLE_EQ(c.ratio, 0.75);
  EXPECT_DOUBLE_EQ(c.slack, 2.0);
}

}  // namespace
}  // namespace streamsub
