// Copyright 2026 The colorpack Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "colorpack/errors.hpp"
#include "colorpack/partition.hpp"
#include "colorpack/rng.hpp"
#include "doctest.h"

using namespace colorpack;

namespace {

// The twelve-member family over {1,2,3} used throughout: four singletons,
// four pairs, four full sets.
MultiFamily worked_family() {
  MultiFamily f;
  f.ground = {1, 2, 3};
  f.members = {{1},       {2},       {3},       {1},
               {1, 3},    {1, 3},    {2, 3},    {1, 3},
               {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
  return f;
}

BlockPartition worked_diverse() {
  BlockPartition p;
  p.blocks = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
  return p;
}

MultiFamily starry_not_diverse_family() {
  MultiFamily f;
  f.ground = {1, 2};
  f.members = {{1}, {1}, {2}, {2}};
  return f;
}

// Every way to split the member index set into q labeled blocks.
bool exhaustively_lacks_diverse(const MultiFamily& f, int p) {
  const int q = f.q();
  const int n = f.size();
  std::vector<int> assign(n, 0);
  for (;;) {
    BlockPartition partition;
    partition.blocks.assign(q, {});
    for (int i = 0; i < n; ++i) partition.blocks[assign[i]].push_back(i);
    if (verify_diverse(f, partition, p)) return false;
    int i = 0;
    while (i < n && assign[i] == q - 1) assign[i++] = 0;
    if (i == n) break;
    ++assign[i];
  }
  return true;
}

}  // namespace

TEST_CASE("the worked family admits its natural diverse partition at p=4") {
  CHECK(verify_diverse(worked_family(), worked_diverse(), 4));
  CHECK_FALSE(verify_diverse(worked_family(), worked_diverse(), 5));
}

TEST_CASE("the worked starry partition verifies") {
  BlockPartition starry;
  starry.blocks = {{0, 3, 4, 5}, {1, 6, 8, 9}, {2, 7, 10, 11}};
  CHECK(verify_starry(worked_family(), starry, 4));
  CHECK_FALSE(verify_diverse(worked_family(), starry, 4));
}

TEST_CASE("the four-singleton family is starry but exhaustively not diverse") {
  const MultiFamily f = starry_not_diverse_family();
  BlockPartition starry;
  starry.blocks = {{0, 1}, {2, 3}};
  CHECK(verify_starry(f, starry, 2));
  CHECK(exhaustively_lacks_diverse(f, 2));
  CHECK(brute_force_starry(f, 2).has_value());
  CHECK_FALSE(brute_force_diverse(f, 2).has_value());
}

TEST_CASE("single-color families are trivially starry") {
  MultiFamily f;
  f.ground = {7};
  f.members = {{7}, {7}, {7}};
  BlockPartition p;
  p.blocks = {{0, 1, 2}};
  CHECK(verify_diverse(f, p, 3));
  CHECK(verify_starry(f, p, 3));
  CHECK(diverse_to_starry(f, p, 3).blocks == p.blocks);
}

TEST_CASE("verifiers reject malformed partitions") {
  const MultiFamily f = starry_not_diverse_family();
  BlockPartition wrong_count;
  wrong_count.blocks = {{0, 1, 2, 3}};
  CHECK_THROWS_AS(verify_diverse(f, wrong_count, 1), std::invalid_argument);

  BlockPartition overlap;
  overlap.blocks = {{0, 1, 2}, {2, 3}};
  CHECK_THROWS_AS(verify_starry(f, overlap, 1), std::invalid_argument);

  BlockPartition missing;
  missing.blocks = {{0, 1}, {3}};
  CHECK_THROWS_AS(verify_diverse(f, missing, 1), std::invalid_argument);
}

TEST_CASE("a block holding the empty set can never be starry") {
  MultiFamily f;
  f.ground = {1};
  f.members = {{}};
  BlockPartition p;
  p.blocks = {{0}};
  CHECK_FALSE(verify_starry(f, p, 1));
}

TEST_CASE("the constructive rewrite reproduces the worked starry partition") {
  const BlockPartition starry =
      diverse_to_starry(worked_family(), worked_diverse(), 4);
  CHECK(verify_starry(worked_family(), starry, 4));
  // Deterministic forward/backward greedy lands exactly on the hand-worked one.
  CHECK(starry.blocks ==
        std::vector<std::vector<int>>{
            {0, 3, 4, 5}, {1, 6, 8, 9}, {2, 7, 10, 11}});
}

TEST_CASE("rewrite requires a genuinely diverse input") {
  BlockPartition shuffled;
  shuffled.blocks = {{8, 9, 10, 11}, {4, 5, 6, 7}, {0, 1, 2, 3}};
  // Block 3 holds singletons, so this split is not diverse.
  CHECK_THROWS_AS(diverse_to_starry(worked_family(), shuffled, 4),
                  std::domain_error);
}

TEST_CASE("leftover {c1} singletons ride into the first star") {
  // Greedy fills its quota inside block 1 and must still sweep up the
  // remaining {1} singletons, which would die under projection.
  MultiFamily f;
  f.ground = {1, 2};
  f.members = {{1}, {1}, {1}, {1, 2}};
  BlockPartition diverse;
  diverse.blocks = {{0, 1, 2}, {3}};
  REQUIRE(verify_diverse(f, diverse, 1));
  const BlockPartition starry = diverse_to_starry(f, diverse, 1);
  CHECK(verify_starry(f, starry, 1));
  CHECK(starry.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {3}});

  MultiFamily g;
  g.ground = {1, 2};
  g.members = {{1}, {1}, {1, 2}};
  BlockPartition gd;
  gd.blocks = {{0, 1}, {2}};
  REQUIRE(verify_diverse(g, gd, 1));
  const BlockPartition gs = diverse_to_starry(g, gd, 1);
  CHECK(verify_starry(g, gs, 1));
}

TEST_CASE("backward reallocation feeds earlier blocks when greedy runs deep") {
  MultiFamily f;
  f.ground = {1, 2, 3, 4};
  f.members = {{1},          {2},                      // block 1
               {2, 3},       {2, 4},                   // block 2
               {1, 3, 4},    {1, 2, 3},                // block 3
               {1, 2, 3, 4}, {1, 2, 3, 4}};            // block 4
  BlockPartition diverse;
  diverse.blocks = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  REQUIRE(verify_diverse(f, diverse, 2));
  const BlockPartition starry = diverse_to_starry(f, diverse, 2);
  CHECK(verify_starry(f, starry, 2));
}

TEST_CASE("brute force finds starry partitions exactly when they exist") {
  CHECK(brute_force_starry(worked_family(), 4).has_value());
  const auto found = brute_force_starry(worked_family(), 4);
  CHECK(verify_starry(worked_family(), *found, 4));

  MultiFamily no_two;
  no_two.ground = {1, 2};
  no_two.members = {{1}, {1}};
  CHECK_FALSE(brute_force_starry(no_two, 1).has_value());
}

TEST_CASE("brute force respects its caps") {
  MultiFamily big;
  big.ground = {1};
  big.members.assign(13, {1});
  CHECK_THROWS_AS(brute_force_starry(big, 1), CapacityError);
  CHECK(brute_force_starry(big, 1, PartitionCaps{16, 4}).has_value());

  MultiFamily wide;
  wide.ground = {1, 2, 3, 4, 5};
  wide.members = {{1}};
  CHECK_THROWS_AS(brute_force_diverse(wide, 1), CapacityError);
}

TEST_CASE("project_away strips one color from ground and members") {
  MultiFamily f;
  f.ground = {1, 2};
  f.members = {{1, 2}, {2}};
  const MultiFamily projected = project_away(f, 1);
  CHECK(projected.ground == std::vector<int>{2});
  CHECK(projected.members ==
        std::vector<std::vector<int>>{{2}, {2}});
  CHECK(projected.q() == f.q() - 1);
  CHECK_THROWS_AS(project_away(f, 9), std::domain_error);

  // Members without the color are untouched.
  MultiFamily g;
  g.ground = {1, 2, 3};
  g.members = {{2, 3}};
  CHECK(project_away(g, 1).members == g.members);
}

TEST_CASE("random diverse families always rewrite into starry ones") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    SplitMix64 local(rng.next());
    const int q = static_cast<int>(local.range(1, 5));
    const int p = static_cast<int>(local.range(1, 4));
    MultiFamily family;
    for (int c = 1; c <= q; ++c) family.ground.push_back(c);
    BlockPartition diverse;
    diverse.blocks.assign(q, {});
    for (int block = 1; block <= q; ++block) {
      const int count = p + static_cast<int>(local.range(0, 2));
      for (int j = 0; j < count; ++j) {
        std::vector<int> colors(family.ground);
        local.shuffle(colors);
        colors.resize(local.range(block, q));
        std::sort(colors.begin(), colors.end());
        diverse.blocks[block - 1].push_back(family.size());
        family.members.push_back(std::move(colors));
      }
    }
    REQUIRE(verify_diverse(family, diverse, p));
    const BlockPartition starry = diverse_to_starry(family, diverse, p);
    CHECK(verify_starry(family, starry, p));
  }
}

TEST_CASE("family validation catches malformed input") {
  MultiFamily bad_ground;
  bad_ground.ground = {1, 1};
  CHECK_THROWS_AS(validate_family(bad_ground), std::invalid_argument);

  MultiFamily unsorted;
  unsorted.ground = {1, 2};
  unsorted.members = {{2, 1}};
  CHECK_THROWS_AS(validate_family(unsorted), std::invalid_argument);

  MultiFamily stray;
  stray.ground = {1, 2};
  stray.members = {{3}};
  CHECK_THROWS_AS(validate_family(stray), std::invalid_argument);
}
