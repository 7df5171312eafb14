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

#ifndef COLORPACK_PARTITION_HPP_
#define COLORPACK_PARTITION_HPP_

#include <optional>
#include <vector>

namespace colorpack {

// An ordered multiset of subsets of an ordered color ground set
// C = (c_1, ..., c_q). Member identity is the index in `members`.
struct MultiFamily {
  std::vector<int> ground;
  std::vector<std::vector<int>> members;  // each sorted, subset of ground

  int q() const { return static_cast<int>(ground.size()); }
  int size() const { return static_cast<int>(members.size()); }
};

// Throws std::invalid_argument when a member is not a sorted subset of the
// ground list or the ground list repeats a color.
void validate_family(const MultiFamily& family);

// A split of the member index set into exactly q blocks; block i pairs with
// color c_i. Blocks are kept sorted for determinism.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;
};

// Block i has >= p members, each of cardinality >= i (1-based i).
bool verify_diverse(const MultiFamily& family, const BlockPartition& partition,
                    int p);

// Block i has >= p members, each containing color c_i.
bool verify_starry(const MultiFamily& family, const BlockPartition& partition,
                   int p);

// Rewrites a diverse partition into a starry one for the same p:
//   - forward greedy: scanning blocks 1..q and members in index order, pull
//     members containing c_1 until p are held; they form the c_1-star
//     (plus any leftover {c_1} singletons of block 1, which nothing else
//     could ever host);
//   - project c_1 away, rebuild a diverse partition on q-1 colors (blocks
//     past the greedy stop move down one slot; blocks before it are rebalanced
//     by a backward greedy pass that keeps p members per slot and shifts the
//     surplus toward block 1);
//   - recurse.
// Deterministic given member order; throws std::domain_error when the input
// partition is not (p,C)-diverse.
BlockPartition diverse_to_starry(const MultiFamily& family,
                                 const BlockPartition& diverse, int p);

struct PartitionCaps {
  int member_cap = 12;
  int q_cap = 4;
};

// Exhaustive search for a starry (resp. diverse) partition; std::nullopt when
// none exists. Throws CapacityError above the caps.
std::optional<BlockPartition> brute_force_starry(const MultiFamily& family,
                                                 int p,
                                                 PartitionCaps caps = {});
std::optional<BlockPartition> brute_force_diverse(const MultiFamily& family,
                                                  int p,
                                                  PartitionCaps caps = {});

// Removes color c from the ground list and every member, preserving order.
// Throws std::domain_error when c is not in the ground list.
MultiFamily project_away(const MultiFamily& family, int c);

}  // namespace colorpack

#endif  // COLORPACK_PARTITION_HPP_
