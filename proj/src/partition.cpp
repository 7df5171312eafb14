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

#include "colorpack/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "colorpack/errors.hpp"

namespace colorpack {

void validate_family(const MultiFamily& family) {
  std::vector<int> ground = family.ground;
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw std::invalid_argument("ground list repeats a color");
  }
  for (const auto& member : family.members) {
    if (!std::is_sorted(member.begin(), member.end()) ||
        std::adjacent_find(member.begin(), member.end()) != member.end()) {
      throw std::invalid_argument("member must be a sorted set");
    }
    for (int c : member) {
      if (!std::binary_search(ground.begin(), ground.end(), c)) {
        throw std::invalid_argument("member color outside the ground set");
      }
    }
  }
}

namespace {

void check_partition_shape(const MultiFamily& family,
                           const BlockPartition& partition) {
  if (static_cast<int>(partition.blocks.size()) != family.q()) {
    throw std::invalid_argument("partition must have exactly q blocks");
  }
  std::vector<int> seen(family.size(), 0);
  for (const auto& block : partition.blocks) {
    for (int idx : block) {
      if (idx < 0 || idx >= family.size()) {
        throw std::invalid_argument("member index out of range");
      }
      if (seen[idx]++) {
        throw std::invalid_argument("member assigned to two blocks");
      }
    }
  }
  for (int idx = 0; idx < family.size(); ++idx) {
    if (!seen[idx]) throw std::invalid_argument("member left unassigned");
  }
}

bool contains(const std::vector<int>& sorted_set, int c) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), c);
}

}  // namespace

bool verify_diverse(const MultiFamily& family, const BlockPartition& partition,
                    int p) {
  check_partition_shape(family, partition);
  for (int i = 1; i <= family.q(); ++i) {
    const auto& block = partition.blocks[i - 1];
    if (static_cast<int>(block.size()) < p) return false;
    for (int idx : block) {
      if (static_cast<int>(family.members[idx].size()) < i) return false;
    }
  }
  return true;
}

bool verify_starry(const MultiFamily& family, const BlockPartition& partition,
                   int p) {
  check_partition_shape(family, partition);
  for (int i = 1; i <= family.q(); ++i) {
    const auto& block = partition.blocks[i - 1];
    if (static_cast<int>(block.size()) < p) return false;
    for (int idx : block) {
      if (!contains(family.members[idx], family.ground[i - 1])) return false;
    }
  }
  return true;
}

MultiFamily project_away(const MultiFamily& family, int c) {
  MultiFamily out;
  bool found = false;
  for (int g : family.ground) {
    if (g == c) {
      found = true;
    } else {
      out.ground.push_back(g);
    }
  }
  if (!found) throw std::domain_error("color not in the ground list");
  out.members.reserve(family.members.size());
  for (const auto& member : family.members) {
    std::vector<int> projected;
    projected.reserve(member.size());
    for (int g : member) {
      if (g != c) projected.push_back(g);
    }
    out.members.push_back(std::move(projected));
  }
  return out;
}

namespace {

// One induction level, working on projected member sets but carrying the
// original indices through.
std::vector<std::vector<int>> starry_blocks(
    const std::vector<std::vector<int>>& members,  // indexed by original id
    const std::vector<int>& ground,
    const std::vector<std::vector<int>>& blocks,   // original ids
    int p) {
  const int q = static_cast<int>(ground.size());
  if (q == 1) return blocks;

  const int c1 = ground.front();

  // Forward greedy: pull members containing c1, block order then index order,
  // until p are held. The last block of a diverse partition consists of full
  // sets, so the quota is always met.
  std::vector<int> star;
  std::vector<char> taken(members.size(), 0);
  int stop = 0;  // 1-based block where the greedy stopped (j*)
  for (int i = 1; i <= q && static_cast<int>(star.size()) < p; ++i) {
    for (int idx : blocks[i - 1]) {
      if (static_cast<int>(star.size()) == p) break;
      if (contains(members[idx], c1)) {
        star.push_back(idx);
        taken[idx] = 1;
        stop = i;
      }
    }
  }
  if (static_cast<int>(star.size()) < p) {
    throw std::domain_error("input partition is not diverse: greedy starved");
  }

  // When the greedy never left block 1, its leftovers may still hold {c1}
  // singletons; they vanish under projection, and only a c1-star can host
  // them, so they join the star (stars may exceed p members).
  if (stop == 1) {
    for (int idx : blocks[0]) {
      if (!taken[idx] && members[idx].size() == 1 && members[idx][0] == c1) {
        star.push_back(idx);
        taken[idx] = 1;
      }
    }
    std::sort(star.begin(), star.end());
  }

  // Rebuild a diverse partition for the remainder on ground minus c1.
  std::vector<std::vector<int>> child(q - 1);

  // Blocks past the stop move down one slot unchanged.
  for (int i = stop + 1; i <= q; ++i) child[i - 2] = blocks[i - 1];

  if (stop >= 2) {
    // Objects 1..stop-1: leftovers of blocks 1..stop, with block stop's
    // leftovers merged into the last object. A backward pass keeps p members
    // per object and shifts the surplus toward object 1, which absorbs the
    // rest; moving a member down only relaxes its size requirement.
    std::vector<std::vector<int>> objects(stop - 1);
    for (int i = 1; i <= stop; ++i) {
      auto& target = objects[std::min(i, stop - 1) - 1];
      for (int idx : blocks[i - 1]) {
        if (!taken[idx]) target.push_back(idx);
      }
    }
    for (int t = stop - 1; t >= 2; --t) {
      std::sort(objects[t - 1].begin(), objects[t - 1].end());
      if (static_cast<int>(objects[t - 1].size()) < p) {
        throw std::domain_error(
            "input partition is not diverse: backward pass starved");
      }
      objects[t - 2].insert(objects[t - 2].end(),
                            objects[t - 1].begin() + p, objects[t - 1].end());
      objects[t - 1].resize(p);
    }
    for (int t = 1; t <= stop - 1; ++t) {
      std::sort(objects[t - 1].begin(), objects[t - 1].end());
      child[t - 1] = std::move(objects[t - 1]);
    }
  } else {
    // stop == 1: every remaining block-1 member survives projection
    // (singleton {c1}s joined the star), so block 1's leftovers ride along
    // in the first child block.
    for (int idx : blocks[0]) {
      if (!taken[idx]) child[0].push_back(idx);
    }
    std::sort(child[0].begin(), child[0].end());
  }

  // Project c1 out of the member sets and recurse.
  std::vector<std::vector<int>> projected(members.size());
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    for (int g : members[idx]) {
      if (g != c1) projected[idx].push_back(g);
    }
  }
  // The induction invariant: what we hand down must again be diverse.
  for (int t = 1; t <= q - 1; ++t) {
    if (static_cast<int>(child[t - 1].size()) < p) {
      throw std::logic_error("diverse_to_starry: child block below quota");
    }
    for (int idx : child[t - 1]) {
      if (static_cast<int>(projected[idx].size()) < t) {
        throw std::logic_error("diverse_to_starry: child member too small");
      }
    }
  }
  const std::vector<int> child_ground(ground.begin() + 1, ground.end());
  std::vector<std::vector<int>> solved =
      starry_blocks(projected, child_ground, child, p);

  std::vector<std::vector<int>> out;
  out.reserve(q);
  out.push_back(std::move(star));
  for (auto& block : solved) out.push_back(std::move(block));
  return out;
}

}  // namespace

BlockPartition diverse_to_starry(const MultiFamily& family,
                                 const BlockPartition& diverse, int p) {
  validate_family(family);
  if (!verify_diverse(family, diverse, p)) {
    throw std::domain_error("diverse_to_starry: input partition not diverse");
  }
  BlockPartition out;
  out.blocks = starry_blocks(family.members, family.ground, diverse.blocks, p);
  for (auto& block : out.blocks) std::sort(block.begin(), block.end());
  return out;
}

namespace {

struct PartitionSearch {
  const MultiFamily* family;
  int p;
  // allowed[idx] = bitmask of blocks member idx may enter.
  std::vector<unsigned> allowed;
  std::vector<int> block_of;
  std::vector<int> block_count;

  bool dfs(int idx) {
    const int q = family->q();
    const int n = family->size();
    if (idx == n) {
      for (int i = 0; i < q; ++i) {
        if (block_count[i] < p) return false;
      }
      return true;
    }
    // Quota pruning: remaining members must be able to fill every deficit.
    int deficit = 0;
    for (int i = 0; i < q; ++i) deficit += std::max(0, p - block_count[i]);
    if (deficit > n - idx) return false;

    for (int i = 0; i < q; ++i) {
      if (!(allowed[idx] >> i & 1u)) continue;
      block_of[idx] = i;
      ++block_count[i];
      if (dfs(idx + 1)) return true;
      --block_count[i];
    }
    block_of[idx] = -1;
    return false;
  }
};

std::optional<BlockPartition> brute_force_partition(
    const MultiFamily& family, int p, const PartitionCaps& caps,
    bool starry) {
  validate_family(family);
  if (family.size() > caps.member_cap || family.q() > caps.q_cap) {
    throw CapacityError("brute-force partition search beyond caps (" +
                        std::to_string(family.size()) + " members, q=" +
                        std::to_string(family.q()) + ")");
  }
  if (family.q() == 0 || family.q() > 31) return std::nullopt;

  PartitionSearch search;
  search.family = &family;
  search.p = p;
  search.allowed.assign(family.size(), 0);
  for (int idx = 0; idx < family.size(); ++idx) {
    for (int i = 1; i <= family.q(); ++i) {
      const bool ok =
          starry ? contains(family.members[idx], family.ground[i - 1])
                 : static_cast<int>(family.members[idx].size()) >= i;
      if (ok) search.allowed[idx] |= 1u << (i - 1);
    }
    if (search.allowed[idx] == 0) return std::nullopt;  // unplaceable member
  }
  search.block_of.assign(family.size(), -1);
  search.block_count.assign(family.q(), 0);
  if (!search.dfs(0)) return std::nullopt;

  BlockPartition out;
  out.blocks.assign(family.q(), {});
  for (int idx = 0; idx < family.size(); ++idx) {
    out.blocks[search.block_of[idx]].push_back(idx);
  }
  return out;
}

}  // namespace

std::optional<BlockPartition> brute_force_starry(const MultiFamily& family,
                                                 int p, PartitionCaps caps) {
  return brute_force_partition(family, p, caps, /*starry=*/true);
}

std::optional<BlockPartition> brute_force_diverse(const MultiFamily& family,
                                                  int p, PartitionCaps caps) {
  return brute_force_partition(family, p, caps, /*starry=*/false);
}

}  // namespace colorpack
