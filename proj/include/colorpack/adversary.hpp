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

#ifndef COLORPACK_ADVERSARY_HPP_
#define COLORPACK_ADVERSARY_HPP_

#include <set>
#include <string>
#include <vector>

#include "colorpack/hypergraph.hpp"
#include "colorpack/partition.hpp"

namespace colorpack {

// An oblivious online graph: fixed arrival order with the edges revealed at
// each arrival.
struct OnlineGraphStream {
  int n = 0;
  std::vector<std::vector<Edge>> reveals;  // reveals[t-1] at arrival t
  Hypergraph final_hypergraph{0, 2, {}};
};

// The FirstFit killer on n vertices (n even): arrivals u_1, v_1, ..., u_t,
// v_t with edges {u_i, v_j} for i != j. Bipartite, yet FirstFit spends n/2
// colors. Throws std::domain_error for odd n.
OnlineGraphStream killer_graph_stream(int n);

struct TranscriptStep {
  int vertex = 0;
  std::vector<Edge> revealed;
  int color = 0;
};

// Provenance of one sub-hypertree: which depth-i tree it is, which block of
// which parent merge it joined.
struct TreeProvenance {
  int id = 0;         // 1-based, in construction order
  int depth = 0;      // the i of T_i
  int parent = 0;     // id of the tree whose merge consumed it; 0 for the root
  int block = 0;      // B_i block index within the parent merge
  int copy = 0;       // 1-based copy index within the block
  std::vector<int> vertices;
  std::set<int> colors;
};

struct AdversaryTranscript {
  std::vector<TranscriptStep> steps;
  Hypergraph final_hypergraph{0, 2, {}};
  std::set<int> colors_used;
  std::vector<TreeProvenance> blocks;
};

// Feeds an oblivious stream to a colorer, recording and validating each
// answer (ValidityError on an improper one).
AdversaryTranscript run_stream(const OnlineGraphStream& stream,
                               OnlineColorer& colorer, bool give_n_hint);

// Interactively grows a k-uniform hypertree with exactly k^(m-1) vertices on
// which the colorer spends at least m colors. Recursion per depth i: build
// k-1 copies of each of T_1..T_{i-1} (blocks B_1..B_{i-1}), then one merge
// vertex closes an edge into every block. When the forest used exactly i-1
// colors, the per-tree color subsets form a (k-1, [i-1])-diverse multi-family
// whose starry partition dictates monochromatic merge edges, forcing a fresh
// color.
AdversaryTranscript hypertree_adversary(OnlineColorer& colorer, int k, int m);

// Colors used on the j-th copy of T_i, assembled into the multi-family of
// the merge step: members are the renamed per-tree color sets (renaming by
// first occurrence along `first_seen`), blocks follow the forest blocks.
// Throws std::logic_error when the natural block partition is not
// (p, [q])-diverse for p = copies per block.
struct ColorFamilyResult {
  MultiFamily family;
  BlockPartition partition;
  std::vector<int> original_color;  // original_color[i-1] = color renamed to i
};

ColorFamilyResult color_subset_family(
    const std::vector<std::vector<std::set<int>>>& block_tree_colors,
    const std::vector<int>& first_seen);

// k^(m-1), the guaranteed vertex cap of the depth-m adversary.
unsigned long long vertex_count_bound(int k, int m);

}  // namespace colorpack

#endif  // COLORPACK_ADVERSARY_HPP_
