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

#include "colorpack/adversary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "colorpack/errors.hpp"

namespace colorpack {

OnlineGraphStream killer_graph_stream(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::domain_error("killer graph needs an even vertex count >= 2");
  }
  // Arrival order u_1, v_1, u_2, v_2, ...: u_i is label 2i-1, v_i is 2i.
  std::vector<Edge> edges;
  const int half = n / 2;
  for (int i = 1; i <= half; ++i) {
    for (int j = 1; j <= half; ++j) {
      if (i == j) continue;
      Edge e = {2 * i - 1, 2 * j};
      std::sort(e.begin(), e.end());
      edges.push_back(e);
    }
  }
  OnlineGraphStream stream;
  stream.n = n;
  stream.final_hypergraph = Hypergraph(n, 2, edges);
  stream.reveals.resize(n);
  for (int t = 1; t <= n; ++t) {
    stream.reveals[t - 1] = reveal_at_arrival(stream.final_hypergraph, t);
  }
  return stream;
}

namespace {

// Shared bookkeeping for interactive runs: presents vertices, validates each
// answer against the revealed edges, and accumulates the instance.
struct Session {
  OnlineColorer* colorer;
  std::vector<TranscriptStep> steps;
  std::vector<Edge> edges;
  std::vector<int> color_of;  // color_of[v-1]

  int new_vertex() {
    color_of.push_back(0);
    return static_cast<int>(color_of.size());
  }

  int present(int v, std::vector<Edge> revealed) {
    for (Edge& e : revealed) std::sort(e.begin(), e.end());
    const int c = colorer->on_vertex(v, revealed);
    if (c < 1) throw ValidityError("colorer returned a non-positive color");
    for (const Edge& e : revealed) {
      bool mono = true;
      for (int u : e) {
        if (u == v) continue;
        if (color_of[u - 1] != c) {
          mono = false;
          break;
        }
      }
      if (mono) {
        throw ValidityError(
            "colorer completed a monochromatic edge at vertex " +
            std::to_string(v));
      }
    }
    color_of[v - 1] = c;
    steps.push_back(TranscriptStep{v, revealed, c});
    edges.insert(edges.end(), revealed.begin(), revealed.end());
    return c;
  }
};

}  // namespace

AdversaryTranscript run_stream(const OnlineGraphStream& stream,
                               OnlineColorer& colorer, bool give_n_hint) {
  colorer.start(give_n_hint ? std::optional<int>(stream.n) : std::nullopt);
  Session session;
  session.colorer = &colorer;
  for (int t = 1; t <= stream.n; ++t) {
    session.new_vertex();
    session.present(t, stream.reveals[t - 1]);
  }
  AdversaryTranscript out;
  out.steps = std::move(session.steps);
  out.final_hypergraph = stream.final_hypergraph;
  for (int c : session.color_of) out.colors_used.insert(c);
  return out;
}

ColorFamilyResult color_subset_family(
    const std::vector<std::vector<std::set<int>>>& block_tree_colors,
    const std::vector<int>& first_seen) {
  const int q = static_cast<int>(block_tree_colors.size());
  if (q == 0) throw std::invalid_argument("empty forest");
  const int p = static_cast<int>(block_tree_colors.front().size());
  std::set<int> all;
  for (const auto& block : block_tree_colors) {
    if (static_cast<int>(block.size()) != p) {
      throw std::invalid_argument("blocks must hold equally many trees");
    }
    for (const auto& tree : block) all.insert(tree.begin(), tree.end());
  }
  if (static_cast<int>(first_seen.size()) != q ||
      std::set<int>(first_seen.begin(), first_seen.end()) != all) {
    throw std::invalid_argument(
        "forest must use exactly one color per block, in first-seen order");
  }
  ColorFamilyResult out;
  out.original_color = first_seen;
  for (int i = 1; i <= q; ++i) out.family.ground.push_back(i);

  const auto rename = [&](int original) {
    for (int i = 0; i < q; ++i) {
      if (first_seen[i] == original) return i + 1;
    }
    throw std::invalid_argument("color missing from first-seen order");
  };

  out.partition.blocks.assign(q, {});
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < p; ++j) {
      std::vector<int> member;
      for (int original : block_tree_colors[i][j]) {
        member.push_back(rename(original));
      }
      std::sort(member.begin(), member.end());
      out.partition.blocks[i].push_back(out.family.size());
      out.family.members.push_back(std::move(member));
    }
  }
  if (!verify_diverse(out.family, out.partition, p)) {
    throw std::logic_error(
        "forest color subsets are not diverse; adversary invariant broken");
  }
  return out;
}

namespace {

struct HypertreeBuilder {
  Session session;
  int k = 2;
  std::vector<TreeProvenance> provenance;

  struct TreeInfo {
    int id = 0;
    std::vector<int> vertices;
    std::set<int> colors;
  };

  TreeInfo build(int depth, int parent, int block, int copy) {
    const int id = static_cast<int>(provenance.size()) + 1;
    provenance.push_back(TreeProvenance{id, depth, parent, block, copy, {}, {}});

    TreeInfo info;
    info.id = id;
    if (depth == 1) {
      const int v = session.new_vertex();
      const int c = session.present(v, {});
      info.vertices = {v};
      info.colors = {c};
    } else {
      const int first_label = static_cast<int>(session.color_of.size()) + 1;
      std::vector<std::vector<TreeInfo>> blocks(depth - 1);
      for (int i = 1; i <= depth - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
          blocks[i - 1].push_back(build(i, id, i, j));
        }
      }
      std::set<int> forest_colors;
      for (const auto& blk : blocks) {
        for (const TreeInfo& tree : blk) {
          forest_colors.insert(tree.colors.begin(), tree.colors.end());
        }
      }

      const int v = session.new_vertex();
      std::vector<Edge> merge_edges;
      if (static_cast<int>(forest_colors.size()) >= depth) {
        // The forest already overshot; any one-vertex-per-tree edges keep the
        // hypertree shape. Lowest labels keep it deterministic.
        for (const auto& blk : blocks) {
          Edge e = {v};
          for (const TreeInfo& tree : blk) {
            e.push_back(*std::min_element(tree.vertices.begin(),
                                          tree.vertices.end()));
          }
          merge_edges.push_back(std::move(e));
        }
      } else {
        // Exactly depth-1 colors: make each merge edge monochromatic in one
        // of them, so every used color is now forbidden for v.
        std::vector<int> first_seen;
        for (int u = first_label; u < v; ++u) {
          const int c = session.color_of[u - 1];
          if (std::find(first_seen.begin(), first_seen.end(), c) ==
              first_seen.end()) {
            first_seen.push_back(c);
          }
        }
        std::vector<std::vector<std::set<int>>> block_tree_colors;
        for (const auto& blk : blocks) {
          std::vector<std::set<int>> sets;
          for (const TreeInfo& tree : blk) sets.push_back(tree.colors);
          block_tree_colors.push_back(std::move(sets));
        }
        const ColorFamilyResult fam =
            color_subset_family(block_tree_colors, first_seen);
        const BlockPartition starry =
            diverse_to_starry(fam.family, fam.partition, k - 1);

        // Member index -> tree, in the block-major order used above.
        std::vector<const TreeInfo*> tree_of_member;
        for (const auto& blk : blocks) {
          for (const TreeInfo& tree : blk) tree_of_member.push_back(&tree);
        }
        for (int s = 1; s <= depth - 1; ++s) {
          const auto& star = starry.blocks[s - 1];
          // Every tree joins exactly one merge edge, so stars cannot exceed
          // their quota here.
          if (static_cast<int>(star.size()) != k - 1) {
            throw std::logic_error("starry block size must equal k-1");
          }
          const int wanted = fam.original_color[s - 1];
          Edge e = {v};
          for (int member : star) {
            const TreeInfo& tree = *tree_of_member[member];
            int pick = 0;
            for (int u : tree.vertices) {
              if (session.color_of[u - 1] == wanted && (pick == 0 || u < pick)) {
                pick = u;
              }
            }
            if (pick == 0) {
              throw std::logic_error("star member lacks the star color");
            }
            e.push_back(pick);
          }
          merge_edges.push_back(std::move(e));
        }
      }

      session.present(v, merge_edges);
      for (const auto& blk : blocks) {
        for (const TreeInfo& tree : blk) {
          info.vertices.insert(info.vertices.end(), tree.vertices.begin(),
                               tree.vertices.end());
          info.colors.insert(tree.colors.begin(), tree.colors.end());
        }
      }
      info.vertices.push_back(v);
      info.colors.insert(session.color_of[v - 1]);
      std::sort(info.vertices.begin(), info.vertices.end());
    }

    provenance[id - 1].vertices = info.vertices;
    provenance[id - 1].colors = info.colors;
    return info;
  }
};

}  // namespace

AdversaryTranscript hypertree_adversary(OnlineColorer& colorer, int k, int m) {
  if (k < 2) throw std::domain_error("uniformity must be >= 2");
  if (m < 1) throw std::domain_error("depth must be >= 1");
  vertex_count_bound(k, m);  // reject sizes that could not even be counted

  colorer.start(std::nullopt);  // the coloring game does not know n
  HypertreeBuilder builder;
  builder.session.colorer = &colorer;
  builder.k = k;
  const HypertreeBuilder::TreeInfo root = builder.build(m, 0, 0, 0);

  AdversaryTranscript out;
  out.steps = std::move(builder.session.steps);
  out.final_hypergraph =
      Hypergraph(static_cast<int>(root.vertices.size()), k,
                 builder.session.edges);
  for (int c : builder.session.color_of) out.colors_used.insert(c);
  out.blocks = std::move(builder.provenance);
  return out;
}

unsigned long long vertex_count_bound(int k, int m) {
  if (k < 2 || m < 1) {
    throw std::domain_error("vertex_count_bound needs k >= 2, m >= 1");
  }
  unsigned long long result = 1;
  for (int i = 1; i < m; ++i) {
    if (result > (1ULL << 62) / static_cast<unsigned long long>(k)) {
      throw std::overflow_error("vertex bound overflow");
    }
    result *= static_cast<unsigned long long>(k);
  }
  return result;
}

}  // namespace colorpack
