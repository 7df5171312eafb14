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

#ifndef COLORPACK_HYPERGRAPH_HPP_
#define COLORPACK_HYPERGRAPH_HPP_

#include <optional>
#include <set>
#include <vector>

namespace colorpack {

// A hyperedge: sorted distinct 1-based vertex labels.
using Edge = std::vector<int>;

// A k-uniform hypergraph whose vertices are labeled 1..n by arrival rank.
// Edges are stored sorted (each edge ascending, the edge list lexicographic)
// so every traversal is deterministic.
class Hypergraph {
 public:
  Hypergraph(int n, int k, std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Hypergraph& o) const = default;

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
};

// A total coloring: colors[v-1] is vertex v's positive color.
struct Coloring {
  std::vector<int> colors;

  int color(int v) const { return colors[v - 1]; }
  int n() const { return static_cast<int>(colors.size()); }
};

// The edges revealed when vertex t arrives: those whose last vertex is t.
std::vector<Edge> reveal_at_arrival(const Hypergraph& h, int t);

// Processes vertices 1..n, giving each the smallest positive color that
// leaves every revealed edge non-monochromatic.
Coloring first_fit_color(const Hypergraph& h);

// No edge has all k vertices in one color class. Throws
// std::invalid_argument for a partial coloring.
bool is_proper(const Hypergraph& h, const Coloring& c);

struct ChromaticCaps {
  int graph_cap = 16;       // k = 2
  int hypergraph_cap = 12;  // k >= 3
};

// Exact chromatic number by backtracking with color-symmetry breaking
// (vertex i may use colors up to 1 + max color among vertices < i).
// Throws CapacityError above the cap for the uniformity.
int chromatic_number(const Hypergraph& h, ChromaticCaps caps = {});

// Connected and Berge-acyclic, decided on the bipartite incidence graph
// (vertex nodes + edge nodes, adjacency = membership): a hypertree iff that
// graph is connected with links = nodes - 1.
bool is_hypertree(const Hypergraph& h);

// 1 + log_k(n), the FirstFit color cap on online k-uniform hypertrees.
double ff_hypertree_upper(long long n, int k);

// floor(1 + log_k(n)) computed in integers (safe at exact powers of k).
long long ff_hypertree_upper_floor(long long n, int k);

std::set<int> colors_used(const Coloring& c);

// An online colorer answers one irrevocable positive color per arriving
// vertex, seeing only the edges completed by that arrival. Stateful,
// deterministic, single-threaded; one run per instance.
class OnlineColorer {
 public:
  virtual ~OnlineColorer() = default;

  // Called once before the first vertex. The vertex count is an optional
  // hint: the coloring problem is defined with n unknown, but the
  // packing-backed colorer cannot run without it. Implementations that need
  // the hint throw std::invalid_argument when it is absent.
  virtual void start(std::optional<int> n_hint) { (void)n_hint; }

  virtual int on_vertex(int v, const std::vector<Edge>& revealed) = 0;
};

// Replays h's arrival sequence through a fresh colorer, checking after every
// answer that no revealed edge became monochromatic. Throws ValidityError
// (the colorer is rejected, not repaired) on a violation.
Coloring run_colorer(const Hypergraph& h, OnlineColorer& colorer,
                     bool give_n_hint);

}  // namespace colorpack

#endif  // COLORPACK_HYPERGRAPH_HPP_
