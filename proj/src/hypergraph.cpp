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

#include "colorpack/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "colorpack/errors.hpp"

namespace colorpack {

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (k_ < 2) throw std::invalid_argument("uniformity must be >= 2");
  for (Edge& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != k_) {
      throw std::invalid_argument("edge size differs from uniformity");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("edge with repeated vertex");
    }
    if (e.front() < 1 || e.back() > n_) {
      throw std::invalid_argument("edge vertex out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

std::vector<Edge> reveal_at_arrival(const Hypergraph& h, int t) {
  if (t < 1 || t > h.n()) {
    throw std::invalid_argument("arrival rank out of range");
  }
  std::vector<Edge> out;
  for (const Edge& e : h.edges()) {
    if (e.back() == t) out.push_back(e);
  }
  return out;
}

namespace {

// Smallest positive color for v such that no revealed edge becomes
// monochromatic; colors[u-1] == 0 means u is uncolored.
int smallest_safe_color(const std::vector<Edge>& revealed,
                        const std::vector<int>& colors, int v) {
  int c = 1;
  for (;;) {
    bool safe = true;
    for (const Edge& e : revealed) {
      bool all_same = true;
      for (int u : e) {
        if (u == v) continue;
        if (colors[u - 1] != c) {
          all_same = false;
          break;
        }
      }
      if (all_same) {
        safe = false;
        break;
      }
    }
    if (safe) return c;
    ++c;
  }
}

}  // namespace

Coloring first_fit_color(const Hypergraph& h) {
  Coloring out;
  out.colors.assign(h.n(), 0);
  for (int t = 1; t <= h.n(); ++t) {
    const std::vector<Edge> revealed = reveal_at_arrival(h, t);
    out.colors[t - 1] = smallest_safe_color(revealed, out.colors, t);
  }
  return out;
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
  if (c.n() != h.n()) {
    throw std::invalid_argument("coloring does not cover the vertex set");
  }
  for (int color : c.colors) {
    if (color < 1) throw std::invalid_argument("partial coloring");
  }
  for (const Edge& e : h.edges()) {
    const int first = c.color(e.front());
    bool mono = true;
    for (int u : e) {
      if (c.color(u) != first) {
        mono = false;
        break;
      }
    }
    if (mono) return false;
  }
  return true;
}

namespace {

struct ChromaticSearch {
  const Hypergraph* h;
  int target;
  std::vector<int> colors;
  // Edges whose last vertex is v, for the incremental monochromatic check.
  std::vector<std::vector<const Edge*>> ending_at;

  bool ok(int v, int c) const {
    for (const Edge* e : ending_at[v - 1]) {
      bool all_same = true;
      for (int u : *e) {
        if (u == v) continue;
        if (colors[u - 1] != c) {
          all_same = false;
          break;
        }
      }
      if (all_same) return false;
    }
    return true;
  }

  bool dfs(int v, int max_used) {
    if (v > h->n()) return true;
    const int limit = std::min(target, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (!ok(v, c)) continue;
      colors[v - 1] = c;
      if (dfs(v + 1, std::max(max_used, c))) return true;
      colors[v - 1] = 0;
    }
    return false;
  }
};

}  // namespace

int chromatic_number(const Hypergraph& h, ChromaticCaps caps) {
  if (h.n() == 0) return 0;
  const int cap = h.k() == 2 ? caps.graph_cap : caps.hypergraph_cap;
  if (h.n() > cap) {
    throw CapacityError("chromatic_number: " + std::to_string(h.n()) +
                        " vertices exceeds cap " + std::to_string(cap));
  }
  if (h.edges().empty()) return 1;

  ChromaticSearch search;
  search.h = &h;
  search.ending_at.resize(h.n());
  for (const Edge& e : h.edges()) {
    search.ending_at[e.back() - 1].push_back(&e);
  }
  for (int target = 2; target <= h.n(); ++target) {
    search.target = target;
    search.colors.assign(h.n(), 0);
    if (search.dfs(1, 0)) return target;
  }
  return h.n();  // unreachable: n distinct colors are always proper for k >= 2
}

bool is_hypertree(const Hypergraph& h) {
  if (h.n() == 0) return false;
  const int nodes = h.n() + static_cast<int>(h.edges().size());
  const long long links =
      static_cast<long long>(h.edges().size()) * h.k();
  if (links != nodes - 1) return false;

  // BFS over the bipartite incidence graph from vertex node 1.
  std::vector<std::vector<int>> vertex_to_edges(h.n());
  for (std::size_t j = 0; j < h.edges().size(); ++j) {
    for (int u : h.edges()[j]) {
      vertex_to_edges[u - 1].push_back(static_cast<int>(j));
    }
  }
  std::vector<bool> vseen(h.n(), false), eseen(h.edges().size(), false);
  std::queue<int> bfs;  // vertices only; edges expand immediately
  bfs.push(1);
  vseen[0] = true;
  int reached = 1;
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int j : vertex_to_edges[v - 1]) {
      if (eseen[j]) continue;
      eseen[j] = true;
      ++reached;
      for (int u : h.edges()[j]) {
        if (!vseen[u - 1]) {
          vseen[u - 1] = true;
          ++reached;
          bfs.push(u);
        }
      }
    }
  }
  return reached == nodes;
}

double ff_hypertree_upper(long long n, int k) {
  if (n < 1 || k < 2) {
    throw std::domain_error("ff_hypertree_upper needs n >= 1, k >= 2");
  }
  return 1.0 + std::log(static_cast<double>(n)) / std::log(static_cast<double>(k));
}

long long ff_hypertree_upper_floor(long long n, int k) {
  if (n < 1 || k < 2) {
    throw std::domain_error("ff_hypertree_upper needs n >= 1, k >= 2");
  }
  long long floor_log = 0;
  // power <= n/k in integers is exactly power*k <= n, no overflow.
  for (long long power = 1; power <= n / k; power *= k) ++floor_log;
  return 1 + floor_log;
}

std::set<int> colors_used(const Coloring& c) {
  std::set<int> out;
  for (int color : c.colors) {
    if (color > 0) out.insert(color);
  }
  return out;
}

Coloring run_colorer(const Hypergraph& h, OnlineColorer& colorer,
                     bool give_n_hint) {
  colorer.start(give_n_hint ? std::optional<int>(h.n()) : std::nullopt);
  Coloring out;
  out.colors.assign(h.n(), 0);
  for (int t = 1; t <= h.n(); ++t) {
    const std::vector<Edge> revealed = reveal_at_arrival(h, t);
    const int c = colorer.on_vertex(t, revealed);
    if (c < 1) throw ValidityError("colorer returned a non-positive color");
    for (const Edge& e : revealed) {
      bool mono = true;
      for (int u : e) {
        if (u == t) continue;
        if (out.colors[u - 1] != c) {
          mono = false;
          break;
        }
      }
      if (mono) {
        throw ValidityError("colorer completed a monochromatic edge at vertex " +
                            std::to_string(t));
      }
    }
    out.colors[t - 1] = c;
  }
  return out;
}

}  // namespace colorpack
