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
#include <algorithm>
#include <numeric>

#include "colorpack/colorers.hpp"
#include "colorpack/errors.hpp"
#include "colorpack/hypergraph.hpp"
#include "colorpack/rng.hpp"
#include "colorpack/sweeps.hpp"
#include "doctest.h"

using namespace colorpack;

namespace {

// K: the first four vertices of the killer graph, edges {1,4} and {2,3}.
Hypergraph killer_prefix4() { return Hypergraph(4, 2, {{1, 4}, {2, 3}}); }

// Independent hypertree oracle: connectivity by union-find plus an explicit
// search for Berge cycles v1 e1 v2 ... vt et v1 with t >= 2, all edges and
// vertices distinct except the closure.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

bool oracle_connected(const Hypergraph& h) {
  if (h.n() == 0) return false;
  UnionFind uf(h.n());
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) uf.merge(e[0] - 1, e[i] - 1);
  }
  const int root = uf.find(0);
  for (int v = 1; v < h.n(); ++v) {
    if (uf.find(v) != root) return false;
  }
  return true;
}

bool cycle_dfs(const Hypergraph& h, int start, int current, int depth,
               std::vector<char>& vertex_used, std::vector<char>& edge_used) {
  for (std::size_t j = 0; j < h.edges().size(); ++j) {
    if (edge_used[j]) continue;
    const Edge& e = h.edges()[j];
    if (std::find(e.begin(), e.end(), current) == e.end()) continue;
    edge_used[j] = 1;
    for (int w : e) {
      if (w == current) continue;
      if (w == start && depth + 1 >= 2) {
        edge_used[j] = 0;
        return true;
      }
      if (!vertex_used[w - 1]) {
        vertex_used[w - 1] = 1;
        if (cycle_dfs(h, start, w, depth + 1, vertex_used, edge_used)) {
          vertex_used[w - 1] = 0;
          edge_used[j] = 0;
          return true;
        }
        vertex_used[w - 1] = 0;
      }
    }
    edge_used[j] = 0;
  }
  return false;
}

bool oracle_has_berge_cycle(const Hypergraph& h) {
  std::vector<char> vertex_used(h.n(), 0), edge_used(h.edges().size(), 0);
  for (int start = 1; start <= h.n(); ++start) {
    vertex_used.assign(h.n(), 0);
    vertex_used[start - 1] = 1;
    if (cycle_dfs(h, start, start, 0, vertex_used, edge_used)) return true;
  }
  return false;
}

std::vector<Edge> all_k_subsets(int n, int k) {
  std::vector<Edge> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("reveal_at_arrival returns edges completed by t") {
  const Hypergraph k = killer_prefix4();
  CHECK(reveal_at_arrival(k, 1).empty());
  CHECK(reveal_at_arrival(k, 2).empty());
  CHECK(reveal_at_arrival(k, 3) == std::vector<Edge>{{2, 3}});
  CHECK(reveal_at_arrival(k, 4) == std::vector<Edge>{{1, 4}});

  // The 3-uniform instance from the worked column: {1,2,4} completes at 4.
  const Hypergraph h(6, 3, {{1, 2, 4}});
  CHECK(reveal_at_arrival(h, 4) == std::vector<Edge>{{1, 2, 4}});
  CHECK_THROWS_AS(reveal_at_arrival(h, 7), std::invalid_argument);
}

TEST_CASE("first fit coloring of K spends two colors as simulated by hand") {
  const Coloring c = first_fit_color(killer_prefix4());
  CHECK(c.colors == std::vector<int>{1, 1, 2, 2});
  CHECK(is_proper(killer_prefix4(), c));
  CHECK(colors_used(c) == std::set<int>{1, 2});
}

TEST_CASE("first fit colors a single vertex 1") {
  const Coloring c = first_fit_color(Hypergraph(1, 2, {}));
  CHECK(c.colors == std::vector<int>{1});
  CHECK(colors_used(c) == std::set<int>{1});
}

TEST_CASE("colors_used of an empty coloring is empty") {
  CHECK(colors_used(Coloring{}).empty());
}

TEST_CASE("is_proper flags only fully monochromatic edges") {
  const Hypergraph triangle(3, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_proper(triangle, Coloring{{1, 1, 1}}));
  CHECK(is_proper(triangle, Coloring{{1, 2, 3}}));

  const Hypergraph single(3, 3, {{1, 2, 3}});
  CHECK(is_proper(single, Coloring{{1, 1, 2}}));
  CHECK_FALSE(is_proper(single, Coloring{{2, 2, 2}}));
  CHECK_THROWS_AS(is_proper(single, Coloring{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(is_proper(single, Coloring{{1, 0, 2}}),
                  std::invalid_argument);
}

TEST_CASE("chromatic_number matches hand counts") {
  CHECK(chromatic_number(Hypergraph(3, 2, {{1, 2}, {1, 3}, {2, 3}})) == 3);
  CHECK(chromatic_number(Hypergraph(3, 3, {{1, 2, 3}})) == 2);
  CHECK(chromatic_number(Hypergraph(4, 2, {})) == 1);
  CHECK(chromatic_number(killer_prefix4()) == 2);
}

TEST_CASE("chromatic_number enforces caps per uniformity") {
  CHECK_THROWS_AS(chromatic_number(Hypergraph(17, 2, {})), CapacityError);
  CHECK_THROWS_AS(chromatic_number(Hypergraph(13, 3, {})), CapacityError);
  CHECK(chromatic_number(Hypergraph(17, 2, {}), ChromaticCaps{20, 12}) == 1);
}

TEST_CASE("chromatic number is sandwiched by first fit") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const Hypergraph h = random_uniform_hypergraph(rng.next(), 3, 6);
    const Coloring ff = first_fit_color(h);
    CHECK(is_proper(h, ff));
    CHECK(chromatic_number(h) <=
          static_cast<int>(colors_used(ff).size()));
  }
}

TEST_CASE("is_hypertree accepts paths and rejects shared pairs") {
  CHECK(is_hypertree(Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK(is_hypertree(Hypergraph(1, 2, {})));
  // Two triples sharing two vertices close the cycle v1 e1 v2 e2 v1.
  CHECK_FALSE(is_hypertree(Hypergraph(4, 3, {{1, 2, 3}, {1, 2, 4}})));
  // Disconnected: two vertices, no edge.
  CHECK_FALSE(is_hypertree(Hypergraph(2, 2, {})));
  // A 4-cycle.
  CHECK_FALSE(is_hypertree(Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
}

TEST_CASE("is_hypertree agrees with the Berge-cycle oracle exhaustively") {
  for (int k = 2; k <= 3; ++k) {
    const std::vector<Edge> universe = all_k_subsets(5, k);
    REQUIRE(universe.size() == 10);
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
      std::vector<Edge> edges;
      for (int j = 0; j < 10; ++j) {
        if (mask >> j & 1u) edges.push_back(universe[j]);
      }
      const Hypergraph h(5, k, edges);
      const bool expected = oracle_connected(h) && !oracle_has_berge_cycle(h);
      CHECK(is_hypertree(h) == expected);
    }
  }
}

TEST_CASE("is_hypertree agrees with the oracle on random 6-vertex inputs") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(2));
    const std::vector<Edge> universe = all_k_subsets(6, k);
    std::vector<Edge> edges;
    for (const Edge& e : universe) {
      if (rng.chance(1, 4)) edges.push_back(e);
    }
    const Hypergraph h(6, k, edges);
    const bool expected = oracle_connected(h) && !oracle_has_berge_cycle(h);
    CHECK(is_hypertree(h) == expected);
  }
}

TEST_CASE("hypertree color cap evaluates the closed form") {
  CHECK(ff_hypertree_upper(1, 2) == doctest::Approx(1.0));
  CHECK(ff_hypertree_upper(16, 2) == doctest::Approx(5.0));
  CHECK(ff_hypertree_upper_floor(16, 2) == 5);
  CHECK(ff_hypertree_upper_floor(15, 2) == 4);
  CHECK(ff_hypertree_upper_floor(125, 5) == 4);
  CHECK(ff_hypertree_upper_floor(124, 5) == 3);
  CHECK(ff_hypertree_upper_floor(1, 7) == 1);
  // n = k^(m-1) turns the cap into exactly m.
  for (int k = 2; k <= 5; ++k) {
    long long n = 1;
    for (int m = 1; m <= 5; ++m) {
      CHECK(ff_hypertree_upper(n, k) == doctest::Approx(m));
      CHECK(ff_hypertree_upper_floor(n, k) == m);
      n *= k;
    }
  }
}

TEST_CASE("hypergraph invariants are enforced") {
  CHECK_THROWS_AS(Hypergraph(3, 2, {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 1, {}), std::invalid_argument);
}

namespace {

// A colorer that ignores the rules: always answers 1.
class StubbornColorer final : public OnlineColorer {
 public:
  int on_vertex(int, const std::vector<Edge>&) override { return 1; }
};

}  // namespace

TEST_CASE("run_colorer validates every answer and rejects violators") {
  FirstFitColorer ff;
  const Coloring via_runner = run_colorer(killer_prefix4(), ff, /*give_n_hint=*/false);
  CHECK(via_runner.colors == first_fit_color(killer_prefix4()).colors);

  StubbornColorer bad;
  CHECK_THROWS_AS(
      run_colorer(Hypergraph(3, 2, {{1, 2}}), bad, /*give_n_hint=*/false),
      ValidityError);
}

TEST_CASE("online colorers agree with offline first fit on random graphs") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h = random_uniform_hypergraph(rng.next(), 2, 7);
    FirstFitColorer ff;
    CHECK(run_colorer(h, ff, false).colors == first_fit_color(h).colors);
  }
}

TEST_CASE("largestfit and permutation colorers stay proper") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h = random_uniform_hypergraph(rng.next(), 3, 6);
    for (const std::string& name : known_colorer_names()) {
      auto colorer = make_colorer(name);
      const Coloring c = run_colorer(h, *colorer, false);
      CHECK(is_proper(h, c));
    }
  }
  CHECK_THROWS_AS(make_colorer("mystery"), std::invalid_argument);
}
