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

// End-to-end acceptance run: one criterion per function, one PASS/FAIL line
// each, nonzero exit when anything fails. Expected values are frozen from
// hand simulation or recomputed by the independent brute-force oracles.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "colorpack/adversary.hpp"
#include "colorpack/colorers.hpp"
#include "colorpack/incidence.hpp"
#include "colorpack/partition.hpp"
#include "colorpack/report.hpp"
#include "colorpack/sweeps.hpp"

using namespace colorpack;

namespace {

constexpr std::uint64_t kSeed = 2026;

Hypergraph killer_prefix4() { return Hypergraph(4, 2, {{1, 4}, {2, 3}}); }

MultiFamily worked_family() {
  MultiFamily f;
  f.ground = {1, 2, 3};
  f.members = {{1},       {2},       {3},       {1},
               {1, 3},    {1, 3},    {2, 3},    {1, 3},
               {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
  return f;
}

// 1. The built incidence matrix of the killer prefix equals the hand-worked
//    one, and the worked 3-uniform arrival column matches its transpose.
bool golden_matrix() {
  const std::vector<std::vector<int>> expected_matrix = {
      {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 1},
      {0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
  };
  const IncidenceMatrix built =
      build_incidence_matrix(killer_prefix4(), ReductionVariant::kBinary);
  if (built.rows != 6 || built.cols != 4) return false;
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (built.dense[r][c] != Rational(expected_matrix[r][c])) return false;
    }
  }

  // Triples containing vertex 4 of the 6-vertex instance, lexicographic:
  // 124 134 145 146 234 245 246 345 346 456 -> 1 0 1 1 0 1 1 1 1 1.
  const SparseColumn column =
      online_column_binary(6, 3, {1, 2, 3}, 4, {{1, 2, 4}});
  if (column.dimension != 20) return false;
  const std::vector<std::vector<int>> one_rows = {
      {1, 2, 4}, {1, 4, 5}, {1, 4, 6}, {2, 4, 5},
      {2, 4, 6}, {3, 4, 5}, {3, 4, 6}, {4, 5, 6},
  };
  std::vector<std::pair<long long, Rational>> expected_column;
  for (const auto& row : one_rows) {
    expected_column.emplace_back(rank_subset(row, 6), Rational(1));
  }
  std::sort(expected_column.begin(), expected_column.end());
  return column.entries == expected_column;
}

// 2. Binary row sums sit on {k-1, k} and unit row sums inside
//    [k-1, k-1+(n-k+1)/n], exhaustively on five vertices.
bool row_sum_law() { return row_sum_suite(RunPolicy::kParallel).all_pass(); }

// 3. chi(H) = OPT(I_H, B=k-1) on the exhaustive graph family plus 200 random
//    3-uniform hypergraphs.
bool chi_opt_equality() {
  return chi_equals_opt_suite(RunPolicy::kParallel, kSeed, 200).all_pass();
}

// 4. killer(6): FirstFit spends 3 colors on a 2-chromatic graph, and the
//    reduction replays it as 15-row packing with 3 bins over OPT 2.
bool figure_one() {
  const OnlineGraphStream stream = killer_graph_stream(6);
  const Coloring ff = first_fit_color(stream.final_hypergraph);
  if (colors_used(ff).size() != 3) return false;
  if (chromatic_number(stream.final_hypergraph) != 2) return false;

  ReductionConfig config;
  config.adversary = AdversaryKind::kKiller;
  config.packer = PackerKind::kFirstFit;
  config.d = 15;  // C(6,2): no padding
  config.bin_size = 1;
  config.variant = ReductionVariant::kBinary;
  const ReductionOutcome outcome = reduction_experiment(config);
  return outcome.n == 6 && outcome.instance.dimension() == 15 &&
         outcome.bins == 3 && outcome.chi == 2 && outcome.opt == 2;
}

// 5. 1000 random binary instances: FirstFit within the closed-form bound and
//    within sqrt(2d)+2 of OPT whenever the oracle fits.
bool ff_bound_sweep() {
  return ff_bound_suite(RunPolicy::kParallel, kSeed, 1000).all_pass();
}

// 6. killer at d=28: ratio exactly 2, beating (sqrt(56)-1)/4, with OPT 2.
bool killer_desk_scale() {
  ReductionConfig config;
  config.adversary = AdversaryKind::kKiller;
  config.packer = PackerKind::kFirstFit;
  config.d = 28;
  config.bin_size = 1;
  config.variant = ReductionVariant::kBinary;
  const ReductionOutcome outcome = reduction_experiment(config);
  const double bound = (std::sqrt(56.0) - 1.0) / 4.0;
  return outcome.n == 8 && outcome.bins == 4 && outcome.chi == 2 &&
         outcome.opt == 2 && outcome.ratio == Rational(2) &&
         outcome.ratio.to_double() > bound && outcome.pass;
}

// 7. diverse => starry: exhaustive families (<= 8 members, |C| <= 3) and 500
//    random diverse families, with the brute-force oracle agreeing.
bool diverse_starry_soundness() {
  return partition_exhaustive_suite(RunPolicy::kParallel, 8).all_pass() &&
         partition_random_suite(RunPolicy::kParallel, kSeed, 500).all_pass();
}

// 8. The worked partition examples: the twelve-member family is 4-diverse
//    and its worked starry partition verifies; the four-singleton family is
//    2-starry yet exhaustively not 2-diverse.
bool partition_examples() {
  const MultiFamily family = worked_family();
  BlockPartition natural;
  natural.blocks = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
  if (!verify_diverse(family, natural, 4)) return false;
  BlockPartition handworked;
  handworked.blocks = {{0, 3, 4, 5}, {1, 6, 8, 9}, {2, 7, 10, 11}};
  if (!verify_starry(family, handworked, 4)) return false;
  if (!verify_starry(family, diverse_to_starry(family, natural, 4), 4)) {
    return false;
  }

  MultiFamily singletons;
  singletons.ground = {1, 2};
  singletons.members = {{1}, {1}, {2}, {2}};
  BlockPartition split;
  split.blocks = {{0, 1}, {2, 3}};
  if (!verify_starry(singletons, split, 2)) return false;
  if (brute_force_diverse(singletons, 2).has_value()) return false;
  // Belt and braces: walk all 2^4 labeled splits.
  for (int assign = 0; assign < 16; ++assign) {
    BlockPartition candidate;
    candidate.blocks.assign(2, {});
    for (int i = 0; i < 4; ++i) {
      candidate.blocks[(assign >> i) & 1].push_back(i);
    }
    if (verify_diverse(singletons, candidate, 2)) return false;
  }
  return true;
}

// 9. The adversary matrix: three colorers, k in {2..5}, m in {1..5}; valid
//    hypertrees within k^(m-1) vertices forcing m colors; 125 at k=5, m=4.
bool adversary_matrix_check() {
  if (!adversary_matrix_suite(RunPolicy::kParallel, 5).all_pass()) {
    return false;
  }
  FirstFitColorer ff;
  const AdversaryTranscript figure = hypertree_adversary(ff, 5, 4);
  return figure.final_hypergraph.n() == 125 &&
         figure.colors_used.size() >= 4 &&
         is_hypertree(figure.final_hypergraph);
}

// 10. FirstFit spends at most floor(1 + log_k n) colors on adversary-built
//     and random hypertrees; criterion 9 shows the cap is reached.
bool hypertree_upper_bound() {
  if (!hypertree_ff_suite(RunPolicy::kParallel, kSeed, 100).all_pass()) {
    return false;
  }
  for (int k = 2; k <= 5; ++k) {
    for (int m = 1; m <= 4; ++m) {
      FirstFitColorer ff;
      const AdversaryTranscript t = hypertree_adversary(ff, k, m);
      const Hypergraph& h = t.final_hypergraph;
      const long long cap = ff_hypertree_upper_floor(h.n(), k);
      const auto used = colors_used(first_fit_color(h));
      if (static_cast<long long>(used.size()) > cap) return false;
      // Tightness: the adversary saturates the cap exactly.
      if (static_cast<long long>(t.colors_used.size()) != cap) return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  std::string description;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden incidence matrix and worked arrival column", golden_matrix},
      {2, "row-sum law on the exhaustive five-vertex families", row_sum_law},
      {3, "chi = OPT of the incidence instance (exhaustive + random)",
       chi_opt_equality},
      {4, "killer(6): FirstFit 3 vs chi 2, reduction packs 3 bins over OPT 2",
       figure_one},
      {5, "FirstFit bin bound and ratio sweep on 1000 binary instances",
       ff_bound_sweep},
      {6, "killer at d=28: ratio 2 beats (sqrt(56)-1)/4 with OPT 2",
       killer_desk_scale},
      {7, "diverse => starry soundness (exhaustive + 500 random)",
       diverse_starry_soundness},
      {8, "worked partition examples and the starry-not-diverse witness",
       partition_examples},
      {9, "hypertree adversary matrix (3 colorers, k<=5, m<=5, 125-cap)",
       adversary_matrix_check},
      {10, "FirstFit hypertree cap floor(1+log_k n), met with equality",
       hypertree_upper_bound},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("%s criterion %2d [%6.2fs] %s%s\n", ok ? "PASS" : "FAIL",
                criterion.number, seconds, criterion.description.c_str(),
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
