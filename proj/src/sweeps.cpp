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

#include "colorpack/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "colorpack/adversary.hpp"
#include "colorpack/colorers.hpp"
#include "colorpack/incidence.hpp"
#include "colorpack/partition.hpp"
#include "colorpack/rng.hpp"

namespace colorpack {

RunPolicy parse_policy(int threads) {
  return threads == 1 ? RunPolicy::kSerial : RunPolicy::kParallel;
}

namespace {

// Runs fn(i) for every case index, serially or with OpenMP. Each case owns
// slot i of the output, so both drivers assemble identical reports.
template <typename Fn>
Report sweep(std::size_t count, RunPolicy policy, Fn&& fn) {
  std::vector<Report> slots(count);
  const auto run_case = [&](std::size_t i) {
    try {
      fn(i, slots[i]);
    } catch (const std::exception& e) {
      std::string what = e.what();
      for (char& c : what) {
        if (c == ',' || c == '\n') c = ';';
      }
      slots[i].add(ReportRow{"case/" + std::to_string(i), "", what, "", false});
    }
  };
  if (policy == RunPolicy::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      run_case(static_cast<std::size_t>(i));
    }
#else
    for (std::size_t i = 0; i < count; ++i) run_case(i);
#endif
  } else {
    for (std::size_t i = 0; i < count; ++i) run_case(i);
  }
  Report out;
  for (Report& slot : slots) out.merge(slot);
  out.sort_rows();
  return out;
}

std::string pad_id(const std::string& prefix, std::size_t i) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%06zu", i);
  return prefix + "/" + buffer;
}

// All k-subsets of [1,n], lexicographic: the row/edge universe of the
// exhaustive families.
std::vector<Edge> all_subsets(int n, int k) {
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

Hypergraph hypergraph_from_mask(int n, int k, const std::vector<Edge>& universe,
                                std::uint32_t mask) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < universe.size(); ++j) {
    if (mask >> j & 1u) edges.push_back(universe[j]);
  }
  return Hypergraph(n, k, edges);
}

void check_row_sums(const Hypergraph& h, Report& report,
                    const std::string& id) {
  const int k = h.k();
  const int n = h.n();
  // Binary: row sums read k on edges, k-1 off them.
  {
    const IncidenceMatrix m = build_incidence_matrix(h, ReductionVariant::kBinary);
    bool ok = true;
    for (long long r = 0; r < m.rows; ++r) {
      const Edge row_edge = unrank_subset(r, n, k);
      const bool is_edge = std::binary_search(h.edges().begin(),
                                              h.edges().end(), row_edge);
      if (m.row_sum(r) != Rational(is_edge ? k : k - 1)) {
        ok = false;
        break;
      }
    }
    report.add(ReportRow{id + "/bin", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                         ok ? "rows in {k-1;k}" : "row sum off", "exact", ok});
  }
  // Unit: row sums within [k-1, k-1+(n-k+1)/n].
  {
    const IncidenceMatrix m = build_incidence_matrix(h, ReductionVariant::kUnit);
    const Rational lo(k - 1);
    const Rational hi = Rational(k - 1) + Rational(n - k + 1, n);
    bool ok = true;
    for (long long r = 0; r < m.rows; ++r) {
      const Rational sum = m.row_sum(r);
      if (sum < lo || sum > hi) {
        ok = false;
        break;
      }
    }
    report.add(ReportRow{id + "/unit", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                         ok ? "rows in range" : "row sum off", "exact", ok});
  }
}

}  // namespace

Report row_sum_suite(RunPolicy policy) {
  const std::vector<Edge> graph_universe = all_subsets(5, 2);
  const std::vector<Edge> triple_universe = all_subsets(5, 3);
  // 1024 graphs then 1024 3-uniform hypergraphs, one case each.
  return sweep(2048, policy, [&](std::size_t i, Report& report) {
    if (i < 1024) {
      check_row_sums(hypergraph_from_mask(5, 2, graph_universe,
                                          static_cast<std::uint32_t>(i)),
                     report, pad_id("rowsum/g5", i));
    } else {
      check_row_sums(hypergraph_from_mask(5, 3, triple_universe,
                                          static_cast<std::uint32_t>(i - 1024)),
                     report, pad_id("rowsum/h5", i - 1024));
    }
  });
}

namespace {

void check_chi_equals_opt(const Hypergraph& h, Report& report, const std::string& id) {
  const int chi = chromatic_number(h);
  const int opt_binary =
      exact_opt_bins(incidence_instance(h, ReductionVariant::kBinary));
  const int opt_unit =
      exact_opt_bins(incidence_instance(h, ReductionVariant::kUnit));
  const bool ok = chi == opt_binary && chi == opt_unit;
  report.add(ReportRow{
      id, "n=" + std::to_string(h.n()) + " k=" + std::to_string(h.k()) +
              " edges=" + std::to_string(h.edges().size()),
      "chi=" + std::to_string(chi) + " opt_bin=" + std::to_string(opt_binary) +
          " opt_unit=" + std::to_string(opt_unit),
      "chi = OPT", ok});
}

}  // namespace

Hypergraph random_uniform_hypergraph(std::uint64_t case_seed, int k, int max_n) {
  SplitMix64 rng(case_seed);
  const int n = static_cast<int>(rng.range(k, max_n));
  const std::vector<Edge> universe = all_subsets(n, k);
  std::vector<Edge> edges;
  for (const Edge& e : universe) {
    if (rng.chance(1, 2)) edges.push_back(e);
  }
  return Hypergraph(n, k, edges);
}

Report chi_equals_opt_suite(RunPolicy policy, std::uint64_t seed, int random_cases) {
  const std::vector<Edge> graph_universe = all_subsets(5, 2);
  const std::size_t total = 1024 + static_cast<std::size_t>(random_cases);
  return sweep(total, policy, [&, seed](std::size_t i, Report& report) {
    if (i < 1024) {
      check_chi_equals_opt(hypergraph_from_mask(5, 2, graph_universe,
                                        static_cast<std::uint32_t>(i)),
                   report, pad_id("chieq/g5", i));
    } else {
      check_chi_equals_opt(random_uniform_hypergraph(derive_seed(seed, i), 3, 6),
                   report, pad_id("chieq/rand3", i - 1024));
    }
  });
}

VbpInstance random_binary_instance(std::uint64_t case_seed) {
  SplitMix64 rng(case_seed);
  const int d = static_cast<int>(rng.range(1, 20));
  const int n = static_cast<int>(rng.range(0, 30));
  const long long bin_size = rng.range(1, 3);
  const std::uint64_t density = static_cast<std::uint64_t>(rng.range(1, 9));
  std::vector<std::vector<int>> items(n, std::vector<int>(d, 0));
  for (auto& item : items) {
    for (int& cell : item) {
      cell = rng.chance(density, 10) ? 1 : 0;
    }
  }
  return VbpInstance::binary(d, bin_size, items);
}

Report ff_bound_suite(RunPolicy policy, std::uint64_t seed, int cases) {
  return sweep(static_cast<std::size_t>(cases), policy,
               [seed](std::size_t i, Report& report) {
    const VbpInstance instance = random_binary_instance(derive_seed(seed, i));
    const int d = instance.dimension();
    const long long bin = instance.bin_size().num();
    const PackingAssignment packed = first_fit_pack(instance);
    const int ff = packed.bin_count();
    const int p = max_row_ones(instance);
    const std::string params = "d=" + std::to_string(d) +
                               " n=" + std::to_string(instance.n()) +
                               " B=" + std::to_string(bin) +
                               " p=" + std::to_string(p);

    bool ok = verify_packing(instance, packed);
    std::string measured = "ff=" + std::to_string(ff);
    std::string bound_text;
    if (p <= 1) {
      // No two items collide in any coordinate: one bin is enough and
      // FirstFit finds it.
      const int opt = exact_opt_bins(instance, 40);
      ok = ok && ff <= 1 && opt == ff;
      bound_text = "p<=1 => ff=opt<=1";
    } else {
      const FfBinBound bound = ff_bin_bound(d, p, bin);
      ok = ok && ff <= bound.floor_bound;
      // The closed form stays under its simplified reading.
      const double simplified =
          bin == 1 ? std::sqrt(2.0 * d) * p + 0.5
                   : std::sqrt(2.0 * d) * p / bin + 2.0 * (bin - 1.25) / bin;
      ok = ok && bound.value < simplified;
      bound_text = "ff<=" + std::to_string(bound.floor_bound);
      if (instance.n() <= kDefaultOptItemCap) {
        const int opt = exact_opt_bins(instance);
        ok = ok && ff >= opt;
        const double ratio_cap = std::sqrt(2.0 * d) + 2.0;
        ok = ok &&
             competitive_ratio(ff, opt).to_double() < ratio_cap;
        measured += " opt=" + std::to_string(opt);
        bound_text += " ratio<sqrt(2d)+2";
      }
    }
    report.add(ReportRow{pad_id("ffbound", i), params, measured, bound_text, ok});
  });
}

VbpInstance random_unit_instance(std::uint64_t case_seed, bool small_bin) {
  SplitMix64 rng(case_seed);
  const int d = static_cast<int>(rng.range(1, 6));
  const int n = static_cast<int>(rng.range(0, 9));
  // small_bin draws B from (1,2); otherwise from [2,4].
  const long long den = rng.range(2, 4);
  const long long num =
      small_bin ? rng.range(den + 1, 2 * den - 1) : rng.range(2 * den, 4 * den);
  const Rational bin_size(num, den);
  std::vector<ItemVector> items;
  items.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> entries;
    entries.reserve(d);
    for (int r = 0; r < d; ++r) {
      const long long eden = rng.range(1, 6);
      entries.emplace_back(rng.range(0, eden), eden);
    }
    items.emplace_back(std::move(entries), VectorMode::kUnit);
  }
  return VbpInstance(VectorMode::kUnit, d, bin_size, std::move(items));
}

Report unit_ratio_suite(RunPolicy policy, std::uint64_t seed, int cases) {
  return sweep(static_cast<std::size_t>(cases), policy,
               [seed](std::size_t i, Report& report) {
    const bool small_bin = i % 3 == 0;  // a third of cases draw B in (1,2)
    const VbpInstance instance =
        random_unit_instance(derive_seed(seed, i), small_bin);
    const int d = instance.dimension();
    const double bin = instance.bin_size().to_double();
    const PackingAssignment packed = first_fit_pack(instance);
    const int ff = packed.bin_count();
    bool ok = verify_packing(instance, packed);
    std::string measured = "ff=" + std::to_string(ff);
    if (instance.n() == 0) {
      ok = ok && ff == 0;
    } else {
      const int opt = exact_opt_bins(instance);
      measured += " opt=" + std::to_string(opt);
      const double ratio = competitive_ratio(ff, opt).to_double();
      const double general =
          std::sqrt(2.0 * d) * bin / (bin - 1.0) + 2.0 / opt;
      ok = ok && ratio < general;
      if (instance.bin_size() >= Rational(2)) {
        ok = ok && ratio < 2.0 * std::sqrt(2.0 * d) + 2.0;
      }
    }
    report.add(ReportRow{pad_id("unitratio", i),
                         "d=" + std::to_string(d) + " n=" +
                             std::to_string(instance.n()) + " B=" +
                             instance.bin_size().fraction_str(),
                         measured, "ratio under FirstFit cap", ok});
  });
}

namespace {

// Enumerates multisets of size <= member_cap over the nonempty subsets of
// [1,q] as sorted type-index sequences.
void enumerate_multisets(int types, int member_cap,
                         std::vector<std::vector<int>>& out) {
  std::vector<int> current;
  const auto rec = [&](auto&& self, int start) -> void {
    if (!current.empty()) out.push_back(current);
    if (static_cast<int>(current.size()) == member_cap) return;
    for (int t = start; t < types; ++t) {
      current.push_back(t);
      self(self, t);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<int> subset_of_bits(std::uint32_t bits) {
  std::vector<int> out;
  for (int c = 1; bits; ++c, bits >>= 1) {
    if (bits & 1u) out.push_back(c);
  }
  return out;
}

void check_partition_family(const MultiFamily& family, Report& report,
                            const std::string& id) {
  // For every quota p that some diverse partition meets: rewriting it must
  // verify starry, and the exhaustive starry search must agree one exists.
  const int q = family.q();
  const int max_p = family.size() / std::max(q, 1);
  bool any = false;
  bool ok = true;
  for (int p = 1; p <= max_p && ok; ++p) {
    const auto diverse = brute_force_diverse(family, p);
    if (!diverse.has_value()) break;  // larger p only gets harder
    any = true;
    const BlockPartition starry = diverse_to_starry(family, *diverse, p);
    ok = verify_starry(family, starry, p) &&
         brute_force_starry(family, p).has_value();
  }
  report.add(ReportRow{id,
                       "q=" + std::to_string(q) + " members=" +
                           std::to_string(family.size()),
                       any ? (ok ? "diverse => starry" : "rewrite failed")
                           : "no diverse partition",
                       "exact", ok});
}

}  // namespace

Report partition_exhaustive_suite(RunPolicy policy, int member_cap) {
  // Families over |C| = 3 dominate; sizes 1 and 2 ride along at the end.
  std::vector<std::pair<int, std::vector<int>>> cases;  // (q, type list)
  for (int q = 1; q <= 3; ++q) {
    std::vector<std::vector<int>> multisets;
    enumerate_multisets((1 << q) - 1, member_cap, multisets);
    for (auto& types : multisets) cases.emplace_back(q, std::move(types));
  }
  return sweep(cases.size(), policy, [&](std::size_t i, Report& report) {
    const auto& [q, types] = cases[i];
    MultiFamily family;
    for (int c = 1; c <= q; ++c) family.ground.push_back(c);
    for (int t : types) {
      family.members.push_back(subset_of_bits(static_cast<std::uint32_t>(t) + 1));
    }
    check_partition_family(family, report, pad_id("diverse2starry/exh", i));
  });
}

Report partition_random_suite(RunPolicy policy, std::uint64_t seed, int cases) {
  return sweep(static_cast<std::size_t>(cases), policy,
               [seed](std::size_t i, Report& report) {
    SplitMix64 rng(derive_seed(seed, i));
    const int q = static_cast<int>(rng.range(1, 5));
    const int p = static_cast<int>(rng.range(1, 4));
    MultiFamily family;
    for (int c = 1; c <= q; ++c) family.ground.push_back(c);
    // Build the witness partition directly: block i holds p..p+2 members of
    // size >= i, then member order is shuffled.
    std::vector<int> block_of_member;
    for (int block = 1; block <= q; ++block) {
      const int count = p + static_cast<int>(rng.range(0, 2));
      for (int j = 0; j < count; ++j) {
        const int size = static_cast<int>(rng.range(block, q));
        std::vector<int> colors(family.ground);
        rng.shuffle(colors);
        colors.resize(size);
        std::sort(colors.begin(), colors.end());
        family.members.push_back(std::move(colors));
        block_of_member.push_back(block);
      }
    }
    std::vector<int> order(family.members.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    MultiFamily shuffled;
    shuffled.ground = family.ground;
    BlockPartition diverse;
    diverse.blocks.assign(q, {});
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      shuffled.members.push_back(family.members[order[pos]]);
      diverse.blocks[block_of_member[order[pos]] - 1].push_back(
          static_cast<int>(pos));
    }
    bool ok = verify_diverse(shuffled, diverse, p);
    const BlockPartition starry = diverse_to_starry(shuffled, diverse, p);
    ok = ok && verify_starry(shuffled, starry, p);
    if (q <= 4 && shuffled.size() <= 12) {
      ok = ok && brute_force_starry(shuffled, p).has_value();
    }
    report.add(ReportRow{pad_id("diverse2starry/rand", i),
                         "q=" + std::to_string(q) + " p=" + std::to_string(p) +
                             " members=" + std::to_string(shuffled.size()),
                         ok ? "rewrite verified" : "rewrite failed", "exact",
                         ok});
  });
}

namespace {

Coloring coloring_from_transcript(const AdversaryTranscript& transcript) {
  Coloring coloring;
  coloring.colors.assign(transcript.final_hypergraph.n(), 0);
  for (const TranscriptStep& step : transcript.steps) {
    coloring.colors[step.vertex - 1] = step.color;
  }
  return coloring;
}

}  // namespace

Report adversary_matrix_suite(RunPolicy policy, int max_m) {
  struct Case {
    std::string colorer;
    int k;
    int m;
  };
  std::vector<Case> cases;
  for (const std::string& name : known_colorer_names()) {
    for (int k = 2; k <= 5; ++k) {
      for (int m = 1; m <= max_m; ++m) cases.push_back(Case{name, k, m});
    }
  }
  return sweep(cases.size(), policy, [&](std::size_t i, Report& report) {
    const Case& c = cases[i];
    const auto colorer = make_colorer(c.colorer);
    const AdversaryTranscript transcript =
        hypertree_adversary(*colorer, c.k, c.m);
    const Hypergraph& h = transcript.final_hypergraph;
    const unsigned long long cap = vertex_count_bound(c.k, c.m);

    bool ok = transcript.colors_used.size() >= static_cast<std::size_t>(c.m);
    ok = ok && static_cast<unsigned long long>(h.n()) <= cap;
    ok = ok && is_hypertree(h);
    ok = ok && is_proper(h, coloring_from_transcript(transcript));

    // Replaying the recorded hypergraph against a fresh instance of the same
    // colorer reproduces the transcript.
    const auto replay = make_colorer(c.colorer);
    const Coloring replayed = run_colorer(h, *replay, /*give_n_hint=*/false);
    ok = ok && replayed.colors == coloring_from_transcript(transcript).colors;

    // FirstFit itself obeys the hypertree cap on this instance.
    const auto ff_colors = colors_used(first_fit_color(h));
    const long long ff_cap = ff_hypertree_upper_floor(h.n(), c.k);
    ok = ok && static_cast<long long>(ff_colors.size()) <= ff_cap;

    report.add(ReportRow{
        pad_id("adversary", i),
        c.colorer + " k=" + std::to_string(c.k) + " m=" + std::to_string(c.m),
        "colors=" + std::to_string(transcript.colors_used.size()) +
            " vertices=" + std::to_string(h.n()) +
            " ff=" + std::to_string(ff_colors.size()),
        ">=m colors; <=k^(m-1) vertices; hypertree", ok});
  });
}

Hypergraph random_hypertree(std::uint64_t case_seed) {
  SplitMix64 rng(case_seed);
  const int k = static_cast<int>(rng.range(2, 5));
  const int max_edges = (60 - 1) / (k - 1);
  const int edge_count = static_cast<int>(rng.range(0, std::min(max_edges, 15)));
  const int n = 1 + edge_count * (k - 1);
  // Grow by attaching k-1 fresh leaves to a random existing vertex, then
  // shuffle the labels so arrival order is arbitrary.
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 1);
  rng.shuffle(relabel);
  std::vector<Edge> edges;
  int built = 1;
  for (int e = 0; e < edge_count; ++e) {
    Edge edge = {relabel[rng.range(0, built - 1)]};
    for (int j = 0; j < k - 1; ++j) edge.push_back(relabel[built++]);
    std::sort(edge.begin(), edge.end());
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, k, edges);
}

Report hypertree_ff_suite(RunPolicy policy, std::uint64_t seed, int cases) {
  return sweep(static_cast<std::size_t>(cases), policy,
               [seed](std::size_t i, Report& report) {
    const Hypergraph h = random_hypertree(derive_seed(seed, i));
    const auto used = colors_used(first_fit_color(h));
    const long long cap = ff_hypertree_upper_floor(h.n(), h.k());
    const bool ok =
        is_hypertree(h) && static_cast<long long>(used.size()) <= cap;
    report.add(ReportRow{pad_id("hypertree_ff", i),
                         "n=" + std::to_string(h.n()) + " k=" +
                             std::to_string(h.k()),
                         "ff=" + std::to_string(used.size()),
                         "<=" + std::to_string(cap), ok});
  });
}

Report killer_suite(RunPolicy policy, int max_n) {
  std::vector<int> sizes;
  for (int n = 2; n <= max_n; n += 2) sizes.push_back(n);
  return sweep(sizes.size(), policy, [&](std::size_t i, Report& report) {
    const int n = sizes[i];
    const OnlineGraphStream stream = killer_graph_stream(n);
    const Coloring ff = first_fit_color(stream.final_hypergraph);
    const int used = static_cast<int>(colors_used(ff).size());
    const int chi = chromatic_number(stream.final_hypergraph,
                                     ChromaticCaps{std::max(16, n), 12});
    const bool ok = used == n / 2 && chi == (n >= 4 ? 2 : 1) &&
                    is_proper(stream.final_hypergraph, ff);
    report.add(ReportRow{pad_id("killer", i), "n=" + std::to_string(n),
                         "ff=" + std::to_string(used) +
                             " chi=" + std::to_string(chi),
                         "ff=n/2; chi=2", ok});
  });
}

Report run_verify(const std::string& scale, RunPolicy policy,
                  std::uint64_t seed) {
  const bool full = scale == "full";
  if (!full && scale != "smoke") {
    throw std::invalid_argument("scale must be 'smoke' or 'full'");
  }
  Report out;
  out.merge(row_sum_suite(policy));
  out.merge(chi_equals_opt_suite(policy, seed, full ? 200 : 60));
  out.merge(ff_bound_suite(policy, seed, full ? 1000 : 200));
  out.merge(unit_ratio_suite(policy, seed, full ? 300 : 90));
  out.merge(partition_exhaustive_suite(policy, full ? 8 : 6));
  out.merge(partition_random_suite(policy, seed, full ? 500 : 120));
  out.merge(adversary_matrix_suite(policy, full ? 5 : 4));
  out.merge(hypertree_ff_suite(policy, seed, full ? 100 : 40));
  out.merge(killer_suite(policy, full ? 20 : 12));
  out.sort_rows();
  return out;
}

}  // namespace colorpack
