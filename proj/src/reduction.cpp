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

#include <cmath>
#include <memory>
#include <stdexcept>

#include "colorpack/adversary.hpp"
#include "colorpack/colorers.hpp"
#include "colorpack/errors.hpp"
#include "colorpack/incidence.hpp"

namespace colorpack {

namespace {

std::unique_ptr<OnlinePacker> make_packer(PackerKind kind, long long dimension,
                                          Rational bin_size) {
  switch (kind) {
    case PackerKind::kFirstFit:
      return std::make_unique<FirstFitPacker>(static_cast<int>(dimension),
                                              bin_size);
  }
  throw std::invalid_argument("unknown packer kind");
}

}  // namespace

ReductionOutcome reduction_experiment(const ReductionConfig& config) {
  if (config.bin_size < 1) {
    throw std::invalid_argument("bin size must be >= 1");
  }
  const int k = static_cast<int>(config.bin_size) + 1;  // B = k-1 either way
  const int subset_size = config.variant == ReductionVariant::kBinary ? k : k - 1;
  if (config.d < 1 ||
      static_cast<unsigned long long>(config.d) < binom(k, subset_size)) {
    throw std::invalid_argument(
        "dimension too small to host even one column of this uniformity");
  }
  const int n = choose_n(config.d, subset_size);

  std::unique_ptr<OnlinePacker> packer =
      make_packer(config.packer, config.d, Rational(k - 1));

  AdversaryTranscript transcript;
  int n_used = 0;
  if (config.adversary == AdversaryKind::kKiller) {
    if (n % 2 != 0) {
      throw std::invalid_argument(
          "killer adversary needs an even vertex budget; choose_n(d) = " +
          std::to_string(n));
    }
    if (k != 2) {
      throw std::invalid_argument("killer adversary is a graph construction; "
                                  "it needs B = 1");
    }
    n_used = n;
    PackerBackedColorer colorer(*packer, n_used, k, config.variant, config.d);
    transcript = run_stream(killer_graph_stream(n_used), colorer,
                            /*give_n_hint=*/true);
  } else {
    if (config.depth < 1) {
      throw std::invalid_argument("hypertree adversary needs depth m >= 1");
    }
    const unsigned long long need = vertex_count_bound(k, config.depth);
    if (need > static_cast<unsigned long long>(n)) {
      throw std::invalid_argument(
          "dimension hosts only " + std::to_string(n) +
          " vertices but the depth-" + std::to_string(config.depth) +
          " hypertree needs " + std::to_string(need));
    }
    n_used = static_cast<int>(need);
    PackerBackedColorer colorer(*packer, n_used, k, config.variant, config.d);
    transcript = hypertree_adversary(colorer, k, config.depth);
  }

  // Rebuild the emitted instance from the final hypergraph: the columns a
  // replay would produce are exactly the ones the packer saw.
  std::vector<ItemVector> items;
  {
    std::set<int> arrived;
    const Hypergraph& h = transcript.final_hypergraph;
    for (int t = 1; t <= h.n(); ++t) {
      SparseColumn column =
          config.variant == ReductionVariant::kBinary
              ? online_column_binary(n_used, k, arrived, t,
                                     reveal_at_arrival(h, t))
              : online_column_unit(n_used, k, arrived, t,
                                   reveal_at_arrival(h, t));
      column = pad_column(column, config.d);
      items.push_back(column.to_item(config.variant == ReductionVariant::kBinary
                                         ? VectorMode::kBinary
                                         : VectorMode::kUnit));
      arrived.insert(t);
    }
  }
  ReductionOutcome out{
      .n = n_used,
      .k = k,
      .d_prime = static_cast<long long>(binom(n_used, subset_size)),
      .bins = static_cast<int>(transcript.colors_used.size()),
      .chi = 0,
      .opt = 0,
      .ratio = Rational(0),
      .bound = 0,
      .pass = false,
      .instance = VbpInstance(config.variant == ReductionVariant::kBinary
                                  ? VectorMode::kBinary
                                  : VectorMode::kUnit,
                              static_cast<int>(config.d), Rational(k - 1),
                              std::move(items)),
      .hypergraph = transcript.final_hypergraph,
  };
  out.chi = chromatic_number(out.hypergraph);
  out.opt = exact_opt_bins(out.instance);
  out.ratio = competitive_ratio(out.bins, out.chi);

  const double ratio = out.ratio.to_double();
  if (config.adversary == AdversaryKind::kKiller) {
    if (config.variant == ReductionVariant::kBinary) {
      out.bound = (std::sqrt(2.0 * static_cast<double>(config.d)) - 1.0) / 4.0;
      out.pass = ratio > out.bound;
    } else {
      out.bound = static_cast<double>(config.d) / 4.0;
      out.pass = ratio >= out.bound;
    }
  } else {
    out.bound = static_cast<double>(config.depth) / out.chi;
    out.pass = out.bins >= config.depth && ratio >= out.bound;
  }
  return out;
}

}  // namespace colorpack
