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

#ifndef COLORPACK_INCIDENCE_HPP_
#define COLORPACK_INCIDENCE_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colorpack/hypergraph.hpp"
#include "colorpack/rational.hpp"
#include "colorpack/vbp.hpp"

namespace colorpack {

// The online incidence matrix of a hypergraph turns vertex arrivals into
// 0/1 (or [0,1]) columns a packer can consume at arrival time:
//   - binary rows are all k-subsets of [1,n]; a row holds a 1 for vertex v
//     when v is in the subset and either the subset is not yet complete or
//     it is a revealed edge;
//   - unit rows are all (k-1)-subsets; a member vertex contributes 1 and the
//     vertex completing a revealed edge over an already-arrived subset
//     contributes 1/n.
// With bin size B = k-1, feasible bins are exactly color classes.

enum class ReductionVariant { kBinary, kUnit };

std::string to_string(ReductionVariant variant);

// C(n, k); throws std::overflow_error past 2^63.
unsigned long long binom(int n, int k);

// Lexicographic rank of a sorted subset among all |S|-subsets of [1,n].
long long rank_subset(const std::vector<int>& subset, int n);
std::vector<int> unrank_subset(long long rank, int n, int size);

struct SparseColumn {
  long long dimension = 0;
  // (row rank, value), strictly increasing row ranks; zero rows implicit.
  std::vector<std::pair<long long, Rational>> entries;

  ItemVector to_item(VectorMode mode) const;
  bool operator==(const SparseColumn& o) const = default;
};

// The column revealed by v's arrival. `arrived` holds the earlier vertices;
// each revealed edge must contain v and lie inside arrived + {v}.
SparseColumn online_column_binary(int n, int k, const std::set<int>& arrived,
                                  int v, const std::vector<Edge>& revealed);
SparseColumn online_column_unit(int n, int k, const std::set<int>& arrived,
                                int v, const std::vector<Edge>& revealed);

inline constexpr int kDefaultDenseCap = 12;

struct IncidenceMatrix {
  long long rows = 0;
  int cols = 0;
  // dense[r][c], row-major.
  std::vector<std::vector<Rational>> dense;

  Rational row_sum(long long r) const;
};

// Concatenates the per-arrival columns using h's true revelations.
IncidenceMatrix build_incidence_matrix(const Hypergraph& h,
                                       ReductionVariant variant,
                                       int cap_n = kDefaultDenseCap);

// The matrix as a packing instance with bin size k-1 (binary or unit mode
// per variant).
VbpInstance incidence_instance(const Hypergraph& h, ReductionVariant variant,
                               int cap_n = kDefaultDenseCap);

// Largest n with C(n, size) <= d.
int choose_n(long long d, int size);

// Same entries, larger dimension (extra zero rows never constrain a packer).
SparseColumn pad_column(const SparseColumn& column, long long d_target);

// Runs a packer as an online colorer: each arriving vertex becomes its
// online column (padded to pad_to when given), the packer places it, and the
// bin index is the color. Needs the vertex count up front; feasibility is
// re-checked after every placement and a violation aborts the run.
class PackerBackedColorer final : public OnlineColorer {
 public:
  PackerBackedColorer(OnlinePacker& packer, int n, int k,
                      ReductionVariant variant,
                      std::optional<long long> pad_to = std::nullopt);

  void start(std::optional<int> n_hint) override;
  int on_vertex(int v, const std::vector<Edge>& revealed) override;

  int bins_used() const { return static_cast<int>(loads_.size()); }
  long long dimension() const { return dimension_; }
  // The columns fed to the packer so far, as a replayable instance.
  VbpInstance emitted_instance() const;

 private:
  OnlinePacker& packer_;
  int n_;
  int k_;
  ReductionVariant variant_;
  long long dimension_;
  Rational bin_size_;
  std::set<int> arrived_;
  std::vector<ItemVector> emitted_;
  std::vector<std::vector<Rational>> loads_;
};

enum class AdversaryKind { kKiller, kHypertree };
enum class PackerKind { kFirstFit };

AdversaryKind parse_adversary(const std::string& name);
PackerKind parse_packer(const std::string& name);

struct ReductionConfig {
  AdversaryKind adversary = AdversaryKind::kKiller;
  PackerKind packer = PackerKind::kFirstFit;
  long long d = 0;          // target packing dimension
  long long bin_size = 1;   // integer B; k = B + 1 in both variants
  ReductionVariant variant = ReductionVariant::kBinary;
  int depth = 0;            // m, hypertree adversary only
};

struct ReductionOutcome {
  int n = 0;        // vertices presented
  int k = 0;
  long long d_prime = 0;  // natural column dimension before padding
  int bins = 0;
  int chi = 0;
  int opt = 0;      // exact OPT of the emitted instance
  Rational ratio;   // bins / chi
  double bound = 0; // the matching lower-bound guarantee
  bool pass = false;
  VbpInstance instance;
  Hypergraph hypergraph;
};

// Plays the chosen adversary against the packer-backed colorer in dimension
// d, then reports bins, the oracle chromatic number, their ratio, and the
// matching guarantee:
//   killer + binary (B=1):  ratio > (sqrt(2d) - 1) / 4
//   killer + unit   (B=1):  ratio >= d / 4
//   hypertree:              bins >= m and ratio >= m / chi(T_m)
ReductionOutcome reduction_experiment(const ReductionConfig& config);

}  // namespace colorpack

#endif  // COLORPACK_INCIDENCE_HPP_
