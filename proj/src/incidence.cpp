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

#include "colorpack/incidence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "colorpack/errors.hpp"

namespace colorpack {

std::string to_string(ReductionVariant variant) {
  return variant == ReductionVariant::kBinary ? "binary" : "unit";
}

unsigned long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (int i = 1; i <= k; ++i) {
    const unsigned long long numer =
        static_cast<unsigned long long>(n - k) + static_cast<unsigned long long>(i);
    // result * numer / i is integral at every step; guard the product.
    if (result > (1ULL << 63) / numer) {
      throw std::overflow_error("binomial overflow");
    }
    result = result * numer / i;
  }
  return result;
}

long long rank_subset(const std::vector<int>& subset, int n) {
  const int size = static_cast<int>(subset.size());
  if (size == 0) return 0;
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw std::domain_error("subset must be sorted and distinct");
  }
  if (subset.front() < 1 || subset.back() > n) {
    throw std::domain_error("subset label out of [1,n]");
  }
  // Count the subsets that precede this one lexicographically: for each
  // position j, those agreeing before j and taking a smaller j-th element.
  long long rank = 0;
  int prev = 0;
  for (int j = 0; j < size; ++j) {
    for (int c = prev + 1; c < subset[j]; ++c) {
      rank += static_cast<long long>(binom(n - c, size - j - 1));
    }
    prev = subset[j];
  }
  return rank;
}

std::vector<int> unrank_subset(long long rank, int n, int size) {
  if (size < 0 || size > n) throw std::domain_error("bad subset size");
  if (rank < 0 || rank >= static_cast<long long>(binom(n, size))) {
    throw std::domain_error("rank out of range");
  }
  std::vector<int> subset;
  subset.reserve(size);
  int c = 1;
  for (int j = 0; j < size; ++j) {
    for (;; ++c) {
      const long long count =
          static_cast<long long>(binom(n - c, size - j - 1));
      if (rank < count) break;
      rank -= count;
    }
    subset.push_back(c);
    ++c;
  }
  return subset;
}

ItemVector SparseColumn::to_item(VectorMode mode) const {
  std::vector<Rational> dense(static_cast<std::size_t>(dimension), Rational(0));
  for (const auto& [row, value] : entries) {
    dense[static_cast<std::size_t>(row)] = value;
  }
  return ItemVector(std::move(dense), mode);
}

namespace {

void check_revealed(int n, const std::set<int>& arrived, int v,
                    const std::vector<Edge>& revealed, int edge_size) {
  if (v < 1 || v > n) throw std::domain_error("vertex label out of [1,n]");
  if (arrived.count(v) > 0) {
    throw std::invalid_argument("arriving vertex already arrived");
  }
  for (const Edge& e : revealed) {
    if (static_cast<int>(e.size()) != edge_size) {
      throw std::invalid_argument("revealed edge has wrong size");
    }
    bool has_v = false;
    for (int u : e) {
      if (u == v) {
        has_v = true;
      } else if (arrived.count(u) == 0) {
        throw std::invalid_argument(
            "revealed edge contains a vertex that has not arrived");
      }
    }
    if (!has_v) {
      throw std::invalid_argument("revealed edge is not completed by v");
    }
  }
}

// Enumerates the sorted size-subsets of [1,n] containing v and calls
// fn(subset). Emission order is not row order; callers sort by rank.
template <typename Fn>
void for_each_subset_containing(int n, int size, int v, Fn&& fn) {
  std::vector<int> subset(size);
  std::vector<int> pool;
  pool.reserve(n - 1);
  for (int u = 1; u <= n; ++u) {
    if (u != v) pool.push_back(u);
  }
  const int m = size - 1;
  if (m > static_cast<int>(pool.size())) return;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    for (int i = 0; i < m; ++i) subset[i] = pool[idx[i]];
    subset[m] = v;
    std::sort(subset.begin(), subset.end());
    fn(subset);
    int i = m - 1;
    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SparseColumn online_column_binary(int n, int k, const std::set<int>& arrived,
                                  int v, const std::vector<Edge>& revealed) {
  check_revealed(n, arrived, v, revealed, k);
  SparseColumn column;
  column.dimension = static_cast<long long>(binom(n, k));
  for_each_subset_containing(n, k, v, [&](const std::vector<int>& e) {
    bool complete = true;
    for (int u : e) {
      if (u != v && arrived.count(u) == 0) {
        complete = false;
        break;
      }
    }
    const bool one =
        !complete ||
        std::find(revealed.begin(), revealed.end(), e) != revealed.end();
    if (one) column.entries.emplace_back(rank_subset(e, n), Rational(1));
  });
  std::sort(column.entries.begin(), column.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return column;
}

SparseColumn online_column_unit(int n, int k, const std::set<int>& arrived,
                                int v, const std::vector<Edge>& revealed) {
  check_revealed(n, arrived, v, revealed, k);
  SparseColumn column;
  column.dimension = static_cast<long long>(binom(n, k - 1));
  // Rows with v as a member always read 1.
  for_each_subset_containing(n, k - 1, v, [&](const std::vector<int>& eps) {
    column.entries.emplace_back(rank_subset(eps, n), Rational(1));
  });
  // A revealed edge contributes 1/n at the row of its other k-1 vertices.
  for (const Edge& e : revealed) {
    std::vector<int> eps;
    eps.reserve(k - 1);
    for (int u : e) {
      if (u != v) eps.push_back(u);
    }
    column.entries.emplace_back(rank_subset(eps, n), Rational(1, n));
  }
  std::sort(column.entries.begin(), column.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return column;
}

Rational IncidenceMatrix::row_sum(long long r) const {
  Rational sum(0);
  for (int c = 0; c < cols; ++c) sum += dense[static_cast<std::size_t>(r)][c];
  return sum;
}

namespace {

std::vector<SparseColumn> online_columns(const Hypergraph& h,
                                         ReductionVariant variant) {
  std::vector<SparseColumn> columns;
  columns.reserve(h.n());
  std::set<int> arrived;
  for (int t = 1; t <= h.n(); ++t) {
    const std::vector<Edge> revealed = reveal_at_arrival(h, t);
    columns.push_back(variant == ReductionVariant::kBinary
                          ? online_column_binary(h.n(), h.k(), arrived, t, revealed)
                          : online_column_unit(h.n(), h.k(), arrived, t, revealed));
    arrived.insert(t);
  }
  return columns;
}

}  // namespace

IncidenceMatrix build_incidence_matrix(const Hypergraph& h,
                                       ReductionVariant variant, int cap_n) {
  if (h.n() > cap_n) {
    throw CapacityError("build_incidence_matrix: " + std::to_string(h.n()) +
                        " vertices exceeds dense cap " + std::to_string(cap_n));
  }
  IncidenceMatrix m;
  m.cols = h.n();
  m.rows = static_cast<long long>(
      binom(h.n(), variant == ReductionVariant::kBinary ? h.k() : h.k() - 1));
  m.dense.assign(static_cast<std::size_t>(m.rows),
                 std::vector<Rational>(h.n(), Rational(0)));
  const std::vector<SparseColumn> columns = online_columns(h, variant);
  for (int c = 0; c < h.n(); ++c) {
    for (const auto& [row, value] : columns[c].entries) {
      m.dense[static_cast<std::size_t>(row)][c] = value;
    }
  }
  return m;
}

VbpInstance incidence_instance(const Hypergraph& h, ReductionVariant variant,
                               int cap_n) {
  if (h.n() > cap_n) {
    throw CapacityError("incidence_instance: vertex count exceeds cap");
  }
  const VectorMode mode = variant == ReductionVariant::kBinary
                              ? VectorMode::kBinary
                              : VectorMode::kUnit;
  std::vector<ItemVector> items;
  items.reserve(h.n());
  for (const SparseColumn& column : online_columns(h, variant)) {
    items.push_back(column.to_item(mode));
  }
  const long long rows = static_cast<long long>(
      binom(h.n(), variant == ReductionVariant::kBinary ? h.k() : h.k() - 1));
  return VbpInstance(mode, static_cast<int>(rows), Rational(h.k() - 1),
                     std::move(items));
}

int choose_n(long long d, int size) {
  if (d < 1) throw std::domain_error("choose_n needs d >= 1");
  if (size < 1) throw std::domain_error("choose_n needs size >= 1");
  int n = size;  // C(size, size) = 1 <= d
  while (binom(n + 1, size) <= static_cast<unsigned long long>(d)) ++n;
  return n;
}

SparseColumn pad_column(const SparseColumn& column, long long d_target) {
  if (d_target < column.dimension) {
    throw std::domain_error("pad_column target below current dimension");
  }
  SparseColumn out = column;
  out.dimension = d_target;
  return out;
}

PackerBackedColorer::PackerBackedColorer(OnlinePacker& packer, int n, int k,
                                         ReductionVariant variant,
                                         std::optional<long long> pad_to)
    : packer_(packer), n_(n), k_(k), variant_(variant), bin_size_(k - 1) {
  if (n_ < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (k_ < 2) throw std::invalid_argument("uniformity must be >= 2");
  // n < k leaves no rows at all; one zero row keeps the items well-formed.
  const long long natural = std::max<long long>(
      1, static_cast<long long>(
             binom(n_, variant_ == ReductionVariant::kBinary ? k_ : k_ - 1)));
  dimension_ = pad_to.value_or(natural);
  if (dimension_ < natural) {
    throw std::domain_error("pad target below natural column dimension");
  }
}

void PackerBackedColorer::start(std::optional<int> n_hint) {
  if (n_hint.has_value() && *n_hint > n_) {
    throw std::invalid_argument(
        "packer-backed colorer was sized for fewer vertices");
  }
}

int PackerBackedColorer::on_vertex(int v, const std::vector<Edge>& revealed) {
  SparseColumn column =
      variant_ == ReductionVariant::kBinary
          ? online_column_binary(n_, k_, arrived_, v, revealed)
          : online_column_unit(n_, k_, arrived_, v, revealed);
  column = pad_column(column, dimension_);
  const VectorMode mode = variant_ == ReductionVariant::kBinary
                              ? VectorMode::kBinary
                              : VectorMode::kUnit;
  const ItemVector item = column.to_item(mode);
  const int bin = packer_.place(item);
  if (bin < 1 || bin > static_cast<int>(loads_.size()) + 1) {
    throw ValidityError("packer opened a non-contiguous bin");
  }
  if (bin == static_cast<int>(loads_.size()) + 1) {
    loads_.emplace_back(static_cast<std::size_t>(dimension_), Rational(0));
  }
  auto& load = loads_[bin - 1];
  for (const auto& [row, value] : column.entries) {
    load[static_cast<std::size_t>(row)] += value;
    if (load[static_cast<std::size_t>(row)] > bin_size_) {
      throw ValidityError("packer overfilled bin " + std::to_string(bin));
    }
  }
  arrived_.insert(v);
  emitted_.push_back(item);
  return bin;
}

VbpInstance PackerBackedColorer::emitted_instance() const {
  const VectorMode mode = variant_ == ReductionVariant::kBinary
                              ? VectorMode::kBinary
                              : VectorMode::kUnit;
  return VbpInstance(mode, static_cast<int>(dimension_), bin_size_, emitted_);
}

AdversaryKind parse_adversary(const std::string& name) {
  if (name == "killer") return AdversaryKind::kKiller;
  if (name == "hypertree") return AdversaryKind::kHypertree;
  throw std::invalid_argument("unknown adversary: " + name);
}

PackerKind parse_packer(const std::string& name) {
  if (name == "firstfit") return PackerKind::kFirstFit;
  throw std::invalid_argument("unknown packer: " + name);
}

}  // namespace colorpack
