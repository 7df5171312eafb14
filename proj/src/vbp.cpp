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

#include "colorpack/vbp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "colorpack/errors.hpp"

namespace colorpack {

std::string to_string(VectorMode mode) {
  return mode == VectorMode::kBinary ? "binary" : "unit";
}

ItemVector::ItemVector(std::vector<Rational> entries, VectorMode mode)
    : entries_(std::move(entries)), mode_(mode) {
  if (entries_.empty()) {
    throw std::invalid_argument("item vector needs dimension >= 1");
  }
  for (const Rational& e : entries_) {
    if (mode_ == VectorMode::kBinary) {
      if (e != Rational(0) && e != Rational(1)) {
        throw std::invalid_argument("binary item entry outside {0,1}");
      }
    } else if (e < Rational(0) || e > Rational(1)) {
      throw std::invalid_argument("unit item entry outside [0,1]");
    }
  }
}

ItemVector ItemVector::binary(const std::vector<int>& bits) {
  std::vector<Rational> entries;
  entries.reserve(bits.size());
  for (int b : bits) entries.emplace_back(b);
  return ItemVector(std::move(entries), VectorMode::kBinary);
}

VbpInstance::VbpInstance(VectorMode mode, int dimension, Rational bin_size,
                         std::vector<ItemVector> items)
    : mode_(mode),
      dimension_(dimension),
      bin_size_(bin_size),
      items_(std::move(items)) {
  if (dimension_ < 1) throw std::invalid_argument("dimension must be >= 1");
  if (mode_ == VectorMode::kBinary) {
    if (!bin_size_.is_integer() || bin_size_.num() < 1) {
      throw std::invalid_argument("binary mode needs integer bin size >= 1");
    }
  } else if (bin_size_ < Rational(1)) {
    throw std::invalid_argument("unit mode needs bin size >= 1");
  }
  for (const ItemVector& item : items_) {
    if (item.dimension() != dimension_) {
      throw std::invalid_argument("item dimension mismatch");
    }
    if (item.mode() != mode_) {
      throw std::invalid_argument("item mode mismatch");
    }
  }
}

VbpInstance VbpInstance::binary(int dimension, long long bin_size,
                                const std::vector<std::vector<int>>& items) {
  std::vector<ItemVector> vecs;
  vecs.reserve(items.size());
  for (const auto& bits : items) vecs.push_back(ItemVector::binary(bits));
  return VbpInstance(VectorMode::kBinary, dimension, Rational(bin_size),
                     std::move(vecs));
}

FirstFitPacker::FirstFitPacker(int dimension, Rational bin_size)
    : dimension_(dimension), bin_size_(bin_size) {
  if (dimension_ < 1) throw std::invalid_argument("dimension must be >= 1");
  if (bin_size_ < Rational(1)) {
    throw std::invalid_argument("bin size must be >= 1");
  }
}

namespace {

bool fits(const std::vector<Rational>& load, const ItemVector& item,
          const Rational& bin_size) {
  for (int r = 0; r < item.dimension(); ++r) {
    if (load[r] + item[r] > bin_size) return false;
  }
  return true;
}

void add_to(std::vector<Rational>& load, const ItemVector& item) {
  for (int r = 0; r < item.dimension(); ++r) load[r] += item[r];
}

}  // namespace

int FirstFitPacker::place(const ItemVector& item) {
  if (item.dimension() != dimension_) {
    throw std::invalid_argument("item dimension mismatch");
  }
  for (std::size_t j = 0; j < loads_.size(); ++j) {
    if (fits(loads_[j], item, bin_size_)) {
      add_to(loads_[j], item);
      return static_cast<int>(j) + 1;
    }
  }
  loads_.emplace_back(dimension_, Rational(0));
  add_to(loads_.back(), item);
  return static_cast<int>(loads_.size());
}

PackingAssignment first_fit_pack(const VbpInstance& instance) {
  FirstFitPacker packer(instance.dimension(), instance.bin_size());
  PackingAssignment out;
  out.bin_of.reserve(instance.items().size());
  for (const ItemVector& item : instance.items()) {
    out.bin_of.push_back(packer.place(item));
  }
  out.loads = packer.loads();
  return out;
}

bool verify_packing(const VbpInstance& instance,
                    const PackingAssignment& assignment) {
  if (assignment.bin_of.size() != instance.items().size()) {
    throw std::invalid_argument(
        "assignment does not cover exactly the instance's items");
  }
  const int bins = assignment.bin_count();
  std::vector<std::vector<Rational>> loads(
      bins, std::vector<Rational>(instance.dimension(), Rational(0)));
  std::vector<bool> seen(bins, false);
  for (std::size_t i = 0; i < assignment.bin_of.size(); ++i) {
    const int b = assignment.bin_of[i];
    if (b < 1 || b > bins) return false;
    seen[b - 1] = true;
    add_to(loads[b - 1], instance.items()[i]);
  }
  for (int b = 0; b < bins; ++b) {
    if (!seen[b]) return false;  // gap in bin numbering
    for (int r = 0; r < instance.dimension(); ++r) {
      if (loads[b][r] > instance.bin_size()) return false;
      if (loads[b][r] != assignment.loads[b][r]) return false;
    }
  }
  return true;
}

namespace {

struct OptSearch {
  const VbpInstance* instance;
  int n;
  int best;
  std::vector<std::vector<Rational>> loads;

  void dfs(int i, int bins_used) {
    if (bins_used >= best) return;
    if (i == n) {
      best = bins_used;
      return;
    }
    const ItemVector& item = instance->items()[i];
    for (int j = 0; j < bins_used; ++j) {
      if (fits(loads[j], item, instance->bin_size())) {
        add_to(loads[j], item);
        dfs(i + 1, bins_used);
        for (int r = 0; r < item.dimension(); ++r) loads[j][r] -= item[r];
      }
    }
    if (bins_used + 1 < best) {
      loads[bins_used].assign(instance->dimension(), Rational(0));
      add_to(loads[bins_used], item);
      dfs(i + 1, bins_used + 1);
    }
  }
};

// Any single bin carries at most B per coordinate, so OPT >= ceil(row/B).
int row_lower_bound(const VbpInstance& instance) {
  int lb = instance.n() > 0 ? 1 : 0;
  for (int r = 0; r < instance.dimension(); ++r) {
    Rational row(0);
    for (const ItemVector& item : instance.items()) row += item[r];
    int t = 0;
    while (Rational(t) * instance.bin_size() < row) ++t;
    lb = std::max(lb, t);
  }
  return lb;
}

}  // namespace

int exact_opt_bins(const VbpInstance& instance, int item_cap) {
  const int n = instance.n();
  if (n == 0) return 0;
  if (n > item_cap) {
    throw CapacityError("exact_opt_bins: " + std::to_string(n) +
                        " items exceeds cap " + std::to_string(item_cap));
  }
  const int upper = first_fit_pack(instance).bin_count();
  const int lower = row_lower_bound(instance);
  if (upper == lower) return upper;

  OptSearch search;
  search.instance = &instance;
  search.n = n;
  search.best = upper;  // FirstFit's packing is a valid incumbent
  search.loads.assign(n, std::vector<Rational>(instance.dimension(), Rational(0)));
  search.dfs(0, 0);
  return search.best;
}

int max_row_ones(const VbpInstance& instance) {
  if (instance.mode() != VectorMode::kBinary) {
    throw UnsupportedModeError("max_row_ones is defined for binary instances");
  }
  int p = 0;
  for (int r = 0; r < instance.dimension(); ++r) {
    int count = 0;
    for (const ItemVector& item : instance.items()) {
      if (item[r] == Rational(1)) ++count;
    }
    p = std::max(p, count);
  }
  return p;
}

FfBinBound ff_bin_bound(long long d, long long p, long long bin_size) {
  if (d < 1 || bin_size < 1) {
    throw std::domain_error("ff_bin_bound needs d >= 1 and B >= 1");
  }
  if (p < 2) {
    throw std::domain_error(
        "ff_bin_bound needs p >= 2; for p <= 1 FirstFit = OPT = 1");
  }
  using wide = __int128;
  const wide disc = wide(8) * d * p * p - wide(8) * d * p +
                    wide(bin_size - 2) * (bin_size - 2);
  const double value =
      (std::sqrt(static_cast<double>(disc)) + 3.0 * bin_size - 2.0) /
      (2.0 * bin_size);

  // floor(value) without floating error: the largest N with
  // 2*B*N - (3B - 2) <= sqrt(disc), compared by squaring.
  const auto within = [&](long long cand) {
    const wide t = wide(2) * bin_size * cand - (wide(3) * bin_size - 2);
    if (t <= 0) return true;
    return t * t <= disc;
  };
  long long floor_bound = static_cast<long long>(value);
  while (!within(floor_bound)) --floor_bound;
  while (within(floor_bound + 1)) ++floor_bound;
  return FfBinBound{value, floor_bound};
}

Rational competitive_ratio(long long alg_bins, long long opt_bins) {
  if (opt_bins < 1) {
    throw std::domain_error("competitive ratio needs opt >= 1");
  }
  return Rational(alg_bins, opt_bins);
}

}  // namespace colorpack
