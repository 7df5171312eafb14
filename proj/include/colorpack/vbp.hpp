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

#ifndef COLORPACK_VBP_HPP_
#define COLORPACK_VBP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "colorpack/rational.hpp"

namespace colorpack {

// Binary instances live in {0,1}^d, unit instances in [0,1]^d with exact
// rational entries.
enum class VectorMode { kBinary, kUnit };

std::string to_string(VectorMode mode);

class ItemVector {
 public:
  ItemVector(std::vector<Rational> entries, VectorMode mode);

  static ItemVector binary(const std::vector<int>& bits);

  int dimension() const { return static_cast<int>(entries_.size()); }
  VectorMode mode() const { return mode_; }
  const Rational& operator[](int i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool operator==(const ItemVector& o) const = default;

 private:
  std::vector<Rational> entries_;
  VectorMode mode_;
};

// An ordered arrival sequence of items sharing one dimension, plus the bin
// size. Binary mode takes an integer B >= 1; unit mode takes a rational
// B >= 1 (the FirstFit upper bound of the unit case only speaks for B > 1,
// but unit instances emitted by the k=2 reduction legitimately carry B = 1).
class VbpInstance {
 public:
  VbpInstance(VectorMode mode, int dimension, Rational bin_size,
              std::vector<ItemVector> items);

  static VbpInstance binary(int dimension, long long bin_size,
                            const std::vector<std::vector<int>>& items);

  VectorMode mode() const { return mode_; }
  int dimension() const { return dimension_; }
  const Rational& bin_size() const { return bin_size_; }
  const std::vector<ItemVector>& items() const { return items_; }
  int n() const { return static_cast<int>(items_.size()); }

  bool operator==(const VbpInstance& o) const = default;

 private:
  VectorMode mode_;
  int dimension_;
  Rational bin_size_;
  std::vector<ItemVector> items_;
};

// Bins are numbered 1,2,... in opening order and loads are coordinatewise
// sums of their items.
struct PackingAssignment {
  std::vector<int> bin_of;  // bin_of[i] is the 1-based bin of item i.
  std::vector<std::vector<Rational>> loads;

  int bin_count() const { return static_cast<int>(loads.size()); }
};

// Online packers choose an irrevocable bin for each arriving item. Sessions
// are single-threaded; one run per instance.
class OnlinePacker {
 public:
  virtual ~OnlinePacker() = default;
  // Returns the 1-based bin index for the item. Implementations must keep
  // every bin's load <= B coordinatewise and may only open bin j+1 when bins
  // 1..j are all nonempty.
  virtual int place(const ItemVector& item) = 0;
  virtual int bin_count() const = 0;
};

class FirstFitPacker final : public OnlinePacker {
 public:
  FirstFitPacker(int dimension, Rational bin_size);

  int place(const ItemVector& item) override;
  int bin_count() const override { return static_cast<int>(loads_.size()); }
  const std::vector<std::vector<Rational>>& loads() const { return loads_; }

 private:
  int dimension_;
  Rational bin_size_;
  std::vector<std::vector<Rational>> loads_;
};

// Places each item, in arrival order, in the lowest-index bin that still fits
// it, opening a new bin when none does.
PackingAssignment first_fit_pack(const VbpInstance& instance);

// True iff the assignment's bins are contiguous from 1 and every load is
// within the bin size in every coordinate. Throws std::invalid_argument when
// the assignment does not cover exactly the instance's items.
bool verify_packing(const VbpInstance& instance,
                    const PackingAssignment& assignment);

inline constexpr int kDefaultOptItemCap = 14;

// Exact minimum bin count by complete search over assignments: items in
// arrival order, bins in index order, no gaps (an item may open bin j+1 only
// when bins 1..j are nonempty). Throws CapacityError above the item cap.
int exact_opt_bins(const VbpInstance& instance,
                   int item_cap = kDefaultOptItemCap);

// p(I): the maximum number of 1-entries in a coordinate row. Binary mode
// only; throws UnsupportedModeError otherwise.
int max_row_ones(const VbpInstance& instance);

struct FfBinBound {
  double value;           // (sqrt(8dp^2 - 8dp + (B-2)^2) + 3B - 2) / (2B)
  long long floor_bound;  // exact floor; the asserted FirstFit bin cap
};

// Closed-form FirstFit bin cap for binary instances with row maximum p >= 2.
// Throws std::domain_error for p < 2 (there FirstFit = OPT = 1).
FfBinBound ff_bin_bound(long long d, long long p, long long bin_size);

// alg_bins / opt_bins as an exact rational. Throws std::domain_error when
// opt_bins == 0.
Rational competitive_ratio(long long alg_bins, long long opt_bins);

}  // namespace colorpack

#endif  // COLORPACK_VBP_HPP_
