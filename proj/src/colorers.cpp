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

#include "colorpack/colorers.hpp"

#include <numeric>
#include <stdexcept>

#include "colorpack/rng.hpp"

namespace colorpack {

namespace {

// True when giving v color c would leave some revealed edge monochromatic.
bool completes_mono(const std::map<int, int>& color_of, int v, int c,
                    const std::vector<Edge>& revealed) {
  for (const Edge& e : revealed) {
    bool all_same = true;
    for (int u : e) {
      if (u == v) continue;
      const auto it = color_of.find(u);
      if (it == color_of.end() || it->second != c) {
        all_same = false;
        break;
      }
    }
    if (all_same) return true;
  }
  return false;
}

}  // namespace

int FirstFitColorer::on_vertex(int v, const std::vector<Edge>& revealed) {
  int c = 1;
  while (completes_mono(color_of_, v, c, revealed)) ++c;
  color_of_[v] = c;
  return c;
}

int LargestFitColorer::on_vertex(int v, const std::vector<Edge>& revealed) {
  int chosen = max_used_ + 1;
  for (int c = max_used_; c >= 1; --c) {
    if (!completes_mono(color_of_, v, c, revealed)) {
      chosen = c;
      break;
    }
  }
  if (chosen > max_used_) max_used_ = chosen;
  color_of_[v] = chosen;
  return chosen;
}

FixedPermutationColorer::FixedPermutationColorer(std::uint64_t seed)
    : seed_(seed) {
  extend();
}

void FixedPermutationColorer::extend() {
  // Append a shuffled block of the next 64 colors; each block's shuffle is a
  // pure function of the seed and block index.
  const int lo = blocks_taken_ * 64 + 1;
  std::vector<int> block(64);
  std::iota(block.begin(), block.end(), lo);
  SplitMix64 rng(derive_seed(seed_, static_cast<std::uint64_t>(blocks_taken_)));
  rng.shuffle(block);
  order_.insert(order_.end(), block.begin(), block.end());
  ++blocks_taken_;
}

int FixedPermutationColorer::on_vertex(int v,
                                       const std::vector<Edge>& revealed) {
  for (std::size_t i = 0;; ++i) {
    if (i == order_.size()) extend();
    const int c = order_[i];
    if (!completes_mono(color_of_, v, c, revealed)) {
      color_of_[v] = c;
      return c;
    }
  }
}

std::unique_ptr<OnlineColorer> make_colorer(const std::string& name,
                                            std::uint64_t seed) {
  if (name == "firstfit") return std::make_unique<FirstFitColorer>();
  if (name == "largestfit") return std::make_unique<LargestFitColorer>();
  if (name == "permutation") {
    return std::make_unique<FixedPermutationColorer>(seed);
  }
  throw std::invalid_argument("unknown colorer: " + name);
}

const std::vector<std::string>& known_colorer_names() {
  static const std::vector<std::string> names = {"firstfit", "largestfit",
                                                 "permutation"};
  return names;
}

}  // namespace colorpack
