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

#ifndef COLORPACK_COLORERS_HPP_
#define COLORPACK_COLORERS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "colorpack/hypergraph.hpp"

namespace colorpack {

// Smallest safe color.
class FirstFitColorer final : public OnlineColorer {
 public:
  int on_vertex(int v, const std::vector<Edge>& revealed) override;

 private:
  std::map<int, int> color_of_;
};

// Largest already-used safe color; opens a new color only when every used
// one is unsafe.
class LargestFitColorer final : public OnlineColorer {
 public:
  int on_vertex(int v, const std::vector<Edge>& revealed) override;

 private:
  std::map<int, int> color_of_;
  int max_used_ = 0;
};

// First safe color along a fixed pseudo-random permutation of the positive
// integers. Deterministic for a given seed.
class FixedPermutationColorer final : public OnlineColorer {
 public:
  explicit FixedPermutationColorer(std::uint64_t seed = 7);

  int on_vertex(int v, const std::vector<Edge>& revealed) override;

 private:
  void extend();

  std::uint64_t seed_;
  int blocks_taken_ = 0;
  std::vector<int> order_;
  std::map<int, int> color_of_;
};

// Factory for the CLI and the test matrix. Known names: "firstfit",
// "largestfit", "permutation". Throws std::invalid_argument otherwise.
std::unique_ptr<OnlineColorer> make_colorer(const std::string& name,
                                            std::uint64_t seed = 7);

const std::vector<std::string>& known_colorer_names();

}  // namespace colorpack

#endif  // COLORPACK_COLORERS_HPP_
