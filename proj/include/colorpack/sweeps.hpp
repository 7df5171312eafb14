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

#ifndef COLORPACK_SWEEPS_HPP_
#define COLORPACK_SWEEPS_HPP_

#include <cstdint>
#include <string>

#include "colorpack/hypergraph.hpp"
#include "colorpack/report.hpp"
#include "colorpack/vbp.hpp"

namespace colorpack {

// Every suite sweeps a family of independent cases (one graph, one random
// instance, one adversary run per case). The cases are data-parallel: the
// serial driver is the reference, the OpenMP driver must produce an
// identical report. Case seeds derive from (seed, index), so scheduling
// cannot change what a case computes.
enum class RunPolicy { kSerial, kParallel };

RunPolicy parse_policy(int threads);  // 1 -> serial, otherwise parallel

// Binary row sums land on k-1 (non-edges) or k (edges); unit row sums stay
// within [k-1, k-1+(n-k+1)/n]. Exhaustive over all 1024 graphs and all 1024
// 3-uniform hypergraphs on 5 vertices.
Report row_sum_suite(RunPolicy policy);

// chi(H) equals exact OPT of the incidence instance at B = k-1, binary and
// unit variants, over the same exhaustive families plus `random_cases`
// random 3-uniform hypergraphs on up to 6 vertices.
Report chi_equals_opt_suite(RunPolicy policy, std::uint64_t seed, int random_cases);

// Random binary instances (d <= 20, n <= 30, B <= 3): FirstFit stays within
// the closed-form bin bound, within sqrt(2d)+2 times OPT when the oracle
// fits, and FirstFit = OPT = 1 whenever p <= 1.
Report ff_bound_suite(RunPolicy policy, std::uint64_t seed, int cases);

// Random unit instances: ratio < sqrt(2d)*B/(B-1) + 2/OPT for B > 1, and
// additionally < 2*sqrt(2d)+2 for B >= 2.
Report unit_ratio_suite(RunPolicy policy, std::uint64_t seed, int cases);

// Every multi-family with at most `member_cap` (<= 8) nonempty members over
// a ground set of size <= 3: whenever some diverse partition exists, the
// constructive rewrite passes the starry verifier and the exhaustive starry
// search agrees one exists.
Report partition_exhaustive_suite(RunPolicy policy, int member_cap);

// Random guaranteed-diverse families (p <= 4, q <= 5), soundness only.
Report partition_random_suite(RunPolicy policy, std::uint64_t seed, int cases);

// Colorers {firstfit, largestfit, permutation} x k in {2..5} x m in
// {1..max_m}: the adversary's hypertree has exactly k^(m-1) vertices, forces
// at least m colors, stays a proper hypertree, and FirstFit alone would have
// used at most floor(1 + log_k n) colors on it.
Report adversary_matrix_suite(RunPolicy policy, int max_m);

// Random hypertrees under random arrival orders: FirstFit spends at most
// floor(1 + log_k n) colors.
Report hypertree_ff_suite(RunPolicy policy, std::uint64_t seed, int cases);

// FirstFit uses exactly n/2 colors on the killer graph while chi stays 2.
Report killer_suite(RunPolicy policy, int max_n);

// Aggregate run for the CLI: scale is "smoke" or "full".
Report run_verify(const std::string& scale, RunPolicy policy,
                  std::uint64_t seed);

// Random-instance generators shared with the unit tests.
VbpInstance random_binary_instance(std::uint64_t case_seed);
VbpInstance random_unit_instance(std::uint64_t case_seed, bool small_bin);
Hypergraph random_uniform_hypergraph(std::uint64_t case_seed, int k, int max_n);
Hypergraph random_hypertree(std::uint64_t case_seed);

}  // namespace colorpack

#endif  // COLORPACK_SWEEPS_HPP_
