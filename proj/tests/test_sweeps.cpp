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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "colorpack/sweeps.hpp"
#include "doctest.h"

using namespace colorpack;

// The OpenMP drivers must reproduce the serial reference byte for byte;
// the serial run is the ground truth the parallel kernels are checked
// against.

TEST_CASE("row-sum suite passes and parallel matches serial") {
  const Report serial = row_sum_suite(RunPolicy::kSerial);
  CHECK(serial.all_pass());
  CHECK(serial.rows.size() == 4096);  // two checks per hypergraph
  const Report parallel = row_sum_suite(RunPolicy::kParallel);
  CHECK(parallel.to_csv() == serial.to_csv());
}

TEST_CASE("chi-equals-opt suite passes and parallel matches serial") {
  const Report serial = chi_equals_opt_suite(RunPolicy::kSerial, 99, 40);
  CHECK(serial.all_pass());
  CHECK(serial.rows.size() == 1064);
  const Report parallel = chi_equals_opt_suite(RunPolicy::kParallel, 99, 40);
  CHECK(parallel.to_csv() == serial.to_csv());
}

TEST_CASE("ff-bound sweep passes and is seed-stable") {
  const Report serial = ff_bound_suite(RunPolicy::kSerial, 7, 150);
  CHECK(serial.all_pass());
  const Report again = ff_bound_suite(RunPolicy::kParallel, 7, 150);
  CHECK(again.to_csv() == serial.to_csv());
  // A different seed is a different report.
  const Report other = ff_bound_suite(RunPolicy::kSerial, 8, 150);
  CHECK(other.to_csv() != serial.to_csv());
}

TEST_CASE("unit ratio sweep passes") {
  const Report report = unit_ratio_suite(RunPolicy::kParallel, 5, 80);
  CHECK(report.all_pass());
  CHECK(report.to_csv() == unit_ratio_suite(RunPolicy::kSerial, 5, 80).to_csv());
}

TEST_CASE("exhaustive partition sweep passes at reduced width") {
  const Report serial = partition_exhaustive_suite(RunPolicy::kSerial, 5);
  CHECK(serial.all_pass());
  CHECK(partition_exhaustive_suite(RunPolicy::kParallel, 5).to_csv() ==
        serial.to_csv());
}

TEST_CASE("random partition sweep passes") {
  const Report report = partition_random_suite(RunPolicy::kParallel, 13, 120);
  CHECK(report.all_pass());
}

TEST_CASE("adversary matrix sweep passes") {
  const Report serial = adversary_matrix_suite(RunPolicy::kSerial, 4);
  CHECK(serial.all_pass());
  CHECK(serial.rows.size() == 3 * 4 * 4);
  CHECK(adversary_matrix_suite(RunPolicy::kParallel, 4).to_csv() ==
        serial.to_csv());
}

TEST_CASE("hypertree first-fit sweep passes") {
  const Report report = hypertree_ff_suite(RunPolicy::kParallel, 3, 60);
  CHECK(report.all_pass());
}

TEST_CASE("killer sweep passes") {
  const Report report = killer_suite(RunPolicy::kParallel, 16);
  CHECK(report.all_pass());
}

TEST_CASE("verify aggregates the suites and stays deterministic") {
  const Report smoke = run_verify("smoke", RunPolicy::kParallel, 42);
  CHECK(smoke.all_pass());
  const Report again = run_verify("smoke", RunPolicy::kParallel, 42);
  CHECK(again.to_csv() == smoke.to_csv());
  CHECK_THROWS_AS(run_verify("medium", RunPolicy::kSerial, 42),
                  std::invalid_argument);
}

TEST_CASE("policy parsing maps one thread to the serial reference") {
  CHECK(parse_policy(1) == RunPolicy::kSerial);
  CHECK(parse_policy(0) == RunPolicy::kParallel);
  CHECK(parse_policy(8) == RunPolicy::kParallel);
}
