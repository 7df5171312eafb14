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

// Times each verification sweep serial vs OpenMP and checks that the two
// drivers emit identical reports.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "colorpack/report.hpp"
#include "colorpack/sweeps.hpp"

using namespace colorpack;

namespace {

double run_ms(const std::function<Report(RunPolicy)>& suite, RunPolicy policy,
              Report& out) {
  const auto start = std::chrono::steady_clock::now();
  out = suite(policy);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void bench(const std::string& name,
           const std::function<Report(RunPolicy)>& suite) {
  Report serial_report, parallel_report;
  const double serial_ms = run_ms(suite, RunPolicy::kSerial, serial_report);
  const double parallel_ms =
      run_ms(suite, RunPolicy::kParallel, parallel_report);
  const bool identical = serial_report.to_csv() == parallel_report.to_csv();
  std::printf("%-24s %4zu cases  serial %8.1f ms  parallel %8.1f ms  "
              "speedup %5.2fx  %s%s\n",
              name.c_str(), serial_report.rows.size(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, identical ? "identical" : "DIVERGED",
              serial_report.all_pass() ? "" : "  (FAILURES)");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel runs fall back to serial\n");
#endif
  const std::uint64_t seed = 1;
  bench("row_sum", [](RunPolicy p) { return row_sum_suite(p); });
  bench("chi_equals_opt", [=](RunPolicy p) { return chi_equals_opt_suite(p, seed, 200); });
  bench("ff_bound", [=](RunPolicy p) { return ff_bound_suite(p, seed, 1000); });
  bench("unit_ratio", [=](RunPolicy p) { return unit_ratio_suite(p, seed, 300); });
  bench("partition_exhaustive",
        [](RunPolicy p) { return partition_exhaustive_suite(p, 8); });
  bench("partition_random",
        [=](RunPolicy p) { return partition_random_suite(p, seed, 500); });
  bench("adversary_matrix",
        [](RunPolicy p) { return adversary_matrix_suite(p, 5); });
  bench("hypertree_ff",
        [=](RunPolicy p) { return hypertree_ff_suite(p, seed, 100); });
  bench("killer", [](RunPolicy p) { return killer_suite(p, 20); });
  return 0;
}
