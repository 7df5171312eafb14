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

#include "colorpack/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorpack {

namespace {

void check_field(const std::string& field) {
  if (field.find(',') != std::string::npos ||
      field.find('\n') != std::string::npos) {
    throw std::invalid_argument("report field may not contain ',' or newline");
  }
}

}  // namespace

void Report::add(ReportRow row) {
  check_field(row.id);
  check_field(row.params);
  check_field(row.measured);
  check_field(row.bound);
  rows.push_back(std::move(row));
}

void Report::merge(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

void Report::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return a.id < b.id;
                   });
}

bool Report::all_pass() const { return failures() == 0; }

int Report::failures() const {
  int count = 0;
  for (const ReportRow& row : rows) {
    if (!row.pass) ++count;
  }
  return count;
}

std::string Report::to_csv() const {
  std::string out = "id,params,measured,bound,pass\n";
  for (const ReportRow& row : rows) {
    out += row.id + "," + row.params + "," + row.measured + "," + row.bound +
           "," + (row.pass ? "pass" : "FAIL") + "\n";
  }
  return out;
}

std::string Report::summary() const {
  return std::to_string(rows.size()) + " checks, " +
         std::to_string(failures()) + " failures";
}

}  // namespace colorpack
