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

#ifndef COLORPACK_REPORT_HPP_
#define COLORPACK_REPORT_HPP_

#include <string>
#include <vector>

namespace colorpack {

struct ReportRow {
  std::string id;
  std::string params;
  std::string measured;
  std::string bound;
  bool pass = false;
};

// Rows are kept sorted by id so reports do not depend on evaluation order.
struct Report {
  std::vector<ReportRow> rows;

  void add(ReportRow row);
  void merge(const Report& other);
  void sort_rows();
  bool all_pass() const;
  int failures() const;
  std::string to_csv() const;  // header + one comma-separated row each
  std::string summary() const;
};

}  // namespace colorpack

#endif  // COLORPACK_REPORT_HPP_
