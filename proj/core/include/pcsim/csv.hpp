// Copyright 2026 The pcsim Authors
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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace pcsim {

// Shortest decimal string that round-trips the exact double value.
std::string format_double(double value);

// RFC 4180 output: comma separated, CRLF line endings, quoting only when a
// field needs it. Leading '#' comment lines are emitted only where a figure
// documents omitted columns.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  struct Field {
    std::string text;
    Field(const char* s) : text(s) {}
    Field(std::string s) : text(std::move(s)) {}
    Field(double v) : text(format_double(v)) {}
    Field(int v) : text(std::to_string(v)) {}
    Field(long v) : text(std::to_string(v)) {}
    Field(std::uint64_t v) : text(std::to_string(v)) {}
  };

  void comment(const std::string& line);
  void row(const std::vector<Field>& fields);
  long rows() const { return rows_; }  // data rows, header included

 private:
  std::ostream& os_;
  long rows_ = 0;
};

}  // namespace pcsim
