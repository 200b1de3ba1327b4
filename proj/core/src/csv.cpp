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

#include "pcsim/csv.hpp"

#include <charconv>

namespace pcsim {

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

void CsvWriter::comment(const std::string& line) {
  os_ << "# " << line << "\r\n";
}

void CsvWriter::row(const std::vector<Field>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os_ << ',';
    const std::string& f = fields[i].text;
    const bool needs_quotes = f.find_first_of(",\"\r\n") != std::string::npos;
    if (needs_quotes) {
      os_ << '"';
      for (char c : f) {
        if (c == '"') os_ << '"';
        os_ << c;
      }
      os_ << '"';
    } else {
      os_ << f;
    }
  }
  os_ << "\r\n";
  ++rows_;
}

}  // namespace pcsim
