// Copyright 2026 The jbtoy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace jbtoy_cli {

std::string format_double(double v) {
  if (v == 0.0) return std::signbit(v) ? "-0" : "0";
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                               std::chars_format::general, 17);
  if (r.ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), r.ptr);
}

namespace {

// RFC 4180 quoting, only where needed.
void write_cell(std::ostream& out, const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) {
    out << cell;
    return;
  }
  out << '"';
  for (char c : cell) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      write_cell(out, cells[i]);
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

}  // namespace jbtoy_cli
