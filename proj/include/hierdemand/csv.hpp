// Copyright 2026 The hierdemand Authors
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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hierdemand::csv {

// Plain comma-separated table. Quoting is not supported: fields never contain
// commas or newlines in the formats this project reads and writes.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;
  // Index of a header column; throws DataError naming the file context.
  std::size_t require_column(std::string_view name) const;
};

Table read_file(const std::string& path);
Table parse(std::istream& in, const std::string& context);

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

// Strict parse of a full field; throws DataError mentioning `context`.
double parse_double(std::string_view field, std::string_view context);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace hierdemand::csv
