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

#include <compare>
#include <string>
#include <string_view>

namespace hierdemand {

// Calendar month as a count of months since year 0 (January of year 0 == 0).
class Month {
 public:
  constexpr Month() = default;
  constexpr explicit Month(int index) : index_(index) {}
  static constexpr Month from_year_month(int year, int month) { return Month(year * 12 + month - 1); }

  // Parses "YYYY-MM"; throws DataError on anything else.
  static Month parse(std::string_view text);

  constexpr int index() const { return index_; }
  constexpr int year() const { return index_ >= 0 ? index_ / 12 : (index_ - 11) / 12; }
  // 1..12
  constexpr int month() const { return index_ - year() * 12 + 1; }
  // 1..4
  constexpr int quarter() const { return (month() - 1) / 3 + 1; }
  // 1..3
  constexpr int month_of_quarter() const { return (month() - 1) % 3 + 1; }

  std::string str() const;

  constexpr Month operator+(int months) const { return Month(index_ + months); }
  constexpr Month operator-(int months) const { return Month(index_ - months); }
  constexpr int operator-(Month other) const { return index_ - other.index_; }
  constexpr auto operator<=>(const Month&) const = default;

 private:
  int index_ = 0;
};

}  // namespace hierdemand
