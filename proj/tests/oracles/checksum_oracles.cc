// Copyright 2026 The Guardgate Authors
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

#include "tests/oracles/checksum_oracles.h"

#include <algorithm>
#include <numeric>
#include <vector>

namespace guardgate::oracle {
namespace {

bool Digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<int> ToInts(const std::string& s) {
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return v;
}

int CheckDigit(const std::vector<int>& d, const std::vector<int>& w) {
  const int sum = std::inner_product(w.begin(), w.end(), d.begin(), 0);
  return (sum % 11) % 10;
}

}  // namespace

bool LuhnOracle(const std::string& digits) {
  if (digits.size() < 13 || digits.size() > 19 || !Digits(digits)) return false;
  int total = 0;
  const int n = static_cast<int>(digits.size());
  for (int pos = 0; pos < n; ++pos) {
    int d = digits[n - 1 - pos] - '0';
    if (pos % 2 == 1) {
      const std::string twice = std::to_string(2 * d);
      d = 0;
      for (char c : twice) d += c - '0';
    }
    total += d;
  }
  return total % 10 == 0;
}

bool InnOracle(const std::string& digits) {
  if (!Digits(digits)) return false;
  const std::vector<int> d = ToInts(digits);
  if (d.size() == 10) {
    return CheckDigit(d, {2, 4, 10, 3, 5, 9, 4, 6, 8}) == d[9];
  }
  if (d.size() == 12) {
    return CheckDigit(d, {7, 2, 4, 10, 3, 5, 9, 4, 6, 8}) == d[10] &&
           CheckDigit(d, {3, 7, 2, 4, 10, 3, 5, 9, 4, 6, 8}) == d[11];
  }
  return false;
}

bool SnilsOracle(const std::string& digits) {
  if (digits.size() != 11 || !Digits(digits)) return false;
  int s = 0;
  for (int i = 1; i <= 9; ++i) s += (digits[i - 1] - '0') * (10 - i);
  int expected;
  if (s < 100) {
    expected = s;
  } else if (s == 100 || s == 101) {
    expected = 0;
  } else {
    expected = s % 101;
    if (expected == 100) expected = 0;
  }
  const int c = std::stoi(digits.substr(9, 2));
  return c == expected;
}

bool OgrnOracle(const std::string& digits) {
  if (digits.size() != 13 || !Digits(digits)) return false;
  const unsigned long long v = std::stoull(digits.substr(0, 12));
  return static_cast<int>(v % 11 % 10) == digits[12] - '0';
}

bool OgrnipOracle(const std::string& digits) {
  if (digits.size() != 15 || !Digits(digits)) return false;
  const unsigned long long v = std::stoull(digits.substr(0, 14));
  return static_cast<int>(v % 13 % 10) == digits[14] - '0';
}

}  // namespace guardgate::oracle
