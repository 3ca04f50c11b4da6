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

#include "guardgate/rulepii/validators.h"

#include <array>
#include <cmath>
#include <map>

namespace guardgate::rulepii {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

int Digit(char c) { return c - '0'; }

template <size_t N>
int WeightedSum(std::string_view digits, const std::array<int, N>& weights) {
  int sum = 0;
  for (size_t i = 0; i < N; ++i) sum += weights[i] * Digit(digits[i]);
  return sum;
}

// Value of a decimal digit string modulo `m`, without overflow.
int DecimalMod(std::string_view digits, int m) {
  int r = 0;
  for (char c : digits) r = (r * 10 + Digit(c)) % m;
  return r;
}

constexpr std::array<int, 9> kInn10Weights = {2, 4, 10, 3, 5, 9, 4, 6, 8};
constexpr std::array<int, 10> kInn11Weights = {7, 2, 4, 10, 3, 5, 9, 4, 6, 8};
constexpr std::array<int, 11> kInn12Weights = {3, 7, 2, 4, 10, 3,
                                               5, 9, 4, 6, 8};

}  // namespace

int LuhnCheckDigit(std::string_view body) {
  // Digits of the body are doubled starting from the rightmost one, because
  // the check digit will occupy the position to its right.
  int sum = 0;
  bool twice = true;
  for (auto it = body.rbegin(); it != body.rend(); ++it) {
    int d = Digit(*it);
    if (twice) {
      d *= 2;
      if (d > 9) d -= 9;
    }
    sum += d;
    twice = !twice;
  }
  return (10 - sum % 10) % 10;
}

bool ValidateCardLuhn(std::string_view digits) {
  if (digits.size() < 13 || digits.size() > 19 || !AllDigits(digits)) {
    return false;
  }
  return LuhnCheckDigit(digits.substr(0, digits.size() - 1)) ==
         Digit(digits.back());
}

int Inn10CheckDigit(std::string_view first9) {
  return WeightedSum(first9, kInn10Weights) % 11 % 10;
}

int Inn12CheckDigits(std::string_view first10) {
  const int d11 = WeightedSum(first10, kInn11Weights) % 11 % 10;
  std::string eleven(first10);
  eleven.push_back(static_cast<char>('0' + d11));
  const int d12 = WeightedSum(eleven, kInn12Weights) % 11 % 10;
  return d11 * 10 + d12;
}

bool ValidateInn(std::string_view digits) {
  if (!AllDigits(digits)) return false;
  if (digits.size() == 10) {
    return Inn10CheckDigit(digits.substr(0, 9)) == Digit(digits[9]);
  }
  if (digits.size() == 12) {
    return Inn12CheckDigits(digits.substr(0, 10)) ==
           Digit(digits[10]) * 10 + Digit(digits[11]);
  }
  return false;
}

int SnilsChecksum(std::string_view first9) {
  int sum = 0;
  for (int i = 0; i < 9; ++i) sum += Digit(first9[i]) * (9 - i);
  if (sum < 100) return sum;
  if (sum == 100 || sum == 101) return 0;
  sum %= 101;
  return sum == 100 ? 0 : sum;
}

bool ValidateSnils(std::string_view digits) {
  if (digits.size() != 11 || !AllDigits(digits)) return false;
  return SnilsChecksum(digits.substr(0, 9)) ==
         Digit(digits[9]) * 10 + Digit(digits[10]);
}

int OgrnCheckDigit(std::string_view first12) {
  return DecimalMod(first12, 11) % 10;
}

int OgrnipCheckDigit(std::string_view first14) {
  return DecimalMod(first14, 13) % 10;
}

bool ValidateOgrn(std::string_view digits) {
  if (digits.size() != 13 || !AllDigits(digits)) return false;
  return OgrnCheckDigit(digits.substr(0, 12)) == Digit(digits[12]);
}

bool ValidateOgrnip(std::string_view digits) {
  if (digits.size() != 15 || !AllDigits(digits)) return false;
  return OgrnipCheckDigit(digits.substr(0, 14)) == Digit(digits[14]);
}

bool ValidateKppFormat(std::string_view text) {
  if (text.size() != 9) return false;
  for (size_t i = 0; i < 9; ++i) {
    const char c = text[i];
    const bool digit = c >= '0' && c <= '9';
    if (i == 4 || i == 5) {
      if (!digit && !(c >= 'A' && c <= 'Z')) return false;
    } else if (!digit) {
      return false;
    }
  }
  return true;
}

std::optional<std::string> NormalizePhone(std::string_view raw) {
  std::string compact;
  for (char c : raw) {
    if (c == ' ' || c == '-' || c == '(' || c == ')' || c == '.') continue;
    compact.push_back(c);
  }
  std::string_view rest;
  if (compact.starts_with("+7")) {
    rest = std::string_view(compact).substr(2);
  } else if (compact.starts_with("8")) {
    rest = std::string_view(compact).substr(1);
  } else {
    return std::nullopt;
  }
  if (rest.size() != 10 || !AllDigits(rest)) return std::nullopt;
  return "+7" + std::string(rest);
}

double ShannonEntropy(std::u32string_view text) {
  if (text.empty()) return 0.0;
  std::map<char32_t, int> counts;
  for (char32_t c : text) ++counts[c];
  const double n = static_cast<double>(text.size());
  double h = 0.0;
  for (const auto& [c, k] : counts) {
    const double p = k / n;
    h -= p * std::log2(p);
  }
  return h;
}

std::string DigitsOnly(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c >= '0' && c <= '9') out.push_back(c);
  }
  return out;
}

}  // namespace guardgate::rulepii
