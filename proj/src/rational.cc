// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgame/rational.h"

#include <charconv>
#include <stdexcept>
#include <string>

namespace qgame {
namespace {

std::int64_t ParseInteger(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed rational \"" + std::string(whole) +
                                "\"");
  }
  return value;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  return text;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view trimmed = Trim(text);
  const auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(trimmed, text));
  }
  const std::int64_t num = ParseInteger(Trim(trimmed.substr(0, slash)), text);
  const std::int64_t den = ParseInteger(Trim(trimmed.substr(slash + 1)), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) +
                                "\"");
  }
  return Rational(num, den);
}

std::string FormatRational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

}  // namespace qgame
