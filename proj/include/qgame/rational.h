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

#ifndef QGAME_RATIONAL_H_
#define QGAME_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgame {

// Exact, unbounded rational used for every classical computation. Values
// are kept reduced with a positive denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Accepts "n", "-n" or "n/d" (d != 0). Throws std::invalid_argument on
// anything else.
Rational ParseRational(std::string_view text);

// Always "num/den", e.g. "2/1", "-19/6".
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

inline Rational Abs(const Rational& value) {
  return value < 0 ? -value : value;
}

}  // namespace qgame

#endif  // QGAME_RATIONAL_H_
