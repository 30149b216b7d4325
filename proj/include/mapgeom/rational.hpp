// Copyright 2026 The mapgeom Authors
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

#ifndef MAPGEOM_RATIONAL_HPP_
#define MAPGEOM_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mapgeom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

// Accepts "p", "-p" or "p/q" with q > 0. Throws ParseError with the given
// position on failure.
Rational parse_rational(std::string_view text, int line = 0, int column = 0);

BigInt factorial(int n);
BigInt power(int base, int exponent);

}  // namespace mapgeom

#endif  // MAPGEOM_RATIONAL_HPP_
