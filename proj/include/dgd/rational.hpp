// Copyright 2026 The dgdensity Authors
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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dgd {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/4" or "+2" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical decimal form, "p/q" when the denominator is not 1.
std::string to_string(const Rational& value);

/// C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

Integer factorial(unsigned long n);

}  // namespace dgd
