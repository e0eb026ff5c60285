// Copyright 2026 The Arena Authors
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

#ifndef ARENA_RATIONAL_HPP_
#define ARENA_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace arena {

using Rational = mpq_class;
using Integer = mpz_class;

// Always "p/q", including integers ("3/1"), with q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& value);

// Accepts "p/q" or a plain integer "p"; the result is canonicalized.
// Throws ValidationError on anything else (including q == 0).
Rational parse_rational(std::string_view text);

// n! for small n, exact.
const Integer& factorial(unsigned n);

// Smallest integer >= value.
Integer ceil(const Rational& value);

}  // namespace arena

#endif  // ARENA_RATIONAL_HPP_
