/*
   Copyright 2026 The plethys authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PLETHYS_RATIONAL_HPP
#define PLETHYS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace plethys {

using Integer = mpz_class;

// GMP keeps mpq_class canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Canonical rational num/den. den must be nonzero.
Rational make_rational(long num, long den);

/// Parses "num/den" or a plain integer string.
Rational rational_from_string(const std::string& text);

/// Canonical text form: "num/den", or just "num" when den == 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

Integer factorial(unsigned long n);

/// Round-to-nearest conversion (mpq_get_d truncates, which loses an ulp).
double to_double_nearest(const Rational& q);

}  // namespace plethys

#endif
