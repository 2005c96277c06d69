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

#ifndef PLETHYS_POLYLOG_HPP
#define PLETHYS_POLYLOG_HPP

#include <vector>

#include "plethys/bigfloat.hpp"
#include "plethys/rational.hpp"
#include "plethys/series.hpp"

namespace plethys {

/// A_m(x): coeffs[j] multiplies x^j. Coefficients sum to m! and are
/// palindromic for m >= 1.
struct EulerianPolynomial {
    unsigned m = 0;
    std::vector<Integer> coeffs;
};

EulerianPolynomial eulerian_polynomial(unsigned m);

/// Expansion of x A_m(x) / (1-x)^(m+1); the coefficient of x^k is k^m.
Series<Rational> polylog_series_closed_form(unsigned m, unsigned order);

/// zeta(s) for real s > 1: Dirichlet partial sum plus Euler-Maclaurin tail
/// correction through B_12, with the cutoff chosen so the total error stays
/// below 2^-(precision_bits + 8); the result is returned rounded to
/// precision_bits, for an overall bound well under 2^-(precision_bits - 8).
BigFloat zeta_value(double s, unsigned precision_bits);

struct ZetaConvergenceRecord {
    struct Row {
        unsigned n;
        BigFloat value;      // P_n(1)
        BigFloat deviation;  // |P_n(1) - exp(-zeta(s))|
    };

    double s;
    BigFloat target;  // exp(-zeta(s))
    std::vector<Row> rows;
};

/// Evaluates P_n(1) by coefficient summation at the requested precision for
/// each n (ascending) and records the deviation from exp(-zeta(s)).
ZetaConvergenceRecord zeta_convergence(double s, const std::vector<unsigned>& n_list,
                                       unsigned precision_bits);

}  // namespace plethys

#endif
