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

#include "plethys/polylog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plethys/alpha.hpp"
#include "plethys/construct.hpp"
#include "plethys/errors.hpp"

namespace plethys {

EulerianPolynomial eulerian_polynomial(unsigned m) {
    std::vector<Integer> row{Integer(1)};  // A_0
    for (unsigned r = 1; r <= m; ++r) {
        std::vector<Integer> next(r, Integer(0));
        for (unsigned j = 0; j < r; ++j) {
            // <r, j> = (j+1) <r-1, j> + (r-j) <r-1, j-1>
            if (j < row.size()) {
                next[j] += Integer(j + 1) * row[j];
            }
            if (j >= 1 && j - 1 < row.size()) {
                next[j] += Integer(r - j) * row[j - 1];
            }
        }
        row = std::move(next);
    }
    return EulerianPolynomial{m, std::move(row)};
}

Series<Rational> polylog_series_closed_form(unsigned m, unsigned order) {
    const EulerianPolynomial a_m = eulerian_polynomial(m);

    // Numerator x A_m(x), truncated to the requested order.
    std::vector<Rational> num(order + 1, Rational(0));
    for (unsigned j = 0; j < a_m.coeffs.size() && j + 1 <= order; ++j) {
        num[j + 1] = Rational(a_m.coeffs[j]);
    }

    // (1-x)^-(m+1) has coefficients C(k+m, m).
    std::vector<Rational> den(order + 1, Rational(0));
    for (unsigned k = 0; k <= order; ++k) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), k + m, m);
        den[k] = Rational(binom);
    }

    return series_mul(Series<Rational>(std::move(num)), Series<Rational>(std::move(den)));
}

namespace {

// B_{2j} / (2j)! for j = 1..6.
const Rational kBernoulliOverFactorial[6] = {
    make_rational(1, 12),        make_rational(-1, 720),
    make_rational(1, 30240),     make_rational(-1, 1209600),
    make_rational(1, 47900160),  Rational(Integer(-691), Integer(1307674368000L)),
};

BigFloat round_to(const BigFloat& x, unsigned bits) {
    BigFloat out(bits);
    mpfr_set(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

}  // namespace

BigFloat zeta_value(double s, unsigned precision_bits) {
    if (!(s > 1.0)) {
        throw DomainError("zeta(s) needs s > 1: divergent or analytic continuation required");
    }
    const unsigned work = precision_bits + 64;

    // Cutoff: the first omitted correction (the B_14 term) must sit below
    // 2^-(precision_bits + 10).
    const double ln_c = std::log(7.0 / 6.0) - std::lgamma(15.0) +
                        (std::lgamma(s + 13.0) - std::lgamma(s));
    const double ln_n = (ln_c + (precision_bits + 10.0) * std::numbers::ln2) / (s + 13.0);
    const unsigned long cutoff =
        std::max(16UL, static_cast<unsigned long>(std::ceil(std::exp(ln_n))) + 1);

    const BigFloat s_big(s, work);

    BigFloat total(work);
    BigFloat term(work);
    BigFloat minus_s = -s_big;
    for (unsigned long k = 1; k < cutoff; ++k) {
        mpfr_ui_pow(term.raw(), k, minus_s.raw(), MPFR_RNDN);
        total += term;
    }

    // N^(1-s)/(s-1) + N^(-s)/2
    BigFloat one_minus_s = -(s_big - 1.0);
    BigFloat n_pow(work);
    mpfr_ui_pow(n_pow.raw(), cutoff, one_minus_s.raw(), MPFR_RNDN);
    total += n_pow / (s_big - 1.0);
    mpfr_ui_pow(n_pow.raw(), cutoff, minus_s.raw(), MPFR_RNDN);
    total += n_pow / 2.0;

    // sum_j B_2j/(2j)! . s(s+1)...(s+2j-2) . N^(-s-2j+1)
    BigFloat rising = s_big;  // j = 1: just s
    mpfr_ui_pow(n_pow.raw(), cutoff, (-(s_big + 1.0)).raw(), MPFR_RNDN);  // N^(-s-1)
    BigFloat n_inv_sq(work);
    mpfr_ui_pow_ui(n_inv_sq.raw(), cutoff, 2, MPFR_RNDN);
    n_inv_sq = BigFloat(1.0, work) / n_inv_sq;
    for (unsigned j = 1; j <= 6; ++j) {
        if (j > 1) {
            rising *= (s_big + static_cast<double>(2 * j - 3));
            rising *= (s_big + static_cast<double>(2 * j - 2));
            n_pow *= n_inv_sq;
        }
        total += BigFloat::from_rational(kBernoulliOverFactorial[j - 1], work) * rising * n_pow;
    }

    return round_to(total, precision_bits);
}

ZetaConvergenceRecord zeta_convergence(double s, const std::vector<unsigned>& n_list,
                                       unsigned precision_bits) {
    if (!std::is_sorted(n_list.begin(), n_list.end())) {
        throw InputError("degree list must be ascending");
    }
    const BigFloat zeta_s = zeta_value(s, precision_bits);
    ZetaConvergenceRecord record{s, exp(-zeta_s), {}};
    record.rows.reserve(n_list.size());

    const auto alpha = polylog_alpha(std::complex<double>(s, 0.0), precision_bits);
    for (unsigned n : n_list) {
        const auto real = build_polynomial(alpha, n);
        BigFloat value(precision_bits);
        for (unsigned j = 0; j <= n; ++j) {
            value += real.poly[j].real();
        }
        BigFloat deviation = abs(value - record.target);
        record.rows.push_back({n, std::move(value), std::move(deviation)});
    }
    return record;
}

}  // namespace plethys
