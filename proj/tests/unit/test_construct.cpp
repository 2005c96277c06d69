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

#include <doctest.h>
#include <plethys/construct.hpp>
#include <plethys/verify.hpp>

#include <random>

#include "test_support.hpp"

using namespace plethys;
using plethys::testing::random_rational;
using plethys::testing::rvector;

TEST_SUITE_BEGIN("construct");

TEST_CASE("build_polynomial reproduces the pinned families") {
    // constant alpha = 1 collapses to 1 - x
    const auto ones = build_polynomial(AlphaSequence<Rational>::constant(Rational(1)), 5);
    CHECK(ones.poly.coeffs() == rvector({"1", "-1", "0", "0", "0", "0"}));
    CHECK(ones.effective_degree == 1);
    CHECK(ones.nominal_degree == 5);

    // alpha_k = k
    const auto lin = build_polynomial(polylog_alpha_rational(0), 5);
    CHECK(lin.poly.coeffs() == rvector({"1", "-1", "-1/2", "-1/6", "1/24", "19/120"}));

    // all-zero targets give the constant polynomial
    const auto zero = build_polynomial(
        AlphaSequence<Rational>::explicit_values(rvector({"0", "0", "0", "0"})), 4);
    CHECK(zero.poly.coeffs() == rvector({"1", "0", "0", "0", "0"}));
    CHECK(zero.effective_degree == 0);

    // alpha_k = k^3
    const auto cubes = build_polynomial(polylog_alpha_rational(-2), 4);
    CHECK(cubes.poly.coeffs() == rvector({"1", "-1", "-7/2", "-31/6", "-23/24"}));
}

TEST_CASE("explicit provider shorter than n is an input error") {
    const auto alpha = AlphaSequence<Rational>::explicit_values(rvector({"1", "2"}));
    CHECK_THROWS_AS(build_polynomial(alpha, 3), InputError);
}

TEST_CASE("build_via_series agrees with the recurrence") {
    CHECK(build_via_series(AlphaSequence<Rational>::constant(Rational(1)), 5).poly.coeffs() ==
          rvector({"1", "-1", "0", "0", "0", "0"}));
    CHECK(build_via_series(polylog_alpha_rational(0), 5).poly.coeffs() ==
          rvector({"1", "-1", "-1/2", "-1/6", "1/24", "19/120"}));

    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + trial % 15;
        std::vector<Rational> alpha_values;
        for (unsigned k = 0; k < n; ++k) {
            alpha_values.push_back(random_rational(rng, 20, 20));
        }
        const auto alpha = AlphaSequence<Rational>::explicit_values(alpha_values);
        CHECK(build_polynomial(alpha, n).poly.coeffs() ==
              build_via_series(alpha, n).poly.coeffs());
    }
}

TEST_CASE("truncation nesting: P_{n-1} is a prefix of P_n") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 2 + trial;
        std::vector<Rational> alpha_values;
        for (unsigned k = 0; k < n; ++k) {
            alpha_values.push_back(random_rational(rng, 10, 10));
        }
        const auto alpha = AlphaSequence<Rational>::explicit_values(alpha_values);
        const auto big = build_polynomial(alpha, n);
        const auto small = build_polynomial(alpha, n - 1);
        for (unsigned j = 0; j < n; ++j) {
            CHECK(small.poly[j] == big.poly[j]);
        }
    }
}

TEST_CASE("scaled integer coefficients") {
    CHECK(scaled_integer_coefficients(build_polynomial(polylog_alpha_rational(0), 5)) ==
          std::vector<Integer>{1, -1, -1, -1, 1, 19});
    CHECK(scaled_integer_coefficients(build_polynomial(polylog_alpha_rational(-1), 4)) ==
          std::vector<Integer>{1, -1, -3, -7, 1});
    CHECK(scaled_integer_coefficients(build_polynomial(polylog_alpha_rational(-3), 4)) ==
          std::vector<Integer>{1, -1, -15, -115, -215});
}

TEST_CASE("integrality violation is reported with its index") {
    const auto alpha = AlphaSequence<Rational>::explicit_values(rvector({"1/2"}));
    const auto real = build_polynomial(alpha, 1);  // a_1 = -1/2, so b_1 = -1/2
    CHECK_THROWS_AS(scaled_integer_coefficients(real), IntegralityError);
    try {
        scaled_integer_coefficients(real);
    } catch (const IntegralityError& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("polylog integrality holds for integer s <= 0") {
    for (long s : {0L, -1L, -2L, -3L}) {
        const auto real = build_polynomial(polylog_alpha_rational(s), 60);
        CHECK_NOTHROW(scaled_integer_coefficients(real));
    }
}

TEST_CASE("polylog family admits integer s >= 2 exactly") {
    const auto s2 = build_polynomial(polylog_alpha_rational(2), 4);
    CHECK(s2.poly.coeffs() == rvector({"1", "-1", "1/4", "-1/36", "-1/288"}));
    const auto s3 = build_polynomial(polylog_alpha_rational(3), 4);
    CHECK(s3.poly.coeffs() == rvector({"1", "-1", "3/8", "-17/216", "29/3456"}));
}

TEST_CASE("effective degree uses the relative threshold in float backends") {
    // s = 1 family in complex64: higher coefficients are rounding noise
    const auto real = build_polynomial(polylog_alpha(std::complex<double>(1.0, 0.0)), 10);
    CHECK(real.effective_degree == 1);

    // rational path sees exact zeros
    const auto exact = build_polynomial(polylog_alpha_rational(1), 10);
    CHECK(exact.effective_degree == 1);
    for (unsigned j = 2; j <= 10; ++j) {
        CHECK(is_zero(exact.poly[j]));
    }
}

TEST_CASE("phi embedding fills the root multiset") {
    const auto one = phi_embedding<Complex64>({{1.0, 0.0}});
    REQUIRE(one.roots.has_value());
    REQUIRE(one.roots->roots.size() == 1);
    CHECK(std::abs(one.roots->roots[0] - Complex64{1.0, 0.0}) < 1e-12);

    const auto quad = phi_embedding<Complex64>({{1.0, 0.0}, {2.0, 0.0}});
    REQUIRE(quad.roots.has_value());
    REQUIRE(quad.roots->roots.size() == 2);
    // roots are sorted by (re, im): -1-sqrt(3), then -1+sqrt(3)
    CHECK(std::abs(quad.roots->roots[0] - Complex64{-2.7320508075688772, 0.0}) < 1e-12);
    CHECK(std::abs(quad.roots->roots[1] - Complex64{0.7320508075688772, 0.0}) < 1e-12);

    // degenerate leading coefficient: effective degree 1, single root 1
    const auto degen = phi_embedding<Complex64>({{1.0, 0.0}, {1.0, 0.0}});
    CHECK(degen.effective_degree == 1);
    REQUIRE(degen.roots.has_value());
    REQUIRE(degen.roots->roots.size() == 1);
    CHECK(degen.roots->multiplicities[0] == 1);
    CHECK(std::abs(degen.roots->roots[0] - Complex64{1.0, 0.0}) < 1e-12);

    CHECK_THROWS_AS(phi_embedding<Complex64>({}), InputError);
}

TEST_CASE("polylog with complex s uses the principal branch") {
    const std::complex<double> s{0.5, 0.5};
    const auto alpha = polylog_alpha(s);
    for (unsigned k = 1; k <= 6; ++k) {
        const auto expected =
            std::exp((1.0 - s) * std::log(std::complex<double>(static_cast<double>(k), 0.0)));
        CHECK(std::abs(alpha.term(k) - expected) <= 1e-15);
    }

    // the exactness property holds for complex targets too
    const auto real = build_polynomial(alpha, 8);
    const auto sums = power_sums_newton(real, 8);
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(std::abs(sums[k - 1] - alpha.term(k)) <= 1e-10);
    }

    // bigcomplex evaluation agrees with the machine path
    const auto big = polylog_alpha(s, 256);
    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(std::abs(big.term(k).to_complex64() - alpha.term(k)) <= 1e-14);
    }
}

TEST_CASE("a_0 is always exactly one") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 1 + trial;
        std::vector<Rational> alpha_values;
        for (unsigned k = 0; k < n; ++k) {
            alpha_values.push_back(random_rational(rng, 50, 50));
        }
        const auto real =
            build_polynomial(AlphaSequence<Rational>::explicit_values(alpha_values), n);
        CHECK(real.poly[0] == Rational(1));
    }
}

TEST_SUITE_END();
