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

// Acceptance suite: one pass/fail line per criterion. Every tolerance is
// pinned here, in code. Run with no arguments for all criteria, or pass
// criterion numbers to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <plethys/construct.hpp>
#include <plethys/io.hpp>
#include <plethys/polylog.hpp>
#include <plethys/verify.hpp>

using namespace plethys;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Rational random_alpha_term(std::mt19937& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return make_rational(num(rng), den(rng));
}

// ---------------------------------------------------------------------------

// 200 random rational target vectors, n <= 30: the Newton-identity power
// sums of the built polynomial equal the targets exactly, zero tolerance.
bool criterion_1() {
    std::mt19937 rng(0x5eed0001);
    const auto start = std::chrono::steady_clock::now();
    std::uniform_int_distribution<unsigned> n_dist(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = n_dist(rng);
        std::vector<Rational> targets;
        targets.reserve(n);
        for (unsigned k = 0; k < n; ++k) {
            targets.push_back(random_alpha_term(rng, 100));
        }
        const auto alpha = AlphaSequence<Rational>::explicit_values(targets);
        const auto real = build_polynomial(alpha, n);
        const auto sums = power_sums_newton(real, n);
        for (unsigned k = 1; k <= n; ++k) {
            if (!(sums[k - 1] == targets[k - 1])) {
                std::printf("    trial %d: p_{-%u} != alpha_%u\n", trial, k, k);
                return false;
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::printf("    200 exact trials in %.2f s\n", elapsed);
    return elapsed < 10.0;
}

// The seven-row family table through x^4, exact rationals.
bool criterion_2() {
    const std::vector<std::pair<long, std::vector<std::string>>> expected = {
        {-3, {"1", "-1", "-15/2", "-115/6", "-215/24"}},
        {-2, {"1", "-1", "-7/2", "-31/6", "-23/24"}},
        {-1, {"1", "-1", "-3/2", "-7/6", "1/24"}},
        {0, {"1", "-1", "-1/2", "-1/6", "1/24"}},
        {1, {"1", "-1", "0", "0", "0"}},
        {2, {"1", "-1", "1/4", "-1/36", "-1/288"}},
        {3, {"1", "-1", "3/8", "-17/216", "29/3456"}},
    };
    for (const auto& [s, coeffs] : expected) {
        const auto real = build_polynomial(polylog_alpha_rational(s), 4);
        for (unsigned j = 0; j <= 4; ++j) {
            if (!(real.poly[j] == rational_from_string(coeffs[j]))) {
                std::printf("    s=%ld: a_%u = %s, expected %s\n", s, j,
                            to_string(real.poly[j]).c_str(), coeffs[j].c_str());
                return false;
            }
        }
    }
    std::printf("    all 35 coefficients exact\n");
    return true;
}

// The 4x6 grid for alpha_k = k: exact at and below the diagonal in the
// rational path, and the whole grid matches the displayed values after
// rounding to 2 decimals.
bool criterion_3() {
    const double displayed[4][6] = {
        {1.00, 2.00, 2.50, 3.50, 4.75, 6.50},
        {1.00, 2.00, 3.00, 4.17, 6.00, 8.58},
        {1.00, 2.00, 3.00, 4.00, 5.79, 8.21},
        {1.00, 2.00, 3.00, 4.00, 5.00, 7.26},
    };
    const auto reports = verification_table(polylog_alpha_rational(0), {2, 3, 4, 5}, 6);
    for (unsigned row = 0; row < 4; ++row) {
        const auto& report = reports[row];
        for (unsigned k = 1; k <= report.n; ++k) {
            if (!(report.values[k - 1] == Rational(static_cast<long>(k)))) {
                std::printf("    n=%u: p_{-%u} not exact\n", report.n, k);
                return false;
            }
        }
        for (unsigned k = 1; k <= 6; ++k) {
            const double rounded =
                std::round(to_double_nearest(report.values[k - 1]) * 100.0) / 100.0;
            if (std::abs(rounded - displayed[row][k - 1]) > 1e-9) {
                std::printf("    n=%u k=%u: %.2f, expected %.2f\n", report.n, k, rounded,
                            displayed[row][k - 1]);
                return false;
            }
        }
    }
    std::printf("    exact below the diagonal; all 24 entries match to 2 decimals\n");
    return true;
}

// The alpha_k = k expansion at n = 5, exact.
bool criterion_4() {
    const auto real = build_polynomial(polylog_alpha_rational(0), 5);
    const std::vector<std::string> expected = {"1", "-1", "-1/2", "-1/6", "1/24", "19/120"};
    for (unsigned j = 0; j <= 5; ++j) {
        if (!(real.poly[j] == rational_from_string(expected[j]))) {
            std::printf("    a_%u = %s, expected %s\n", j, to_string(real.poly[j]).c_str(),
                        expected[j].c_str());
            return false;
        }
    }
    std::printf("    coefficients (1, -1, -1/2, -1/6, 1/24, 19/120) exact\n");
    return true;
}

// 120x120 deviation grid at 256 bits: every k <= n entry below 1e-8.
bool criterion_5() {
    const auto start = std::chrono::steady_clock::now();
    const unsigned bits = 256;
    RootSolveConfig cfg;
    cfg.precision_bits = bits;
    cfg.convergence_tol = std::ldexp(1.0, -static_cast<int>(bits) + 30);
    const auto alpha = polylog_alpha({0.0, 0.0}, bits);
    const ErrorMatrix em = error_matrix(alpha, 120, 120, cfg);
    double worst = -1e300;
    for (unsigned n = 1; n <= 120; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            const double v = em.at(n, k);
            if (std::isnan(v)) {
                std::printf("    row n=%u failed to solve\n", n);
                return false;
            }
            worst = std::max(worst, v);
        }
    }
    std::printf("    worst log10 deviation in the k <= n triangle: %.2f (%.1f s)\n", worst,
                seconds_since(start));
    return worst < -8.0;
}

// Root sweep n = 2..50: every solve within the backward-stable residual
// bound, and the emitted CSV is deterministic.
bool criterion_6() {
    const RootSolveConfig cfg;  // complex64 defaults: tol 1e-14
    auto sweep_csv = [&cfg]() {
        io::Table t;
        t.kind = "roots";
        t.columns = {"n", "re", "im", "multiplicity", "residual"};
        const auto alpha = polylog_alpha({0.0, 0.0});
        for (unsigned n = 2; n <= 50; ++n) {
            const auto real = build_polynomial(alpha, n);
            const auto rm = find_roots(real, cfg);
            // re-check the bound directly from the multiset
            for (std::size_t i = 0; i < rm.roots.size(); ++i) {
                double scale = 0.0;
                double zpow = 1.0;
                const double zmag = std::abs(rm.roots[i]);
                for (unsigned j = 0; j <= real.effective_degree; ++j) {
                    scale += std::abs(real.poly[j]) * zpow;
                    zpow *= zmag;
                }
                if (!(rm.residuals[i] <= cfg.convergence_tol * scale)) {
                    return std::string();
                }
            }
            for (std::size_t i = 0; i < rm.roots.size(); ++i) {
                t.rows.push_back({std::to_string(n), io::format_double(rm.roots[i].real()),
                                  io::format_double(rm.roots[i].imag()),
                                  std::to_string(rm.multiplicities[i]),
                                  io::format_double(rm.residuals[i])});
            }
        }
        std::ostringstream os;
        io::write_csv(os, t);
        return os.str();
    };
    const std::string first = sweep_csv();
    if (first.empty()) {
        std::printf("    a residual missed the backward-stable bound\n");
        return false;
    }
    const std::string second = sweep_csv();
    if (first != second) {
        std::printf("    sweep output is not deterministic\n");
        return false;
    }
    std::printf("    49 degrees, %zu roots, residuals in bound, CSV byte-identical\n",
                std::count(first.begin(), first.end(), '\n') - 2);
    return true;
}

// s = 1 degeneracy: P_n = 1 - x with exactly zero tail for every n <= 50.
bool criterion_7() {
    for (unsigned n = 1; n <= 50; ++n) {
        const auto real = build_polynomial(polylog_alpha_rational(1), n);
        if (!(real.poly[0] == Rational(1)) || !(real.poly[1] == Rational(-1))) {
            return false;
        }
        for (unsigned j = 2; j <= n; ++j) {
            if (!is_zero(real.poly[j])) {
                std::printf("    n=%u: a_%u != 0\n", n, j);
                return false;
            }
        }
        if (real.effective_degree != 1) {
            return false;
        }
    }
    std::printf("    P_n = 1 - x exactly for n = 1..50\n");
    return true;
}

// Factorial-scaled integrality through j = 200 for s in {0, -1, -2, -3},
// with the leading terms pinned.
bool criterion_8() {
    const std::vector<std::pair<long, std::vector<long>>> leading = {
        {0, {1, -1, -1, -1, 1, 19}},
        {-1, {1, -1, -3, -7, 1}},
        {-2, {1, -1, -7, -31, -23}},
        {-3, {1, -1, -15, -115, -215}},
    };
    for (const auto& [s, first_terms] : leading) {
        const auto real = build_polynomial(polylog_alpha_rational(s), 200);
        std::vector<Integer> b;
        try {
            b = scaled_integer_coefficients(real);
        } catch (const IntegralityError& e) {
            std::printf("    s=%ld: %s\n", s, e.what());
            return false;
        }
        for (std::size_t j = 0; j < first_terms.size(); ++j) {
            if (!(b[j] == first_terms[j])) {
                std::printf("    s=%ld: b_%zu = %s, expected %ld\n", s, j, b[j].get_str().c_str(),
                            first_terms[j]);
                return false;
            }
        }
    }
    std::printf("    b_j integral through j = 200 for s in {0,-1,-2,-3}; leading terms match\n");
    std::printf("    (b-file matching is exercised in the CLI suite; no OEIS files are bundled)\n");
    return true;
}

// Desk-scale zeta convergence. The strict-decrease and cross-check clauses
// hold; the 10x clause cannot: the tail of P_n(1) decays like Theta(1/n)
// (the coefficients of exp(-Li_2) fall off like 1/j^2), so the n=10 to n=80
// deviation ratio tends to 8 from below and measures ~6.16 here.
bool criterion_9() {
    bool ok = true;

    // independent target: pi^2/6 against the Euler-Maclaurin path, 128 bits
    const BigFloat pi = BigFloat::pi(128);
    const BigFloat cross = abs(zeta_value(2.0, 128) - pi * pi / BigFloat(6.0, 128));
    if (!(cross.to_double() <= 1e-20)) {
        std::printf("    zeta(2) cross-check off by %.3e\n", cross.to_double());
        ok = false;
    } else {
        std::printf("    zeta(2) vs pi^2/6 at 128 bits: |diff| = %.1e <= 1e-20\n",
                    cross.to_double());
    }

    const auto record = zeta_convergence(2.0, {10, 20, 40, 80}, 256);
    for (std::size_t i = 1; i < record.rows.size(); ++i) {
        if (!(record.rows[i].deviation < record.rows[i - 1].deviation)) {
            std::printf("    deviation did not decrease at n=%u\n", record.rows[i].n);
            ok = false;
        }
    }
    std::printf("    deviations strictly decreasing over n = 10, 20, 40, 80\n");

    const double first = record.rows.front().deviation.to_double();
    const double last = record.rows.back().deviation.to_double();
    const double ratio = first / last;
    std::printf("    deviation(10)/deviation(80) = %.3f (needs >= 10)\n", ratio);
    if (!(last * 10.0 <= first)) {
        std::printf("    10x clause unattainable: the tail is Theta(1/n), ratio -> 8 < 10\n");
        ok = false;
    }
    return ok;
}

// Quadratic cost scaling: wall time within a factor-of-2 band of x4 per
// doubling across n = 1250..10000 in complex64.
bool criterion_10() {
    const auto alpha = polylog_alpha({0.0, 0.0});
    auto timed_build = [&alpha](unsigned n) {
        double best = 1e300;
        for (int rep = 0; rep < 3; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const auto real = build_polynomial(alpha, n);
            const double t = seconds_since(start);
            if (std::abs(real.poly[1]) != 1.0) {
                return -1.0;  // defeat over-optimization, never taken
            }
            best = std::min(best, t);
        }
        return best;
    };
    (void)timed_build(1250);  // warmup
    const unsigned sizes[4] = {1250, 2500, 5000, 10000};
    double times[4];
    for (int i = 0; i < 4; ++i) {
        times[i] = timed_build(sizes[i]);
        std::printf("    n=%5u: %8.4f s\n", sizes[i], times[i]);
    }
    for (int i = 0; i + 1 < 4; ++i) {
        const double ratio = times[i + 1] / times[i];
        std::printf("    ratio %u -> %u: %.2f (needs 2..8)\n", sizes[i], sizes[i + 1], ratio);
        if (!(ratio >= 2.0 && ratio <= 8.0)) {
            return false;
        }
    }
    return true;
}

// Root sums, Newton sums, and the log-series check agree on 50 random cases.
bool criterion_11() {
    std::mt19937 rng(0x5eed000b);
    std::uniform_int_distribution<unsigned> n_dist(1, 20);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = n_dist(rng);
        std::vector<Rational> targets;
        targets.reserve(n);
        for (unsigned k = 0; k < n; ++k) {
            targets.push_back(random_alpha_term(rng, 8));
        }
        const auto alpha = AlphaSequence<Rational>::explicit_values(targets);
        const auto real = build_polynomial(alpha, n);
        const auto newton = power_sums_newton(real, n);
        for (unsigned k = 1; k <= n; ++k) {
            if (!(newton[k - 1] == targets[k - 1])) {
                std::printf("    trial %d: newton sum mismatch at k=%u\n", trial, k);
                return false;
            }
        }
        if (!log_series_check(real, alpha).pass) {
            std::printf("    trial %d: log-series check failed\n", trial);
            return false;
        }

        std::vector<Complex64> targets64;
        targets64.reserve(n);
        for (const auto& q : targets) {
            targets64.push_back(to_complex64(q));
        }
        const auto real64 =
            build_polynomial(AlphaSequence<Complex64>::explicit_values(targets64), n);
        if (real64.effective_degree == 0) {
            continue;
        }
        const auto rm = find_roots(real64);
        const auto from_roots = power_sums_from_roots(rm, n);
        const auto newton64 = power_sums_newton(real64, n);
        for (unsigned k = 1; k <= n; ++k) {
            if (!(std::abs(from_roots[k - 1] - newton64[k - 1]) <= 1e-8)) {
                std::printf("    trial %d: root/newton gap %.3e at k=%u (n=%u)\n", trial,
                            std::abs(from_roots[k - 1] - newton64[k - 1]), k, n);
                return false;
            }
        }
    }
    std::printf("    50 cases: exact agreement (rational), <= 1e-8 (complex64)\n");
    return true;
}

struct Criterion {
    int id;
    const char* name;
    bool (*fn)();
};

const Criterion kCriteria[] = {
    {1, "power-sum exactness on 200 random rational targets", criterion_1},
    {2, "family table reproduction (s = -3..3, exact rationals)", criterion_2},
    {3, "power-sum grid reproduction (alpha_k = k, n = 2..5)", criterion_3},
    {4, "alpha_k = k expansion at n = 5", criterion_4},
    {5, "120x120 deviation grid below 1e-8 at 256 bits", criterion_5},
    {6, "root sweep n = 2..50 within the residual bound, deterministic CSV", criterion_6},
    {7, "s = 1 degeneracy: P_n = 1 - x exactly for n <= 50", criterion_7},
    {8, "factorial-scaled integrality through j = 200", criterion_8},
    {9, "zeta convergence at desk scale", criterion_9},
    {10, "quadratic build cost across n = 1250..10000", criterion_10},
    {11, "oracle triangle on 50 random cases", criterion_11},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.insert(std::atoi(argv[i]));
    }
    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (!selected.empty() && !selected.count(criterion.id)) {
            continue;
        }
        bool ok = false;
        try {
            ok = criterion.fn();
        } catch (const std::exception& e) {
            std::printf("    unexpected exception: %s\n", e.what());
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name);
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
    return failures;
}
