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

#include "plethys/construct.hpp"

#include "plethys/errors.hpp"

namespace plethys {

std::vector<Integer> scaled_integer_coefficients(const PolynomialRealization<Rational>& real) {
    std::vector<Integer> b;
    b.reserve(real.nominal_degree + 1);
    Integer fac = 1;
    for (unsigned j = 0; j <= real.nominal_degree; ++j) {
        if (j > 0) {
            fac *= j;
        }
        Rational scaled = real.poly[j] * Rational(fac);
        if (!is_integer(scaled)) {
            throw IntegralityError("b_" + std::to_string(j) + " = " + to_string(scaled) +
                                       " is not an integer",
                                   j);
        }
        b.push_back(scaled.get_num());
    }
    return b;
}

template <class T>
PolynomialRealization<T> phi_embedding(std::vector<T> alpha_values, const RootSolveConfig& cfg) {
    static_assert(is_float_backend_v<T>, "the embedding fills roots, which needs a float backend");
    if (alpha_values.empty()) {
        throw InputError("the embedding needs at least one power-sum target");
    }
    const auto alpha = AlphaSequence<T>::explicit_values(std::move(alpha_values));
    auto real = build_polynomial(alpha, static_cast<unsigned>(alpha.size()));
    real.roots = find_roots(real, cfg);
    return real;
}

template PolynomialRealization<Complex64> phi_embedding(std::vector<Complex64>,
                                                        const RootSolveConfig&);
template PolynomialRealization<BigComplex> phi_embedding(std::vector<BigComplex>,
                                                         const RootSolveConfig&);

}  // namespace plethys
