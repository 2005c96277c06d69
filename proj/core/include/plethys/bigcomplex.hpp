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

#ifndef PLETHYS_BIGCOMPLEX_HPP
#define PLETHYS_BIGCOMPLEX_HPP

#include <complex>
#include <string>

#include "plethys/bigfloat.hpp"

namespace plethys {

/// Complex value with both parts at one fixed MPFR precision. Values of
/// different precisions are distinct backends; arithmetic between them is a
/// contract violation, never a silent promotion.
class BigComplex {
  public:
    explicit BigComplex(unsigned precision_bits);
    BigComplex(double re, double im, unsigned precision_bits);
    BigComplex(BigFloat re, BigFloat im);  // parts must share one precision

    static BigComplex from_rational(const Rational& q, unsigned precision_bits);
    static BigComplex from_complex64(std::complex<double> z, unsigned precision_bits);

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    unsigned precision_bits() const { return re_.precision_bits(); }
    std::complex<double> to_complex64() const;
    std::string to_string() const;
    bool is_zero() const;

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator/=(const BigComplex& rhs);
    BigComplex& operator*=(unsigned long rhs);
    BigComplex& operator/=(unsigned long rhs);
    BigComplex operator-() const;

    friend bool operator==(const BigComplex& a, const BigComplex& b);
    friend bool operator!=(const BigComplex& a, const BigComplex& b);

  private:
    BigFloat re_;
    BigFloat im_;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, unsigned long b);
BigComplex operator/(BigComplex a, unsigned long b);

BigFloat abs(const BigComplex& z);

}  // namespace plethys

#endif
