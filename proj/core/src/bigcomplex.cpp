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

#include "plethys/bigcomplex.hpp"

#include "plethys/errors.hpp"

namespace plethys {

BigComplex::BigComplex(unsigned precision_bits) : re_(precision_bits), im_(precision_bits) {}

BigComplex::BigComplex(double re, double im, unsigned precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
    if (re_.precision_bits() != im_.precision_bits()) {
        throw ContractError("complex parts at different precisions");
    }
}

BigComplex BigComplex::from_rational(const Rational& q, unsigned precision_bits) {
    return BigComplex(BigFloat::from_rational(q, precision_bits), BigFloat(precision_bits));
}

BigComplex BigComplex::from_complex64(std::complex<double> z, unsigned precision_bits) {
    return BigComplex(z.real(), z.imag(), precision_bits);
}

std::complex<double> BigComplex::to_complex64() const {
    return {re_.to_double(), im_.to_double()};
}

std::string BigComplex::to_string() const {
    if (im_.is_zero()) {
        return re_.to_string();
    }
    const std::string im_text = im_.to_string();
    if (!im_text.empty() && im_text[0] == '-') {
        return re_.to_string() + im_text + "i";
    }
    return re_.to_string() + "+" + im_text + "i";
}

bool BigComplex::is_zero() const {
    return re_.is_zero() && im_.is_zero();
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
    BigFloat ac = re_ * rhs.re_;
    BigFloat bd = im_ * rhs.im_;
    BigFloat ad = re_ * rhs.im_;
    BigFloat bc = im_ * rhs.re_;
    ac -= bd;
    ad += bc;
    re_ = std::move(ac);
    im_ = std::move(ad);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
    // MPFR exponents are wide enough that the textbook formula cannot
    // overflow at any realistic magnitude.
    BigFloat den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    BigFloat num_re = re_ * rhs.re_ + im_ * rhs.im_;
    BigFloat num_im = im_ * rhs.re_ - re_ * rhs.im_;
    num_re /= den;
    num_im /= den;
    re_ = std::move(num_re);
    im_ = std::move(num_im);
    return *this;
}

BigComplex& BigComplex::operator*=(unsigned long rhs) {
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

BigComplex& BigComplex::operator/=(unsigned long rhs) {
    re_ /= rhs;
    im_ /= rhs;
    return *this;
}

BigComplex BigComplex::operator-() const {
    return BigComplex(-re_, -im_);
}

bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
}

bool operator!=(const BigComplex& a, const BigComplex& b) {
    return !(a == b);
}

BigComplex operator+(BigComplex a, const BigComplex& b) {
    a += b;
    return a;
}
BigComplex operator-(BigComplex a, const BigComplex& b) {
    a -= b;
    return a;
}
BigComplex operator*(BigComplex a, const BigComplex& b) {
    a *= b;
    return a;
}
BigComplex operator/(BigComplex a, const BigComplex& b) {
    a /= b;
    return a;
}
BigComplex operator*(BigComplex a, unsigned long b) {
    a *= b;
    return a;
}
BigComplex operator/(BigComplex a, unsigned long b) {
    a /= b;
    return a;
}

BigFloat abs(const BigComplex& z) {
    return hypot(z.real(), z.imag());
}

}  // namespace plethys
