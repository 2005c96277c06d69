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

#include "plethys/bigfloat.hpp"

#include <cmath>
#include <cstdio>

#include "plethys/errors.hpp"

namespace plethys {

namespace {

unsigned checked_precision(unsigned bits) {
    if (bits < kMinPrecisionBits) {
        throw ContractError("precision below " + std::to_string(kMinPrecisionBits) + " bits");
    }
    return bits;
}

}  // namespace

BigFloat::BigFloat(unsigned precision_bits) : prec_(checked_precision(precision_bits)) {
    mpfr_init2(v_, prec_);
    mpfr_set_zero(v_, +1);
}

BigFloat::BigFloat(double value, unsigned precision_bits) : prec_(checked_precision(precision_bits)) {
    mpfr_init2(v_, prec_);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : prec_(other.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : prec_(other.prec_) {
    v_[0] = other.v_[0];
    mpfr_init2(other.v_, MPFR_PREC_MIN);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        std::swap(prec_, other.prec_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::from_rational(const Rational& q, unsigned precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& text, unsigned precision_bits) {
    BigFloat r(precision_bits);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
        throw InputError("not a real number: '" + text + "'");
    }
    return r;
}

BigFloat BigFloat::pi(unsigned precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log_of_uint(unsigned long k, unsigned precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_ui(r.v_, k, MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

double BigFloat::to_double() const {
    return mpfr_get_d(v_, MPFR_RNDN);
}

std::string BigFloat::to_string() const {
    const int digits = static_cast<int>(std::ceil(prec_ * 0.3010299956639812)) + 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

bool BigFloat::is_zero() const {
    return mpfr_zero_p(v_) != 0;
}

int BigFloat::sign() const {
    return mpfr_sgn(v_);
}

void BigFloat::check_same_precision(const BigFloat& a, const BigFloat& b) {
    if (a.prec_ != b.prec_) {
        throw ContractError("mixed precisions: " + std::to_string(a.prec_) + " vs " +
                            std::to_string(b.prec_) + " bits");
    }
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    check_same_precision(*this, rhs);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    check_same_precision(*this, rhs);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    check_same_precision(*this, rhs);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    check_same_precision(*this, rhs);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator+=(double rhs) {
    mpfr_add_d(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(double rhs) {
    mpfr_sub_d(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(double rhs) {
    mpfr_mul_d(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(double rhs) {
    mpfr_div_d(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(unsigned long rhs) {
    mpfr_mul_ui(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(unsigned long rhs) {
    mpfr_div_ui(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
}
bool operator!=(const BigFloat& a, const BigFloat& b) {
    return !(a == b);
}
bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
}
bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
}
bool operator>(const BigFloat& a, const BigFloat& b) {
    return mpfr_greater_p(a.v_, b.v_) != 0;
}
bool operator>=(const BigFloat& a, const BigFloat& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
}
bool operator<(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) < 0;
}
bool operator<=(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) <= 0;
}
bool operator>(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) > 0;
}
bool operator>=(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) >= 0;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x);
    mpfr_exp(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat log10(const BigFloat& x) {
    BigFloat r(x);
    mpfr_log10(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
    BigFloat::check_same_precision(base, exponent);
    BigFloat r(base);
    mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat::check_same_precision(x, y);
    BigFloat r(x.precision_bits());
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

void sin_cos(BigFloat& sin_out, BigFloat& cos_out, const BigFloat& angle) {
    BigFloat::check_same_precision(sin_out, angle);
    BigFloat::check_same_precision(cos_out, angle);
    mpfr_sin_cos(sin_out.raw(), cos_out.raw(), angle.raw(), MPFR_RNDN);
}

BigFloat operator+(BigFloat a, const BigFloat& b) {
    a += b;
    return a;
}
BigFloat operator-(BigFloat a, const BigFloat& b) {
    a -= b;
    return a;
}
BigFloat operator*(BigFloat a, const BigFloat& b) {
    a *= b;
    return a;
}
BigFloat operator/(BigFloat a, const BigFloat& b) {
    a /= b;
    return a;
}
BigFloat operator+(BigFloat a, double b) {
    a += b;
    return a;
}
BigFloat operator-(BigFloat a, double b) {
    a -= b;
    return a;
}
BigFloat operator*(BigFloat a, double b) {
    a *= b;
    return a;
}
BigFloat operator/(BigFloat a, double b) {
    a /= b;
    return a;
}
BigFloat operator*(BigFloat a, unsigned long b) {
    a *= b;
    return a;
}
BigFloat operator/(BigFloat a, unsigned long b) {
    a /= b;
    return a;
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
    return (a < b) ? b : a;
}

}  // namespace plethys
