/*
   Copyright 2026 the linfield authors

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

#include "linfield/scalar.hpp"

#include <stdexcept>

#include "linfield/errors.hpp"

namespace linfield {

Scalar::Scalar(long num, long den) : v_(num, den) {
    if (den == 0) {
        throw std::invalid_argument("Scalar: denominator must be nonzero");
    }
    v_.canonicalize();
}

Scalar Scalar::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        throw std::invalid_argument("Scalar: cannot parse \"" + text + "\"");
    }
    if (sgn(v.get_den()) == 0) {
        throw std::invalid_argument("Scalar: denominator must be nonzero");
    }
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_)); }

Scalar& Scalar::operator+=(const Scalar& o) {
    v_ += o.v_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    v_ -= o.v_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    v_ *= o.v_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) {
        throw ZeroInverseError("Scalar: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw ZeroInverseError("Scalar: zero has no inverse");
    }
    return Scalar(mpq_class(1 / v_));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(std::move(r));  // num/den coprime, so powers are too
}

Scalar Scalar::numerator() const { return Scalar(mpq_class(v_.get_num())); }

Scalar Scalar::denominator() const { return Scalar(mpq_class(v_.get_den())); }

}  // namespace linfield
