#include "germ/field.hpp"

namespace germ {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31)) {
        throw Error("characteristic too large: " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw Error("characteristic must be prime: " + std::to_string(p));
    }
    return FieldSpec(p);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // invariant: r = s*a (mod p), walking the Euclid remainder chain
    std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    if (r1 == 0) throw DivisionByZeroError();
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    // r0 == gcd(a, p) == 1 since p is prime and a != 0 mod p
    std::int64_t inv = s0 % p;
    return inv < 0 ? inv + p : inv;
}

Scalar Scalar::zero(FieldSpec field) {
    return field.is_rationals() ? Scalar(field, mpq_class(0)) : Scalar(field, std::int64_t{0});
}

Scalar Scalar::one(FieldSpec field) {
    return field.is_rationals() ? Scalar(field, mpq_class(1)) : Scalar(field, std::int64_t{1});
}

Scalar Scalar::of_integer(std::int64_t n, FieldSpec field) {
    if (field.is_rationals()) {
        mpq_class q;
        q = mpz_class(std::to_string(n)); // int64 may exceed long on some ABIs; go through mpz
        return Scalar(field, q);
    }
    std::int64_t p = field.characteristic();
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Scalar(field, r);
}

Scalar Scalar::of_integer(const mpz_class& n, FieldSpec field) {
    if (field.is_rationals()) {
        return Scalar(field, mpq_class(n));
    }
    mpz_class r = n % mpz_class(static_cast<unsigned long>(field.characteristic()));
    if (r < 0) r += static_cast<unsigned long>(field.characteristic());
    return Scalar(field, r.get_si());
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den, FieldSpec field) {
    if (den == 0) throw DivisionByZeroError("zero denominator");
    if (field.is_rationals()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(field, q);
    }
    Scalar n = of_integer(num, field);
    Scalar d = of_integer(den, field);
    return n / d;
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rational_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rational_ == 1 : residue_ == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) throw MixedFieldError();
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, mpq_class(-rational_));
    return residue_ == 0 ? *this : Scalar(field_, field_.characteristic() - residue_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (field_.is_rationals()) return Scalar(field_, mpq_class(1 / rational_));
    return Scalar(field_, mod_inverse(residue_, field_.characteristic()));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rationals()) {
        rational_ += rhs.rational_;
    } else {
        residue_ += rhs.residue_;
        if (residue_ >= field_.characteristic()) residue_ -= field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rationals()) {
        rational_ -= rhs.rational_;
    } else {
        residue_ -= rhs.residue_;
        if (residue_ < 0) residue_ += field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rationals()) {
        rational_ *= rhs.rational_;
    } else {
        // p < 2^31, so the product of two residues fits in int64
        residue_ = (residue_ * rhs.residue_) % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    return a.field_.is_rationals() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::str() const {
    if (field_.is_rationals()) return rational_.get_str();
    return std::to_string(residue_);
}

std::int64_t Scalar::residue() const {
    if (field_.is_rationals()) throw Error("residue() called on a rational");
    return residue_;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw Error("rational() called on an F_p element");
    return rational_;
}

} // namespace germ
