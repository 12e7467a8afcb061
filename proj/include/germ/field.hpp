#ifndef GERM_FIELD_HPP
#define GERM_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "germ/error.hpp"

namespace germ {

// Coefficient domain: the rationals (characteristic 0) or a prime field F_p.
class FieldSpec {
public:
    FieldSpec() : p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }
    // Validates that p is prime and p < 2^31.
    static FieldSpec prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    friend bool operator==(FieldSpec a, FieldSpec b) { return a.p_ == b.p_; }
    friend bool operator!=(FieldSpec a, FieldSpec b) { return a.p_ != b.p_; }

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}

    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

// Exact field element. F_p values are stored as the least non-negative
// residue, rationals as mpq_class in lowest terms. All arithmetic is exact;
// mixing elements of different fields throws MixedFieldError.
class Scalar {
public:
    Scalar() = default; // zero of Q

    static Scalar zero(FieldSpec field);
    static Scalar one(FieldSpec field);
    // Image of an integer under the canonical map Z -> K.
    static Scalar of_integer(std::int64_t n, FieldSpec field);
    static Scalar of_integer(const mpz_class& n, FieldSpec field);
    // num/den as an element of K. In F_p a denominator divisible by p (and a
    // zero denominator anywhere) throws DivisionByZeroError.
    static Scalar fraction(const mpz_class& num, const mpz_class& den, FieldSpec field);

    FieldSpec field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text: least residue in F_p, "n" or "n/d" over Q.
    std::string str() const;

    std::int64_t residue() const; // F_p only
    const mpq_class& rational() const; // Q only

private:
    Scalar(FieldSpec field, std::int64_t residue) : field_(field), residue_(residue) {}
    Scalar(FieldSpec field, mpq_class value) : field_(field), rational_(std::move(value)) {}

    void require_same_field(const Scalar& rhs) const;

    FieldSpec field_{};
    std::int64_t residue_ = 0;
    mpq_class rational_ = 0;
};

// Multiplicative inverse of a mod p for prime p, via extended Euclid.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

} // namespace germ

#endif
