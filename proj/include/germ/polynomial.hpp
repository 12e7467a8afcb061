#ifndef GERM_POLYNOMIAL_HPP
#define GERM_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "germ/monomial.hpp"
#include "germ/ring.hpp"

namespace germ {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Truncated representative of a power-series germ: a sparse polynomial of
// degree at most cap, understood as its image in K[x]/m^{cap+1}. Terms are
// kept sorted with the leading term (local order) first and never carry a
// zero coefficient, so ord(f) = deg(LM(f)) and representations are unique.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial constant(RingPtr ring, std::int64_t n);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial term(RingPtr ring, Monomial m, Scalar c);
    // Normalizes: sorts, merges equal monomials, drops zeros and terms
    // beyond the cap.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading() const;
    const Monomial& leading_monomial() const { return leading().mono; }
    const Scalar& leading_coeff() const { return leading().coeff; }

    // ord(f): degree of the leading monomial; nullopt iff f == 0.
    std::optional<std::uint32_t> order() const;
    std::uint32_t max_degree() const; // nonzero f only
    std::uint32_t ecart() const;      // max_degree - ord, nonzero f only

    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial monic() const; // nonzero f only
    // f * c*x^m, truncating past the cap.
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial derivative(std::size_t var) const;
    // f(images[0], ..., images[n-1]), truncating throughout.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    Polynomial pow(std::uint32_t e) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    // Truncating product.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    // Product that refuses to truncate: throws DegreeCapError if any term
    // of the exact product would exceed the cap.
    Polynomial mul_exact(const Polynomial& rhs) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    Polynomial mul_impl(const Polynomial& rhs, bool allow_truncation) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace germ

#endif
