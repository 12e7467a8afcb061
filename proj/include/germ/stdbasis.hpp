#ifndef GERM_STDBASIS_HPP
#define GERM_STDBASIS_HPP

#include <vector>

#include "germ/ideal.hpp"

namespace germ {

struct MoraResult {
    Polynomial remainder;
    Polynomial unit;                    // constant term 1
    std::vector<Polynomial> cofactors;  // one per input divisor
};

// Mora weak normal form: returns (r, u, a) with
//     u * f = sum_i a[i] * gens[i] + r   (mod m^{cap+1}),
// u a unit, and either r = 0 or LM(r) divisible by no LM(gens[i]).
// Divisors of minimal ecart are preferred (ties: earliest in the pool);
// whenever every candidate has ecart larger than the current partial
// remainder, that partial remainder joins the divisor pool — the step that
// makes division terminate for local orderings and puts the unit in front.
MoraResult mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& gens);

// Remainder only; same reduction strategy without the bookkeeping.
Polynomial mora_reduce(const Polynomial& f, const std::vector<Polynomial>& gens);

// Standard basis of an ideal: monic, minimized (no leading monomial divides
// another), elements sorted leading-monomial-descending in the local order.
// The staircase lists their leading monomials; standard monomials (those not
// below the staircase) form a K-basis of the quotient.
class StdBasis {
public:
    StdBasis(Ideal source, std::vector<Polynomial> elements);

    const RingPtr& ring() const { return source_.ring(); }
    const Ideal& source() const { return source_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    const std::vector<Monomial>& staircase() const { return staircase_; }
    bool is_zero_ideal() const { return elements_.empty(); }

private:
    Ideal source_;
    std::vector<Polynomial> elements_;
    std::vector<Monomial> staircase_;
};

// Tangent-cone completion: Buchberger-style S-pair loop with Mora reduction,
// pairs processed by smallest (lcm degree, pair id), coprime leading
// monomials skipped. Deterministic.
StdBasis std_basis(const Ideal& I);

// f in the ideal, decided modulo m^{cap+1} (exact for m-primary ideals once
// an m-power containment certificate below the cap exists).
bool is_member(const Polynomial& f, const StdBasis& basis);

} // namespace germ

#endif
