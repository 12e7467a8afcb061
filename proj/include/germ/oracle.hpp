#ifndef GERM_ORACLE_HPP
#define GERM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "germ/ideal.hpp"

namespace germ {

// Brute-force ground truth for membership and dimension questions, by exact
// row reduction over the monomials of degree <= D. Rows span the image of
// the ideal in K[x]/m^{D+1}: every monomial multiple u*g with
// deg(u) + ord(g) <= D, truncated at D. Shares no standard-basis code with
// the engine. Slow on purpose; exact always.
class TruncatedSpace {
public:
    TruncatedSpace(const Ideal& I, std::uint32_t d);

    std::uint32_t truncation() const { return d_; }
    std::size_t num_monomials() const { return basis_.size(); }
    std::size_t rank() const { return rows_.size(); }
    std::uint64_t quotient_dim() const { return basis_.size() - rows_.size(); }

    // f in I + m^{D+1}? Requires all terms of f to have degree <= D.
    bool in_span(const Polynomial& f) const;
    // All monomials of degree n in the span, i.e. m^n contained in
    // I + m^{D+1}; by Nakayama a positive answer means m^n lies in I itself.
    bool contains_degree(std::uint32_t n) const;

private:
    std::vector<Scalar> to_vector(const Polynomial& f) const;
    // reduces v against the echelon rows in place; true if it vanishes
    bool reduce(std::vector<Scalar>& v) const;
    void insert_row(std::vector<Scalar> v);

    std::uint32_t d_;
    RingPtr ring_;
    std::vector<Monomial> basis_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
    std::vector<std::vector<Scalar>> rows_; // echelon form, monic pivots
    std::vector<std::size_t> pivots_;
};

// Stabilized quotient dimension: scans d = 1..D and reports the dimension
// once two consecutive levels agree and m^d is fully captured (which pins
// the exact colength); nullopt when no stabilization happens by D, the
// infinite-colength signal.
std::optional<std::uint64_t> oracle_colength(const Ideal& I, std::uint32_t d_max);

// Membership modulo m^{D+1}; exact membership for m-primary ideals once
// m^N is inside the ideal for some N <= D.
bool oracle_member(const Polynomial& f, const Ideal& I, std::uint32_t d);

// Smallest n <= D with m^n inside the ideal, by direct monomial scanning.
std::optional<std::uint32_t> oracle_min_m_power(const Ideal& I, std::uint32_t d_max);

} // namespace germ

#endif
