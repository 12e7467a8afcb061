#ifndef GERM_IDEAL_HPP
#define GERM_IDEAL_HPP

#include <optional>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

// Finitely generated ideal of the local ring, kept as its generator list.
// Zero generators and exact duplicates are pruned on construction, so the
// zero ideal is exactly the one with no generators.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

// m^k: generated by the monomials of degree k, in descending local order.
// m^0 is the unit ideal.
Ideal m_power(const RingPtr& ring, std::uint32_t k);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
// Generated by the pairwise products; products that truncate to zero and
// duplicates are pruned.
Ideal ideal_product(const Ideal& a, const Ideal& b);

// min ord(f) over nonzero members; nullopt (infinite) for the zero ideal.
// Realized by a generator: ord of a sum or multiple can only grow.
std::optional<std::uint32_t> ideal_order(const Ideal& I);

} // namespace germ

#endif
