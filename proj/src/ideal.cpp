#include "germ/ideal.hpp"

#include <algorithm>

namespace germ {

namespace {

void push_unique(std::vector<Polynomial>& gens, Polynomial f) {
    if (f.is_zero()) return;
    if (std::find(gens.begin(), gens.end(), f) != gens.end()) return;
    gens.push_back(std::move(f));
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        require_same_ring(ring_, g.ring());
        push_unique(gens_, std::move(g));
    }
}

Ideal m_power(const RingPtr& ring, std::uint32_t k) {
    std::vector<Polynomial> gens;
    if (k <= ring->degree_cap()) {
        Scalar one = Scalar::one(ring->field());
        for (auto& m : monomials_of_degree(ring->num_vars(), k)) {
            gens.push_back(Polynomial::term(ring, std::move(m), one));
        }
    }
    // k > cap would generate only terms past the truncation range; that is
    // the zero ideal in K[x]/m^{cap+1}, but determinacy questions never ask
    // for it, so representing it as empty keeps the semantics consistent.
    return Ideal(ring, std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) {
        for (const auto& g : b.gens()) {
            gens.push_back(f * g);
        }
    }
    return Ideal(a.ring(), std::move(gens));
}

std::optional<std::uint32_t> ideal_order(const Ideal& I) {
    std::optional<std::uint32_t> best;
    for (const auto& g : I.gens()) {
        auto o = g.order();
        if (o && (!best || *o < *best)) best = o;
    }
    return best;
}

} // namespace germ
