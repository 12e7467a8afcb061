#include "germ/localalg.hpp"

#include <algorithm>

#include "germ/error.hpp"

namespace germ {

namespace {

struct BoxScan {
    bool finite = false;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> histogram;
};

// Walks the box bounded by the minimal pure powers of the staircase and
// counts the monomials no staircase corner divides. Standard monomials all
// live in that box, so this is the whole quotient basis.
BoxScan scan_standard_monomials(const StdBasis& basis) {
    BoxScan out;
    const std::size_t n = basis.ring()->num_vars();
    const auto& corners = basis.staircase();

    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& c : corners) {
            if (!c.is_pure_power_of(i)) continue;
            if (!found || c.degree() < bound[i]) bound[i] = c.degree();
            found = true;
        }
        if (!found) return out; // no pure x_i power: infinite colength
    }
    out.finite = true;

    std::vector<std::uint32_t> exps(n, 0);
    while (true) {
        Monomial m{std::vector<std::uint32_t>(exps)};
        bool standard = std::none_of(corners.begin(), corners.end(),
                                     [&](const Monomial& c) { return c.divides(m); });
        if (standard) {
            ++out.total;
            if (out.histogram.size() <= m.degree()) out.histogram.resize(m.degree() + 1, 0);
            ++out.histogram[m.degree()];
        }
        // odometer step through the box
        std::size_t i = 0;
        while (i < n) {
            if (bound[i] > 0 && ++exps[i] < bound[i]) break;
            exps[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    while (!out.histogram.empty() && out.histogram.back() == 0) out.histogram.pop_back();
    return out;
}

} // namespace

ColengthResult colength(const StdBasis& basis) {
    BoxScan scan = scan_standard_monomials(basis);
    if (!scan.finite) return std::nullopt;
    return scan.total;
}

ColengthResult colength(const Ideal& I) {
    return colength(std_basis(I));
}

std::vector<std::uint64_t> hilbert_function(const StdBasis& basis) {
    BoxScan scan = scan_standard_monomials(basis);
    if (!scan.finite) throw InfiniteColengthError("Hilbert function of an infinite quotient");
    return scan.histogram;
}

std::vector<std::uint64_t> hilbert_function(const Ideal& I) {
    return hilbert_function(std_basis(I));
}

bool contains_m_power(const StdBasis& basis, std::uint32_t n) {
    const RingPtr& ring = basis.ring();
    if (n > ring->degree_cap()) {
        throw DegreeCapError("m-power containment test beyond the degree cap");
    }
    Scalar one = Scalar::one(ring->field());
    for (auto& m : monomials_of_degree(ring->num_vars(), n)) {
        if (!is_member(Polynomial::term(ring, std::move(m), one), basis)) return false;
    }
    return true;
}

std::optional<std::uint32_t> min_m_power(const StdBasis& basis) {
    if (basis.is_zero_ideal()) return std::nullopt;
    // elements are sorted leading-first, so the first corner has minimal
    // degree = ord of the ideal; no smaller N can work
    const std::uint32_t start = basis.staircase().front().degree();
    for (std::uint32_t n = start; n <= basis.ring()->degree_cap(); ++n) {
        if (contains_m_power(basis, n)) return n;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> min_m_power(const Ideal& I) {
    return min_m_power(std_basis(I));
}

bool ideal_equal(const StdBasis& a, const StdBasis& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.staircase() != b.staircase()) return false; // leading ideals differ
    for (const auto& e : a.elements()) {
        if (!is_member(e, b)) return false;
    }
    for (const auto& e : b.elements()) {
        if (!is_member(e, a)) return false;
    }
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    return ideal_equal(std_basis(a), std_basis(b));
}

} // namespace germ
