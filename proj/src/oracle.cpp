#include "germ/oracle.hpp"

#include "germ/error.hpp"

namespace germ {

TruncatedSpace::TruncatedSpace(const Ideal& I, std::uint32_t d) : d_(d), ring_(I.ring()) {
    if (d_ > ring_->degree_cap()) {
        throw DegreeCapError("oracle truncation beyond the degree cap");
    }
    basis_ = monomials_up_to_degree(ring_->num_vars(), d_);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].exponents()] = i;

    Scalar one = Scalar::one(ring_->field());
    for (const auto& g : I.gens()) {
        std::uint32_t ord = g.order().value(); // generators are nonzero
        if (ord > d_) continue;
        for (const auto& u : monomials_up_to_degree(ring_->num_vars(), d_ - ord)) {
            insert_row(to_vector(g.times_term(u, one)));
        }
    }
}

std::vector<Scalar> TruncatedSpace::to_vector(const Polynomial& f) const {
    std::vector<Scalar> v(basis_.size(), Scalar::zero(ring_->field()));
    for (const auto& t : f.terms()) {
        if (t.mono.degree() > d_) continue; // image in K[x]/m^{D+1}
        v[index_.at(t.mono.exponents())] = t.coeff;
    }
    return v;
}

bool TruncatedSpace::reduce(std::vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        // copy: the first subtraction below zeroes v at the pivot column
        Scalar c = v[pivots_[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = pivots_[r]; j < v.size(); ++j) {
            if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
        }
    }
    for (const auto& c : v) {
        if (!c.is_zero()) return false;
    }
    return true;
}

void TruncatedSpace::insert_row(std::vector<Scalar> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = v[pivots_[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = pivots_[r]; j < v.size(); ++j) {
            if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
        }
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        Scalar inv = v[j].inverse();
        for (std::size_t k = j; k < v.size(); ++k) v[k] *= inv;
        // keep rows ordered by pivot column for deterministic reduction
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < j) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, j);
        return;
    }
}

bool TruncatedSpace::in_span(const Polynomial& f) const {
    require_same_ring(ring_, f.ring());
    for (const auto& t : f.terms()) {
        if (t.mono.degree() > d_) {
            throw Error("oracle membership query has terms beyond the truncation");
        }
    }
    std::vector<Scalar> v = to_vector(f);
    return reduce(v);
}

bool TruncatedSpace::contains_degree(std::uint32_t n) const {
    Scalar one = Scalar::one(ring_->field());
    for (const auto& m : monomials_of_degree(ring_->num_vars(), n)) {
        std::vector<Scalar> v(basis_.size(), Scalar::zero(ring_->field()));
        v[index_.at(m.exponents())] = one;
        if (!reduce(v)) return false;
    }
    return true;
}

std::optional<std::uint64_t> oracle_colength(const Ideal& I, std::uint32_t d_max) {
    std::optional<std::uint64_t> previous;
    for (std::uint32_t d = 1; d <= d_max; ++d) {
        TruncatedSpace space(I, d);
        std::uint64_t dim = space.quotient_dim();
        if (previous && *previous == dim && space.contains_degree(d)) {
            return dim;
        }
        previous = dim;
    }
    return std::nullopt;
}

bool oracle_member(const Polynomial& f, const Ideal& I, std::uint32_t d) {
    return TruncatedSpace(I, d).in_span(f);
}

std::optional<std::uint32_t> oracle_min_m_power(const Ideal& I, std::uint32_t d_max) {
    TruncatedSpace space(I, d_max);
    for (std::uint32_t n = 0; n <= d_max; ++n) {
        if (space.contains_degree(n)) return n;
    }
    return std::nullopt;
}

} // namespace germ
