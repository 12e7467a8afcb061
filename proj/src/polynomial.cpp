#include "germ/polynomial.hpp"

#include <algorithm>

#include "germ/error.hpp"

namespace germ {

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    if (c.field() != ring->field()) throw MixedFieldError();
    Polynomial f(ring);
    if (!c.is_zero()) f.terms_.push_back({Monomial(ring->num_vars()), c});
    return f;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t n) {
    Scalar c = Scalar::of_integer(n, ring->field());
    return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    Polynomial f(ring);
    f.terms_.push_back({Monomial::variable(i, ring->num_vars()), Scalar::one(ring->field())});
    return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Scalar c) {
    return from_terms(std::move(ring), {{std::move(m), std::move(c)}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    for (auto& t : terms) {
        if (t.coeff.field() != f.ring_->field()) throw MixedFieldError();
        if (t.mono.num_vars() != f.ring_->num_vars()) throw ContextMismatchError();
        if (t.coeff.is_zero() || t.mono.degree() > f.ring_->degree_cap()) continue;
        f.terms_.push_back(std::move(t));
    }
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const Term& a, const Term& b) { return local_greater(a.mono, b.mono); });
    std::vector<Term> merged;
    for (auto& t : f.terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    f.terms_ = std::move(merged);
    return f;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    return terms_.front();
}

std::optional<std::uint32_t> Polynomial::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();
}

std::uint32_t Polynomial::max_degree() const {
    if (terms_.empty()) throw ZeroPolynomialError("max degree of the zero polynomial");
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::uint32_t Polynomial::ecart() const {
    return max_degree() - terms_.front().mono.degree();
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.field() != ring_->field()) throw MixedFieldError();
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

Polynomial Polynomial::monic() const {
    return scaled(leading().coeff.inverse());
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.field() != ring_->field()) throw MixedFieldError();
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    const std::uint32_t cap = ring_->degree_cap();
    out.terms_.reserve(terms_.size());
    // multiplying by a fixed monomial preserves the term order
    for (const auto& t : terms_) {
        if (t.mono.degree() + m.degree() > cap) continue;
        out.terms_.push_back({t.mono * m, t.coeff * c});
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial out(ring_);
    for (const auto& t : terms_) {
        const std::uint32_t e = t.mono[var];
        if (e == 0) continue;
        Scalar c = t.coeff * Scalar::of_integer(static_cast<std::int64_t>(e), ring_->field());
        if (c.is_zero()) continue; // exponent divisible by the characteristic
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps[var] -= 1;
        out.terms_.push_back({Monomial(std::move(exps)), std::move(c)});
    }
    // dropping a fixed variable once preserves the relative term order
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial out(a.ring_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        switch (local_cmp(a.terms_[i].mono, b.terms_[j].mono)) {
        case MonoCmp::Greater:
            out.terms_.push_back(a.terms_[i++]);
            break;
        case MonoCmp::Less:
            out.terms_.push_back(b.terms_[j++]);
            break;
        case MonoCmp::Equal: {
            Scalar c = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!c.is_zero()) out.terms_.push_back({a.terms_[i].mono, std::move(c)});
            ++i;
            ++j;
            break;
        }
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial Polynomial::mul_impl(const Polynomial& rhs, bool allow_truncation) const {
    require_same_ring(ring_, rhs.ring_);
    const std::uint32_t cap = ring_->degree_cap();
    std::vector<Term> products;
    products.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& s : terms_) {
        for (const auto& t : rhs.terms_) {
            if (s.mono.degree() + t.mono.degree() > cap) {
                if (!allow_truncation) {
                    throw DegreeCapError("exact product exceeds the degree cap");
                }
                continue;
            }
            products.push_back({s.mono * t.mono, s.coeff * t.coeff});
        }
    }
    return from_terms(ring_, std::move(products));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return a.mul_impl(b, true);
}

Polynomial Polynomial::mul_exact(const Polynomial& rhs) const {
    return mul_impl(rhs, false);
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = constant(ring_, 1);
    for (std::uint32_t i = 0; i < e; ++i) {
        acc = acc * *this;
        if (acc.is_zero()) break;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->num_vars()) {
        throw Error("substitute: expected one image per variable");
    }
    for (const auto& g : images) require_same_ring(ring_, g.ring());
    Polynomial acc(ring_);
    for (const auto& t : terms_) {
        Polynomial prod = constant(ring_, t.coeff);
        for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i) {
            if (t.mono[i] > 0) prod = prod * images[i].pow(t.mono[i]);
        }
        acc = acc + prod;
    }
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

} // namespace germ
