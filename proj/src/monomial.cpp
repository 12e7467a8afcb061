#include "germ/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace germ {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t i, std::size_t num_vars) {
    Monomial m(num_vars);
    m.exps_[i] = 1;
    m.degree_ = 1;
    return m;
}

bool Monomial::divides(const Monomial& m) const {
    if (degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > m.exps_[i]) return false;
    }
    return true;
}

bool Monomial::coprime_to(const Monomial& m) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0 && m.exps_[i] > 0) return false;
    }
    return true;
}

bool Monomial::is_pure_power_of(std::size_t i) const {
    return exps_[i] == degree_;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
    out.degree_ += rhs.degree_;
    return out;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= d.exps_[i];
    out.degree_ -= d.degree_;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> exps(a.exps_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(exps));
}

MonoCmp local_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree() ? MonoCmp::Greater : MonoCmp::Less;
    }
    for (std::size_t i = a.num_vars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? MonoCmp::Greater : MonoCmp::Less;
    }
    return MonoCmp::Equal;
}

namespace {

void compositions(std::size_t pos, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
                  std::vector<Monomial>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t e = remaining; e + 1 > 0; --e) {
        cur[pos] = e;
        compositions(pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(num_vars, 0);
    compositions(0, d, cur, out);
    std::sort(out.begin(), out.end(), local_greater);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t k = 0; k <= d; ++k) {
        auto level = monomials_of_degree(num_vars, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace germ
