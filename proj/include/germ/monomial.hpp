#ifndef GERM_MONOMIAL_HPP
#define GERM_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace germ {

// Exponent vector with a cached total degree.
class Monomial {
public:
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t i, std::size_t num_vars);

    std::size_t num_vars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t degree() const { return degree_; }

    bool is_constant() const { return degree_ == 0; }
    bool divides(const Monomial& m) const;
    bool coprime_to(const Monomial& m) const;
    // Nonzero exponents only at position i (a constant qualifies for any i).
    bool is_pure_power_of(std::size_t i) const;

    Monomial operator*(const Monomial& rhs) const;
    // Componentwise difference; requires d.divides(*this).
    Monomial quotient_by(const Monomial& d) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

enum class MonoCmp { Less, Equal, Greater };

// Local order used throughout: smaller total degree sorts greater, ties are
// broken reverse lexicographically (the first difference scanning from the
// last variable decides; the smaller exponent there wins). The leading term
// of a germ therefore realizes its order.
MonoCmp local_cmp(const Monomial& a, const Monomial& b);

inline bool local_greater(const Monomial& a, const Monomial& b) {
    return local_cmp(a, b) == MonoCmp::Greater;
}

// All monomials in num_vars variables of total degree exactly d (resp. at
// most d), sorted descending in the local order. Deterministic.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t d);
std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, std::uint32_t d);

} // namespace germ

#endif
