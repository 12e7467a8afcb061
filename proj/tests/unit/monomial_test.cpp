#include <doctest.h>

#include <random>
#include <vector>

#include "germ/monomial.hpp"

using namespace germ;

namespace {

Monomial M(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("degree, divisibility, lcm, quotient") {
    Monomial x2y = M({2, 1});
    Monomial xy = M({1, 1});
    Monomial y3 = M({0, 3});
    CHECK(x2y.degree() == 3);
    CHECK(xy.divides(x2y));
    CHECK(!x2y.divides(xy));
    CHECK(M({0, 0}).divides(y3)); // 1 divides everything
    CHECK(x2y.quotient_by(xy) == M({1, 0}));
    CHECK(Monomial::lcm(x2y, y3) == M({2, 3}));
    CHECK(x2y * y3 == M({2, 4}));
    CHECK(M({3, 0}).coprime_to(y3));
    CHECK(!x2y.coprime_to(y3));
    CHECK(M({0, 4}).is_pure_power_of(1));
    CHECK(!M({1, 4}).is_pure_power_of(1));
    CHECK(M({0, 0}).is_pure_power_of(0)); // constants count as any pure power
}

TEST_CASE("local order prefers lower total degree") {
    // 1 > x > x^2: a unit's monomial leads any germ
    CHECK(local_greater(M({0, 0}), M({1, 0})));
    CHECK(local_greater(M({1, 0}), M({2, 0})));
    // within degree 2 in (x, y): x^2 > xy > y^2
    CHECK(local_greater(M({2, 0}), M({1, 1})));
    CHECK(local_greater(M({1, 1}), M({0, 2})));
}

TEST_CASE("local order is a total order compatible with multiplication") {
    // all monomials of degree <= 4 in two and <= 3 in three variables
    for (std::size_t nv : {std::size_t(2), std::size_t(3)}) {
        std::uint32_t top = nv == 2 ? 4 : 3;
        std::vector<Monomial> all = monomials_up_to_degree(nv, top);
        for (const Monomial& a : all) {
            CHECK(local_cmp(a, a) == MonoCmp::Equal);
            for (const Monomial& b : all) {
                MonoCmp ab = local_cmp(a, b);
                MonoCmp ba = local_cmp(b, a);
                if (ab == MonoCmp::Equal) {
                    CHECK(a == b);
                    CHECK(ba == MonoCmp::Equal);
                } else {
                    // antisymmetry
                    CHECK((ab == MonoCmp::Greater) == (ba == MonoCmp::Less));
                }
                for (const Monomial& c : all) {
                    // transitivity
                    if (local_greater(a, b) && local_greater(b, c)) {
                        CHECK(local_greater(a, c));
                    }
                    // multiplication keeps the order
                    if (ab == MonoCmp::Greater) {
                        CHECK(local_cmp(a * c, b * c) == MonoCmp::Greater);
                    }
                }
            }
        }
    }
}

TEST_CASE("monomial enumeration is complete, sorted, deterministic") {
    for (std::size_t nv = 1; nv <= 3; ++nv) {
        for (std::uint32_t d = 0; d <= 5; ++d) {
            std::vector<Monomial> fixed = monomials_of_degree(nv, d);
            // count C(d + nv - 1, nv - 1)
            CHECK(fixed.size() == choose(d + nv - 1, nv - 1));
            for (const Monomial& m : fixed) CHECK(m.degree() == d);
            for (std::size_t i = 0; i + 1 < fixed.size(); ++i)
                CHECK(local_greater(fixed[i], fixed[i + 1]));

            std::vector<Monomial> upto = monomials_up_to_degree(nv, d);
            CHECK(upto.size() == choose(d + nv, nv));
            for (std::size_t i = 0; i + 1 < upto.size(); ++i)
                CHECK(local_greater(upto[i], upto[i + 1]));
        }
    }
}

TEST_CASE("variable constructor") {
    CHECK(Monomial::variable(0, 3) == M({1, 0, 0}));
    CHECK(Monomial::variable(2, 3) == M({0, 0, 1}));
}
