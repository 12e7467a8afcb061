#include <doctest.h>

#include <vector>

#include "germ/parser.hpp"
#include "germ/singularity.hpp"

#include "support/testutil.hpp"

using namespace germ;
using germ::testutil::P;

TEST_CASE("cusp benchmark: x^2+y^3 over Q") {
    RingPtr r = testutil::ring2(0, 16);
    Polynomial f = P(r, "x^2+y^3");

    CHECK(milnor_number(f) == 2); // <2x, 3y^2> leaves {1, y}
    CHECK(tjurina_number(f) == 2);
    CHECK(ideal_order(jacobian_ideal(f)) == 1);

    auto rb = right_determinacy_bound(f);
    REQUIRE(rb.has_value());
    // m^2 j(f) = <x^3, x^2y, xy^2, ...>: misses y^3, catches all of degree 4
    CHECK(rb->k_star == 2); // smallest k with m^{k+2} inside: k+2 = 4
    CHECK(rb->bound == 4);  // 2*2 - 2 + 2

    auto cb = contact_determinacy_bound(f);
    REQUIRE(cb.has_value());
    CHECK(cb->k_star == 2);
    CHECK(cb->bound == 4);

    CHECK(min_k_contact(f) == 4); // 2*4 - 2*2 with N* = 4
    CHECK(min_k_right(f) == 4);   // 2*4 - 2 - 1 - 1 with N' = 4

    CorollaryBounds cor = corollary_bounds(f);
    CHECK(cor.contact == 4); // 2*2 - 2*2 + 4
    CHECK(cor.right == 4);   // 2*2 - 2 - 1 + 3
    // the sharp values sit exactly at the coarse bounds for the cusp
    CHECK(*min_k_contact(f) <= *cor.contact);
    CHECK(*min_k_right(f) <= *cor.right);

    SingularityReport rep = analyze(f);
    CHECK(rep.s.value() == 2);
    CHECK(rep.s_prime.value() == 1);
    CHECK(rep.mu.value() == 2);
    CHECK(rep.tau.value() == 2);
    CHECK(rep.right_det.value() == 4);
    CHECK(rep.contact_det.value() == 4);
    CHECK(rep.min_k_right.value() == 4);
    CHECK(rep.min_k_contact.value() == 4);
    REQUIRE(rep.hf_tjurina.has_value());
    CHECK(*rep.hf_tjurina == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("char-5 benchmark: x^6+y^6") {
    RingPtr r5 = testutil::ring2(5, 24);
    Polynomial f = P(r5, "x^6+y^6");

    CHECK(milnor_number(f) == 25);
    CHECK(tjurina_number(f) == 25);

    SingularityReport rep = analyze(f);
    CHECK(rep.s.value() == 6);
    CHECK(rep.s_prime.value() == 5);
    CHECK(rep.mu.value() == 25);
    CHECK(rep.tau.value() == 25);
    // N' = N* = 9: degree-8 monomial x^4y^4 escapes both test ideals
    CHECK(rep.right_det.value() == 10);     // 2*(9-2) - 6 + 2
    CHECK(rep.contact_det.value() == 10);
    CHECK(rep.min_k_right.value() == 6);    // 2*9 - 6 - 5 - 1
    CHECK(rep.min_k_contact.value() == 6);  // 2*9 - 2*6
    CHECK(rep.cor_bound_right.value() == 42);   // 2*25 - 6 - 5 + 3
    CHECK(rep.cor_bound_contact.value() == 42); // 2*25 - 2*6 + 4
    REQUIRE(rep.hf_tjurina.has_value());
    CHECK(*rep.hf_tjurina == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 4, 3, 2, 1});
}

TEST_CASE("char-2 benchmark: y^2+x^3*y has finite tau, infinite mu") {
    RingPtr r2 = testutil::ring2(2, 24);
    Polynomial f = P(r2, "y^2+x^3*y");

    // j(f) = <x^2y, x^3> misses every pure y power
    CHECK(!milnor_number(f).has_value());
    CHECK(tjurina_number(f) == 5);

    SingularityReport rep = analyze(f);
    CHECK(rep.s.value() == 2);
    CHECK(rep.s_prime.value() == 3);
    CHECK(rep.mu.is_infinite());
    CHECK(rep.tau.value() == 5);
    // right side collapses with mu: the hypotheses fail, so all three
    // right-mode fields are unknown with the reason recorded
    CHECK(rep.right_det.is_unknown());
    CHECK(rep.min_k_right.is_unknown());
    CHECK(rep.cor_bound_right.is_unknown());
    CHECK(rep.cor_bound_right.reason().find("mu infinite") != std::string::npos);
    // contact side survives: N* = 5 via m<f> + m^2 j(f)
    CHECK(rep.contact_det.value() == 6);   // 2*(5-2) - 2 + 2
    CHECK(rep.min_k_contact.value() == 6); // 2*5 - 2*2
    CHECK(rep.cor_bound_contact.value() == 10); // 2*5 - 2*2 + 4
    CHECK(rep.min_k_contact.value() >= 2);
    REQUIRE(rep.hf_tjurina.has_value());
    CHECK(*rep.hf_tjurina == std::vector<std::uint64_t>{1, 2, 2});

    CHECK(!right_determinacy_bound(f).has_value());
    CorollaryBounds cor = corollary_bounds(f);
    CHECK(!cor.right.has_value());
    CHECK(cor.contact == 10);
}

TEST_CASE("Morse point: x^2+y^2") {
    RingPtr r = testutil::ring2(0, 16);
    Polynomial f = P(r, "x^2+y^2");
    CHECK(milnor_number(f) == 1);
    auto rb = right_determinacy_bound(f);
    REQUIRE(rb.has_value());
    // m^2 j(f) contains all of m^3: N' = 3, k* = 1
    CHECK(rb->k_star == 1);
    CHECK(rb->bound == 2);
    CHECK(min_k_right(f) == 2);   // 2*3 - 2 - 1 - 1
    CHECK(min_k_contact(f) == 2); // 2*3 - 2*2
}

TEST_CASE("k-th Milnor and Tjurina ideals interpolate") {
    RingPtr r = testutil::ring2(0, 16);
    Polynomial f = P(r, "x^2+y^3");
    CHECK(ideal_equal(milnor_k_ideal(f, 0), jacobian_ideal(f)));
    CHECK(ideal_equal(tjurina_k_ideal(f, 0), tjurina_ideal(f)));
    // colength grows with k: each step multiplies by m
    std::uint64_t prev = *colength(milnor_k_ideal(f, 0));
    for (std::uint32_t k = 1; k <= 4; ++k) {
        std::uint64_t cur = *colength(milnor_k_ideal(f, k));
        CHECK(cur > prev);
        prev = cur;
    }
    // T_k(f) contains f always
    for (std::uint32_t k = 0; k <= 4; ++k) {
        CHECK(is_member(f, std_basis(tjurina_k_ideal(f, k))));
    }
}

TEST_CASE("degenerate germs produce degenerate reports, not throws") {
    RingPtr r = testutil::ring2(0, 16);
    SingularityReport zero = analyze(Polynomial(r));
    CHECK(zero.s.is_unknown());
    CHECK(zero.mu.is_infinite()); // j(0) = 0 has infinite colength
    CHECK(zero.tau.is_infinite());

    SingularityReport unitg = analyze(P(r, "1+x"));
    CHECK(unitg.s.value() == 0);
    CHECK(unitg.mu.value() == 0); // j(1+x) is the unit ideal
    CHECK(unitg.right_det.is_unknown()); // determinacy needs ord >= 2

    SingularityReport smooth = analyze(P(r, "x"));
    CHECK(smooth.s.value() == 1);
    CHECK(smooth.mu.value() == 0);
    CHECK(smooth.contact_det.is_unknown());

    // the theorem entry points do throw on bad input
    CHECK_THROWS_AS(right_determinacy_bound(Polynomial(r)), ZeroPolynomialError);
    CHECK_THROWS_AS(right_determinacy_bound(P(r, "x")), OrderTooSmallError);
    CHECK_THROWS_AS(min_k_contact(P(r, "1+x")), OrderTooSmallError);
}

TEST_CASE("x^2 in two variables: finite tau, infinite mu over Q") {
    RingPtr r = testutil::ring2(0, 16);
    Polynomial f = P(r, "x^2");
    // j = <2x>, tj = <x^2, 2x> = <x>: colength of tj infinite too (no y power)
    CHECK(!milnor_number(f).has_value());
    CHECK(!tjurina_number(f).has_value());
    SingularityReport rep = analyze(f);
    CHECK(rep.mu.is_infinite());
    CHECK(rep.tau.is_infinite());
    CHECK(!rep.hf_tjurina.has_value());
    CHECK(rep.cor_bound_contact.is_unknown()); // bound needs finite tau
}

TEST_CASE("report notes mention scope and sufficiency") {
    RingPtr r = testutil::ring2(0, 16);
    SingularityReport rep = analyze(P(r, "x^2+y^3"));
    REQUIRE(rep.notes.size() == 2);
}
