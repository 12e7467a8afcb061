// Acceptance gate for the whole tool: one line per criterion, PASS or FAIL,
// nonzero exit when anything fails. Criteria re-derive their data with fresh
// seeds instead of reusing the unit-test samples.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "germ/equivalence.hpp"
#include "germ/oracle.hpp"
#include "germ/parser.hpp"

#include "support/testutil.hpp"

#ifndef GERM_CLI_BIN
#error "GERM_CLI_BIN must point at the built binary"
#endif
#ifndef GERM_GOLDEN_DIR
#error "GERM_GOLDEN_DIR must point at the golden file directory"
#endif

using namespace germ;
using testutil::P;

namespace {

// Accumulates named failures inside one criterion; only the first is shown.
struct Checker {
    bool ok = true;
    int checked = 0;
    std::string first_failure;

    void require(bool cond, const std::string& what) {
        ++checked;
        if (!cond && ok) first_failure = what;
        if (!cond) ok = false;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the CLI binary, returns (exit code, stdout bytes).
std::pair<int, std::string> run_cli(const std::string& args) {
    std::string out_path = "/tmp/germ_accept_out." + std::to_string(::getpid());
    std::string cmd =
        std::string(GERM_CLI_BIN) + " " + args + " >" + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::string out = slurp(out_path);
    std::remove(out_path.c_str());
    return {code, out};
}

// 1. The char-5 sextic pair has identical Milnor/Tjurina data, yet the germs
// are not equivalent; the tool must never upgrade the matching numbers to an
// equivalence claim, and any refutation it does give must replay.
void crit_equal_data_no_claim(Checker& c) {
    RingPtr r = testutil::ring2(5, 16);
    Polynomial f = P(r, "x^6+y^6");
    Polynomial g = P(r, "x^6+y^6+x^5");

    c.require(ideal_equal(jacobian_ideal(f), jacobian_ideal(g)), "jacobian ideals differ");
    c.require(ideal_equal(tjurina_ideal(f), tjurina_ideal(g)), "tjurina ideals differ");
    c.require(milnor_number(f) == ColengthResult(25), "mu(f) != 25");
    c.require(milnor_number(g) == ColengthResult(25), "mu(g) != 25");
    c.require(tjurina_number(f) == ColengthResult(25), "tau(f) != 25");
    c.require(tjurina_number(g) == ColengthResult(25), "tau(g) != 25");

    EquivalenceVerdict vr = right_compare(f, g);
    c.require(vr.kind != VerdictKind::Equivalent, "right compare claims Equivalent");
    if (vr.kind == VerdictKind::NotEquivalent) {
        c.require(vr.witness.has_value(), "right refutation carries no witness");
        c.require(replay_verdict(vr, f, g), "right refutation does not replay");
    }
    EquivalenceVerdict vc = contact_compare(f, g);
    c.require(vc.kind != VerdictKind::Equivalent, "contact compare claims Equivalent");
    if (vc.kind == VerdictKind::NotEquivalent) {
        c.require(vc.witness.has_value(), "contact refutation carries no witness");
        c.require(replay_verdict(vc, f, g), "contact refutation does not replay");
    }
}

// 2. The char-2 germ y^2 + x^3y: finite tau next to infinite mu, low k-ideals
// of the pair with x^5 added stay equal, and the contact side still produces
// its bounds.
void crit_char2_mixed_finiteness(Checker& c) {
    RingPtr r = testutil::ring2(2, 24);
    Polynomial f = P(r, "y^2+x^3*y");
    Polynomial g = P(r, "y^2+x^3*y+x^5");

    c.require(tjurina_number(f) == ColengthResult(5), "tau(f) != 5");
    c.require(tjurina_number(g) == ColengthResult(5), "tau(g) != 5");
    c.require(!milnor_number(f).has_value(), "mu(f) unexpectedly finite");
    c.require(ideal_equal(tjurina_k_ideal(f, 0), tjurina_k_ideal(g, 0)),
              "k = 0 tjurina ideals differ");
    c.require(ideal_equal(tjurina_k_ideal(f, 1), tjurina_k_ideal(g, 1)),
              "k = 1 tjurina ideals differ");

    std::optional<std::uint32_t> kc = min_k_contact(f);
    c.require(kc.has_value() && *kc >= 2, "min contact k missing or below 2");

    SingularityReport rep = analyze(f);
    c.require(rep.mu.is_infinite(), "report mu not infinite");
    c.require(rep.tau.has_value() && rep.tau.value() == 5, "report tau != 5");
    c.require(rep.s_prime.has_value() && rep.s_prime.value() == 3, "report s' != 3");
    c.require(rep.contact_det.has_value() && rep.contact_det.value() == 6,
              "contact determinacy bound != 6");
    c.require(rep.min_k_contact.has_value() && rep.min_k_contact.value() == 6,
              "reported min contact k != 6");
    c.require(rep.right_det.is_unknown(), "right bound should be unknown");
    c.require(rep.hf_tjurina == std::vector<std::uint64_t>{1, 2, 2},
              "tjurina hilbert function wrong");
}

// 3. Every number the cusp report carries, exactly.
void crit_cusp_benchmark(Checker& c) {
    RingPtr r = testutil::ring2(0, 16);
    Polynomial f = P(r, "x^2+y^3");
    SingularityReport rep = analyze(f);

    auto expect = [&](const ReportField& field, std::int64_t want, const char* name) {
        c.require(field.has_value() && field.value() == want,
                  std::string(name) + " wrong");
    };
    expect(rep.s, 2, "s");
    expect(rep.s_prime, 1, "s'");
    expect(rep.mu, 2, "mu");
    expect(rep.tau, 2, "tau");
    expect(rep.right_det, 4, "right determinacy bound");
    expect(rep.contact_det, 4, "contact determinacy bound");
    expect(rep.min_k_right, 4, "min right k");
    expect(rep.min_k_contact, 4, "min contact k");
    expect(rep.cor_bound_right, 4, "coarse right bound");
    expect(rep.cor_bound_contact, 4, "coarse contact bound");
    c.require(rep.hf_tjurina == std::vector<std::uint64_t>{1, 1},
              "tjurina hilbert function wrong");

    auto rb = right_determinacy_bound(f);
    auto cb = contact_determinacy_bound(f);
    c.require(rb && rb->k_star == 2 && rb->bound == 4, "right bound pair wrong");
    c.require(cb && cb->k_star == 2 && cb->bound == 4, "contact bound pair wrong");
}

// 4. Random finite-tau germs in 2 and 3 variables over Q, F2, F5, F32003:
// the minimal k values sit under the coarse tau/mu bounds, the contained
// m-power scan is monotone, and the k-ideal families nest.
void crit_min_k_under_bounds(Checker& c) {
    testutil::Engine gen(8152026);
    int germs = 0;
    for (std::uint32_t p : {0u, 2u, 5u, 32003u}) {
        RingPtr r2 = testutil::ring2(p, 16);
        RingPtr r3 = testutil::ring3(p, 12);
        for (int trial = 0; trial < 35 && germs < 60; ++trial) {
            bool three = trial % 3 == 2;
            RingPtr r = three ? r3 : r2;
            Polynomial f = testutil::random_finite_tau_germ(gen, r, three ? 3 : 5);

            CorollaryBounds cor = corollary_bounds(f);
            std::optional<std::uint32_t> kc = min_k_contact(f);
            if (!kc || !cor.contact) continue; // no certificate below the cap
            ++germs;
            c.require(*kc >= 2, "min contact k below 2");
            c.require(static_cast<std::int64_t>(*kc) <= *cor.contact,
                      "min contact k above the tau bound");
            std::optional<std::uint32_t> kr = min_k_right(f);
            if (kr && cor.right) {
                c.require(static_cast<std::int64_t>(*kr) <= *cor.right,
                          "min right k above the mu bound");
            }

            // containment of an m-power is monotone above the first hit
            StdBasis ct = std_basis(contact_test_ideal(f));
            std::optional<std::uint32_t> n0 = min_m_power(ct);
            if (n0) {
                if (*n0 > 0)
                    c.require(!contains_m_power(ct, *n0 - 1), "m-power scan not minimal");
                for (std::uint32_t n = *n0;
                     n <= std::min(*n0 + 2, r->degree_cap()); ++n) {
                    c.require(contains_m_power(ct, n), "m-power containment not monotone");
                }
            }

            // the k-th tjurina ideals nest, so their colengths cannot drop
            std::optional<std::uint64_t> prev;
            for (std::uint32_t k = 0; k <= 2; ++k) {
                ColengthResult len = colength(tjurina_k_ideal(f, k));
                if (!len) break; // pure-power certificate left the cap
                if (prev) c.require(*len >= *prev, "k-ideal colengths drop");
                prev = len;
            }
            // generator-level nesting one step down the milnor family
            StdBasis mk = std_basis(milnor_k_ideal(f, 1));
            Ideal next = milnor_k_ideal(f, 2);
            for (const Polynomial& h : next.gens()) {
                c.require(is_member(h, mk), "milnor k-family fails to nest");
            }
        }
    }
    c.require(germs >= 50, "fewer than 50 germs certified (got " +
                               std::to_string(germs) + ")");
}

// 5. Random ideals against the exact truncated row reduction: membership at
// the cap, colength through the m-power certificate, and the minimal
// contained m-power all agree.
void crit_oracle_agreement(Checker& c) {
    testutil::Engine gen(5082026);
    int ideals = 0;
    int finite_seen = 0;
    for (std::uint32_t p : {0u, 2u, 5u, 32003u}) {
        RingPtr r2 = testutil::ring2(p, 8);
        RingPtr r3 = testutil::ring3(p, 8);
        for (int trial = 0; trial < 26; ++trial) {
            RingPtr r = trial % 3 == 2 ? r3 : r2;
            std::vector<Polynomial> gens;
            int ng = 1 + static_cast<int>(testutil::pick(gen, 0, 2));
            for (int i = 0; i < ng; ++i)
                gens.push_back(testutil::random_polynomial(gen, r, 1, 5, 3));
            Ideal ideal(r, gens);
            StdBasis sb = std_basis(ideal);
            ++ideals;

            c.require(min_m_power(sb) == oracle_min_m_power(ideal, 8),
                      "minimal m-power disagrees");

            ColengthResult len = colength(sb);
            if (min_m_power(sb)) {
                c.require(oracle_colength(ideal, 8) == len, "colength disagrees");
                ++finite_seen;
            } else {
                c.require(!oracle_colength(ideal, 8).has_value(),
                          "truncated quotient stabilized without a certificate");
            }

            for (int i = 0; i < 4; ++i) {
                Polynomial h = testutil::random_polynomial(gen, r, 0, 8, 4, true);
                c.require(is_member(h, sb) == oracle_member(h, ideal, 8),
                          "membership disagrees");
            }
            Polynomial combo(r);
            for (const Polynomial& g : gens)
                combo = combo + g * testutil::random_polynomial(gen, r, 0, 3, 2, true);
            c.require(is_member(combo, sb), "constructed member rejected");
            c.require(oracle_member(combo, ideal, 8),
                      "constructed member rejected by row reduction");
        }
    }
    c.require(ideals >= 100, "fewer than 100 ideals sampled");
    c.require(finite_seen >= 20, "finite branch undersampled");
}

// 6. Adding anything of order above the right determinacy bound changes no
// invariant and the comparison certifies equivalence by that bound.
void crit_perturbation_stability(Checker& c) {
    testutil::Engine gen(62026);
    int germs = 0;
    for (std::uint32_t p : {0u, 5u, 32003u}) {
        RingPtr r = testutil::ring2(p, 24);
        for (int trial = 0; trial < 16 && germs < 21; ++trial) {
            Polynomial f = testutil::random_finite_tau_germ(gen, r, 4);
            auto rb = right_determinacy_bound(f);
            if (!rb || rb->bound + 2 > r->degree_cap()) continue;
            ++germs;

            ColengthResult mu_f = milnor_number(f);
            ColengthResult tau_f = tjurina_number(f);
            std::vector<std::uint64_t> hf_f = hilbert_function(tjurina_ideal(f));
            std::optional<std::uint32_t> sp_f = ideal_order(jacobian_ideal(f));

            for (int j = 0; j < 5; ++j) {
                Polynomial h = testutil::random_polynomial(gen, r, rb->bound + 1,
                                                           rb->bound + 2, 3);
                Polynomial g = f + h;
                c.require(g.order() == f.order(), "order moved");
                c.require(milnor_number(g) == mu_f, "mu moved");
                c.require(tjurina_number(g) == tau_f, "tau moved");
                c.require(ideal_order(jacobian_ideal(g)) == sp_f, "s' moved");
                c.require(hilbert_function(tjurina_ideal(g)) == hf_f,
                          "tjurina hilbert function moved");

                EquivalenceVerdict v = right_compare(f, g);
                c.require(v.kind == VerdictKind::Equivalent, "right verdict not Equivalent");
                c.require(v.certificate == CertificateKind::DeterminacyPerturbation,
                          "certificate is not the determinacy bound");
                c.require(replay_verdict(v, f, g), "certificate does not replay");

                EquivalenceVerdict w = contact_compare(f, g);
                c.require(w.kind == VerdictKind::Equivalent,
                          "contact verdict not Equivalent");
            }
        }
    }
    c.require(germs >= 20, "fewer than 20 germs perturbed (got " +
                               std::to_string(germs) + ")");
}

// 7. Metamorphic: g = u * f(phi) is contact equivalent by construction and
// f(phi) right equivalent; neither may ever be refuted.
void crit_never_refute_images(Checker& c) {
    testutil::Engine gen(72026);
    int contact_runs = 0, right_runs = 0;
    for (int attempt = 0; attempt < 120; ++attempt) {
        if (contact_runs >= 30 && right_runs >= 25) break;
        std::uint32_t p = std::vector<std::uint32_t>{0u, 5u, 32003u}[attempt % 3];
        RingPtr r = testutil::ring2(p, 14);
        Polynomial f = testutil::random_finite_tau_germ(gen, r, 4);
        std::vector<Polynomial> phi = testutil::random_automorphism(gen, r, 2);
        Polynomial composed = f.substitute(phi);
        if (composed.is_zero() || *composed.order() < 2) continue;

        Polynomial u = testutil::random_unit(gen, r, 2);
        try {
            EquivalenceVerdict vc = contact_compare(f, u * composed);
            c.require(vc.kind != VerdictKind::NotEquivalent,
                      "contact image refuted");
            ++contact_runs;
        } catch (const DegreeCapError&) {
            // the needed k left the cap; no verdict to audit
        }
        if (milnor_number(f).has_value()) {
            try {
                EquivalenceVerdict vr = right_compare(f, composed);
                c.require(vr.kind != VerdictKind::NotEquivalent,
                          "right image refuted");
                ++right_runs;
            } catch (const DegreeCapError&) {
            }
        }
    }
    c.require(contact_runs + right_runs >= 50,
              "fewer than 50 completed comparisons (got " +
                  std::to_string(contact_runs + right_runs) + ")");
    c.require(contact_runs >= 20, "contact side undersampled");
    c.require(right_runs >= 20, "right side undersampled");
}

// 8. Parser round-trips are byte-stable and the frozen CLI reports
// reproduce byte for byte, twice in a row.
void crit_byte_stability(Checker& c) {
    testutil::Engine gen(82026);
    int trips = 0;
    for (std::uint32_t p : {0u, 2u, 5u, 32003u}) {
        for (bool three : {false, true}) {
            RingPtr r = three ? testutil::ring3(p, 12) : testutil::ring2(p, 16);
            for (int i = 0; i < 125; ++i) {
                Polynomial f =
                    testutil::random_polynomial(gen, r, 0, 8, 6, /*allow_zero=*/i % 8 == 0);
                std::string text = print_polynomial(f);
                Polynomial back = parse_polynomial(text, r);
                c.require(back == f, "round-trip changed the polynomial: " + text);
                c.require(print_polynomial(back) == text,
                          "round-trip changed the bytes: " + text);
                ++trips;
            }
        }
    }
    c.require(trips >= 1000, "fewer than 1000 round-trips");

    struct Golden {
        const char* file;
        const char* args;
    };
    for (const Golden& g : {
             Golden{"analyze_cusp_q.json", "analyze \"x^2+y^3\" --char 0 --vars x,y --format json"},
             Golden{"analyze_sextic_f5.json",
                    "analyze \"x^6+y^6\" --char 5 --vars x,y --format json"},
             Golden{"analyze_char2.json",
                    "analyze \"y^2+x^3*y\" --char 2 --vars x,y --format json"},
             Golden{"compare_right_f5.json",
                    "compare --mode right \"x^6+y^6\" \"x^6+y^6+x^5\" --char 5 --vars x,y "
                    "--format json"},
             Golden{"compare_contact_char2.json",
                    "compare --mode contact \"y^2+x^3*y\" \"y^2+x^3*y+x^5\" --char 2 --vars x,y "
                    "--format json"},
             Golden{"nf_local_unit.json",
                    "nf \"x\" --gens \"x-x^2\" --char 0 --vars x,y --format json"},
         }) {
        std::string want = slurp(std::string(GERM_GOLDEN_DIR) + "/" + g.file);
        c.require(!want.empty(), std::string("golden file missing: ") + g.file);
        auto [code1, out1] = run_cli(g.args);
        auto [code2, out2] = run_cli(g.args);
        c.require(code1 == 0 && code2 == 0, std::string("CLI failed on ") + g.file);
        c.require(out1 == want, std::string("output drifted from ") + g.file);
        c.require(out1 == out2, std::string("repeated run differs for ") + g.file);
    }
}

struct Criterion {
    const char* label;
    void (*run)(Checker&);
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"char-5 sextic pair: equal ideals and numbers, no equivalence claim",
         crit_equal_data_no_claim},
        {"char-2 germ: finite tau beside infinite mu, stable low k-ideals",
         crit_char2_mixed_finiteness},
        {"cusp benchmark: every reported value exact", crit_cusp_benchmark},
        {"random finite-tau germs: minimal k under the coarse bounds, nested k-families",
         crit_min_k_under_bounds},
        {"random ideals: engine agrees with exact truncated row reduction",
         crit_oracle_agreement},
        {"perturbations above the determinacy bound change nothing",
         crit_perturbation_stability},
        {"unit and coordinate-change images are never refuted",
         crit_never_refute_images},
        {"parser round-trips byte-stable, golden CLI reports frozen",
         crit_byte_stability},
    };

    int failures = 0;
    int num = 0;
    for (const Criterion& crit : criteria) {
        ++num;
        Checker c;
        std::string detail;
        try {
            crit.run(c);
            detail = c.first_failure;
        } catch (const std::exception& e) {
            c.ok = false;
            detail = std::string("unexpected exception: ") + e.what();
        }
        std::printf("[%s] %d: %s%s%s (%d checks)\n", c.ok ? "PASS" : "FAIL", num,
                    crit.label, c.ok ? "" : " -- ", c.ok ? "" : detail.c_str(),
                    c.checked);
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %d criteria passed\n",
                    static_cast<int>(std::size(criteria)));
    } else {
        std::printf("acceptance: %d of %d criteria failed\n", failures,
                    static_cast<int>(std::size(criteria)));
    }
    return failures == 0 ? 0 : 1;
}
