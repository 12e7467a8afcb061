#include "germ/crosscheck.hpp"

#include <algorithm>

#include "germ/localalg.hpp"

namespace germ {

void CrossCheckLog::record(std::string check, bool ok, std::string detail) {
    agreement = agreement && ok;
    entries.push_back({std::move(check), ok, std::move(detail)});
}

void CrossCheckLog::skip(std::string check, std::string why) {
    entries.push_back({std::move(check), std::nullopt, std::move(why)});
}

namespace {

// Size budget: the oracle refuses truncation degrees whose monomial count
// would make exact row reduction crawl. Checks that need more depth are
// skipped, never silently passed.
constexpr std::uint64_t kMaxOracleMonomials = 800;
// Depth used to corroborate "infinite" / "not found" engine answers.
constexpr std::uint32_t kProbeDepth = 10;

std::uint64_t monomials_up_to(std::size_t nvars, std::uint32_t d) {
    std::uint64_t count = 1; // C(d + n, n), built factor by factor
    for (std::size_t i = 1; i <= nvars; ++i) {
        count = count * (d + i) / i;
        if (count > (std::uint64_t{1} << 40)) {
            return count;
        }
    }
    return count;
}

Polynomial truncate_to(const Polynomial& f, std::uint32_t d) {
    std::vector<Term> kept;
    for (const auto& t : f.terms()) {
        if (t.mono.degree() <= d) {
            kept.push_back(t);
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(kept));
}

std::uint32_t probe_depth(const RingPtr& ring) {
    return std::min(kProbeDepth, oracle_depth_limit(ring));
}

// Same row space modulo m^{d+1}: equal ranks plus mutual generator
// membership (the spans are closed under monomial multiplication up to d).
bool span_equal_at(const Ideal& I, const Ideal& J, std::uint32_t d) {
    TruncatedSpace a(I, d);
    TruncatedSpace b(J, d);
    if (a.rank() != b.rank()) {
        return false;
    }
    for (const auto& g : J.gens()) {
        if (!a.in_span(truncate_to(g, d))) return false;
    }
    for (const auto& g : I.gens()) {
        if (!b.in_span(truncate_to(g, d))) return false;
    }
    return true;
}

void check_colength(CrossCheckLog& log, const std::string& name, const Ideal& I,
                    const ColengthResult& engine) {
    std::uint32_t limit = oracle_depth_limit(I.ring());
    if (engine.has_value()) {
        auto n0 = min_m_power(I);
        if (!n0) {
            log.skip(name, "finite engine count without an m-power certificate at or below "
                           "the cap; no sound oracle depth exists");
            return;
        }
        std::uint32_t d = std::max<std::uint32_t>(*n0, 2);
        if (d > limit) {
            log.skip(name, "sound oracle depth " + std::to_string(d) +
                               " is beyond the size budget");
            return;
        }
        auto got = oracle_colength(I, d);
        log.record(name, got.has_value() && *got == *engine,
                   "oracle " + (got ? std::to_string(*got) : std::string("(no stabilization)")) +
                       " vs engine " + std::to_string(*engine) + " at depth " +
                       std::to_string(d));
    } else {
        std::uint32_t d = probe_depth(I.ring());
        if (d < 2) {
            log.skip(name, "no tractable probe depth");
            return;
        }
        auto got = oracle_colength(I, d);
        log.record(name, !got.has_value(),
                   got ? "oracle stabilized at " + std::to_string(*got) +
                             " against an infinite engine count"
                       : "no stabilization through depth " + std::to_string(d) +
                             ", consistent with infinity");
    }
}

void check_minpow(CrossCheckLog& log, const std::string& name, const Ideal& I,
                  const std::optional<std::uint32_t>& engine) {
    std::uint32_t limit = oracle_depth_limit(I.ring());
    if (engine.has_value()) {
        std::uint32_t d = std::max<std::uint32_t>(*engine, 1);
        if (d > limit) {
            log.skip(name, "sound oracle depth " + std::to_string(d) +
                               " is beyond the size budget");
            return;
        }
        auto got = oracle_min_m_power(I, d);
        log.record(name, got.has_value() && *got == *engine,
                   "oracle scan to depth " + std::to_string(d) + " gives " +
                       (got ? "m^" + std::to_string(*got) : std::string("nothing")) +
                       " vs engine m^" + std::to_string(*engine));
    } else {
        std::uint32_t d = probe_depth(I.ring());
        if (d < 1) {
            log.skip(name, "no tractable probe depth");
            return;
        }
        auto got = oracle_min_m_power(I, d);
        log.record(name, !got.has_value(),
                   got ? "oracle found m^" + std::to_string(*got) +
                             " inside the ideal against an engine not-found"
                       : "no m-power containment through depth " + std::to_string(d) +
                             ", consistent with not-found");
    }
}

void check_hilbert(CrossCheckLog& log, const std::string& name, const Ideal& I,
                   const std::vector<std::uint64_t>& engine_hf) {
    std::uint32_t top = static_cast<std::uint32_t>(engine_hf.size());
    if (top > oracle_depth_limit(I.ring())) {
        log.skip(name, "depth " + std::to_string(top) + " is beyond the size budget");
        return;
    }
    // HF(d) = dim K[x]/(I + m^{d+1}) - dim K[x]/(I + m^d), exact at every d.
    std::vector<std::uint64_t> got;
    std::uint64_t prev = 0;
    std::uint64_t beyond = 0;
    for (std::uint32_t d = 0; d <= top; ++d) {
        std::uint64_t q = TruncatedSpace(I, d).quotient_dim();
        if (d < top) {
            got.push_back(q - prev);
        } else {
            beyond = q - prev; // must vanish: a local Hilbert function has no gaps
        }
        prev = q;
    }
    log.record(name, got == engine_hf && beyond == 0,
               "degreewise quotient dimensions to depth " + std::to_string(top));
}

// h in I, claimed by the engine as `engine_member` modulo m^{cap+1}. A
// positive claim is conclusive once the depth passes an m-power certificate
// of I; a negative claim is confirmed by any depth that shows the miss.
void check_membership(CrossCheckLog& log, const std::string& name, const Polynomial& h,
                      const Ideal& I, bool engine_member) {
    std::uint32_t limit = oracle_depth_limit(I.ring());
    if (limit == 0) {
        log.skip(name, "no tractable depth");
        return;
    }
    if (engine_member) {
        auto n = min_m_power(I);
        bool conclusive = n.has_value() && *n <= limit;
        std::uint32_t d = conclusive ? std::max<std::uint32_t>(*n, 1) : probe_depth(I.ring());
        if (d == 0) {
            log.skip(name, "no tractable depth");
            return;
        }
        bool ok = oracle_member(truncate_to(h, d), I, d);
        log.record(name, ok,
                   std::string(conclusive ? "conclusive" : "necessary-condition check") +
                       " at depth " + std::to_string(d));
        return;
    }
    std::uint32_t d = probe_depth(I.ring());
    while (d >= 1) {
        if (!oracle_member(truncate_to(h, d), I, d)) {
            log.record(name, true,
                       "non-membership visible modulo m^" + std::to_string(d + 1));
            return;
        }
        if (d == limit) break;
        d = std::min(d * 2, limit);
    }
    log.skip(name, "non-membership not visible at any tractable depth");
}

void check_ideal_equality(CrossCheckLog& log, const std::string& name, const Ideal& I,
                          const Ideal& J, bool engine_equal) {
    std::uint32_t limit = oracle_depth_limit(I.ring());
    if (limit == 0) {
        log.skip(name, "no tractable depth");
        return;
    }
    if (engine_equal) {
        // past the larger m-power certificate the truncated spans pin the
        // ideals themselves
        auto ni = min_m_power(I);
        auto nj = min_m_power(J);
        bool conclusive = ni && nj && std::max(*ni, *nj) <= limit;
        std::uint32_t d =
            conclusive ? std::max({*ni, *nj, std::uint32_t{1}}) : probe_depth(I.ring());
        if (d == 0) {
            log.skip(name, "no tractable depth");
            return;
        }
        log.record(name, span_equal_at(I, J, d),
                   std::string(conclusive ? "conclusive" : "necessary-condition check") +
                       " at depth " + std::to_string(d));
        return;
    }
    // a mismatch modulo any m-power certifies the ideals differ
    std::uint32_t d = probe_depth(I.ring());
    while (d >= 1) {
        if (!span_equal_at(I, J, d)) {
            log.record(name, true, "ideals differ modulo m^" + std::to_string(d + 1));
            return;
        }
        if (d == limit) break;
        d = std::min(d * 2, limit);
    }
    log.skip(name, "difference not visible at any tractable depth");
}

void check_field_colength(CrossCheckLog& log, const std::string& name, const Ideal& I,
                          const ReportField& field) {
    if (field.has_value()) {
        check_colength(log, name, I, ColengthResult(static_cast<std::uint64_t>(field.value())));
    } else if (field.is_infinite()) {
        check_colength(log, name, I, ColengthResult(std::nullopt));
    } else {
        log.skip(name, field.reason());
    }
}

} // namespace

std::uint32_t oracle_depth_limit(const RingPtr& ring) {
    std::uint32_t d = 0;
    while (d < ring->degree_cap() &&
           monomials_up_to(ring->num_vars(), d + 1) <= kMaxOracleMonomials) {
        ++d;
    }
    return d;
}

CrossCheckLog crosscheck_report(const SingularityReport& report) {
    CrossCheckLog log;
    const Polynomial& f = report.f;
    if (f.is_zero()) {
        log.skip("report", "degenerate report for the zero germ");
        return log;
    }

    if (report.s.has_value()) {
        log.record("s", static_cast<std::int64_t>(*f.order()) == report.s.value(),
                   "direct order recomputation");
    } else {
        log.skip("s", report.s.reason());
    }

    Ideal j = jacobian_ideal(f);
    if (report.s_prime.has_value()) {
        auto ord = ideal_order(j);
        log.record("s_prime",
                   ord.has_value() && static_cast<std::int64_t>(*ord) == report.s_prime.value(),
                   "minimum generator order of j(f)");
    } else if (report.s_prime.is_infinite()) {
        log.record("s_prime", j.is_zero(), "j(f) must be the zero ideal");
    } else {
        log.skip("s_prime", report.s_prime.reason());
    }

    check_field_colength(log, "mu", j, report.mu);
    Ideal tj = tjurina_ideal(f);
    check_field_colength(log, "tau", tj, report.tau);
    if (report.hf_tjurina.has_value()) {
        check_hilbert(log, "hf_tjurina", tj, *report.hf_tjurina);
    }

    if (!report.s.has_value() || report.s.value() < 2) {
        log.skip("determinacy_scans", "determinacy fields are not defined for this germ");
        return log;
    }
    std::int64_t s = report.s.value();

    {
        Ideal test = contact_test_ideal(f);
        auto n_star = min_m_power(test);
        check_minpow(log, "contact_test_scan", test, n_star);
        if (report.contact_det.has_value() || report.min_k_contact.has_value()) {
            bool forms = n_star.has_value();
            if (forms) {
                std::int64_t n = *n_star;
                if (report.contact_det.has_value()) {
                    forms = forms && report.contact_det.value() == 2 * (n - 2) - s + 2;
                }
                if (report.min_k_contact.has_value()) {
                    forms = forms && report.min_k_contact.value() ==
                                         std::max<std::int64_t>(0, 2 * n - 2 * s);
                }
                if (report.cor_bound_contact.has_value() && report.tau.has_value()) {
                    forms = forms && report.cor_bound_contact.value() ==
                                         2 * report.tau.value() - 2 * s + 4;
                }
            }
            log.record("contact_bounds", forms, "closed forms re-derived from the scan");
        }
    }
    {
        Ideal test = right_test_ideal(f);
        auto n_prime = min_m_power(test);
        check_minpow(log, "right_test_scan", test, n_prime);
        if (report.right_det.has_value() || report.min_k_right.has_value()) {
            bool forms = n_prime.has_value() && report.s_prime.has_value();
            if (forms) {
                std::int64_t n = *n_prime;
                std::int64_t sp = report.s_prime.value();
                if (report.right_det.has_value()) {
                    forms = forms && report.right_det.value() == 2 * (n - 2) - s + 2;
                }
                if (report.min_k_right.has_value()) {
                    forms = forms && report.min_k_right.value() ==
                                         std::max<std::int64_t>(0, 2 * n - s - sp - 1);
                }
                if (report.cor_bound_right.has_value() && report.mu.has_value()) {
                    forms = forms && report.cor_bound_right.value() ==
                                         2 * report.mu.value() - s - sp + 3;
                }
            }
            log.record("right_bounds", forms, "closed forms re-derived from the scan");
        }
    }
    return log;
}

CrossCheckLog crosscheck_verdict(const EquivalenceVerdict& verdict, const Polynomial& f,
                                 const Polynomial& g) {
    CrossCheckLog log;
    const bool contact = verdict.mode == CompareMode::Contact;
    auto k_ideal = [&](const Polynomial& h, std::uint32_t k) {
        return contact ? tjurina_k_ideal(h, k) : milnor_k_ideal(h, k);
    };
    auto ord_of = [](const std::optional<std::uint32_t>& o) {
        return o ? static_cast<std::int64_t>(*o) : std::int64_t{-1};
    };

    for (const auto& item : verdict.evidence) {
        if (item.check == "determinacy_perturbation") {
            auto det = contact ? contact_determinacy_bound(f) : right_determinacy_bound(f);
            auto diff_ord = (g - f).order();
            bool fired = det.has_value() && (!diff_ord || *diff_ord > det->bound);
            log.record("determinacy_perturbation", fired == item.ok,
                       "bound and difference order recomputed");
            Ideal test = contact ? contact_test_ideal(f) : right_test_ideal(f);
            check_minpow(log, "determinacy_scan", test, min_m_power(test));
        } else if (item.check == "k_ideal_equality" && item.k) {
            std::string name = "k_ideal_equality(k=" + std::to_string(*item.k) + ")";
            check_ideal_equality(log, name, k_ideal(f, *item.k), k_ideal(g, *item.k), item.ok);
        } else if (item.check == "difference_membership" && item.k) {
            std::string name = "difference_membership(k=" + std::to_string(*item.k) + ")";
            check_membership(log, name, f - g, k_ideal(f, *item.k), item.ok);
        } else if (item.check == "invariant_s") {
            log.record("invariant_s", (ord_of(f.order()) == ord_of(g.order())) == item.ok,
                       "orders recomputed");
        } else if (item.check == "invariant_s_prime") {
            bool equal = ord_of(ideal_order(jacobian_ideal(f))) ==
                         ord_of(ideal_order(jacobian_ideal(g)));
            log.record("invariant_s_prime", equal == item.ok, "jacobian orders recomputed");
        } else if (item.check == "invariant_tau" || item.check == "invariant_mu") {
            Ideal lhs = contact ? tjurina_ideal(f) : jacobian_ideal(f);
            Ideal rhs = contact ? tjurina_ideal(g) : jacobian_ideal(g);
            ColengthResult cf = colength(lhs);
            ColengthResult cg = colength(rhs);
            log.record(item.check + " replay", (cf == cg) == item.ok,
                       "engine colengths recomputed");
            check_colength(log, item.check + "(f)", lhs, cf);
            check_colength(log, item.check + "(g)", rhs, cg);
        } else if (item.check.rfind("invariant_hilbert_", 0) == 0 && item.k) {
            Ideal lhs = k_ideal(f, *item.k);
            Ideal rhs = k_ideal(g, *item.k);
            std::vector<std::uint64_t> hf = hilbert_function(lhs);
            std::vector<std::uint64_t> hg = hilbert_function(rhs);
            log.record(item.check + " replay", (hf == hg) == item.ok,
                       "engine Hilbert functions recomputed");
            check_hilbert(log, item.check + "(f)", lhs, hf);
            check_hilbert(log, item.check + "(g)", rhs, hg);
        }
    }
    return log;
}

CrossCheckLog crosscheck_nf(const Polynomial& f, const std::vector<Polynomial>& gens,
                            const MoraResult& result) {
    CrossCheckLog log;
    Polynomial acc = result.unit * f - result.remainder;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        acc = acc - result.cofactors[i] * gens[i];
    }
    log.record("division_identity", acc.is_zero(),
               "unit*f - sum cofactor_i*gen_i - remainder vanishes modulo m^(cap+1)");
    if (result.remainder.is_zero()) {
        check_membership(log, "membership", f, Ideal(f.ring(), gens), true);
    } else {
        log.skip("membership", "a nonzero weak normal form against arbitrary generators "
                               "is not a non-membership certificate");
    }
    return log;
}

CrossCheckLog crosscheck_std(const Ideal& source, const StdBasis& basis) {
    CrossCheckLog log;
    if (basis.is_zero_ideal()) {
        log.record("span_equality", source.is_zero(), "zero ideal");
        return log;
    }
    std::uint32_t d = probe_depth(source.ring());
    if (d == 0) {
        log.skip("span_equality", "no tractable depth");
    } else {
        Ideal from_basis(source.ring(), basis.elements());
        log.record("span_equality", span_equal_at(source, from_basis, d),
                   "generators and basis elements span the same subspace modulo m^" +
                       std::to_string(d + 1));
    }
    check_colength(log, "colength", source, colength(basis));
    return log;
}

CrossCheckLog crosscheck_dim(const Ideal& source, const ColengthResult& engine) {
    CrossCheckLog log;
    check_colength(log, "colength", source, engine);
    return log;
}

CrossCheckLog crosscheck_hilbert(const Ideal& source, const std::vector<std::uint64_t>& engine_hf) {
    CrossCheckLog log;
    check_hilbert(log, "hilbert_function", source, engine_hf);
    return log;
}

CrossCheckLog crosscheck_minpow(const Ideal& source, const std::optional<std::uint32_t>& engine) {
    CrossCheckLog log;
    check_minpow(log, "min_m_power", source, engine);
    return log;
}

} // namespace germ
