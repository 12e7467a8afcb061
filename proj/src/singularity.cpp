#include "germ/singularity.hpp"

#include <algorithm>

#include "germ/error.hpp"

namespace germ {

namespace {

const char* kClosedFieldNote =
    "determinacy and min-k certificates are valid over the coefficient field as given; "
    "the backing theorems are stated for an algebraically closed field";
const char* kSufficientKNote =
    "min_k values are sufficient for the isomorphism-implies-equivalence criterion, "
    "not proven minimal";

void require_determinacy_input(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("determinacy bound of the zero germ");
    if (*f.order() < 2) {
        throw OrderTooSmallError("determinacy bounds assume f in m^2 (ord >= 2)");
    }
}

std::optional<DeterminacyBound> determinacy_bound_from(const Polynomial& f,
                                                       const Ideal& test_ideal) {
    auto n = min_m_power(std_basis(test_ideal));
    if (!n) return std::nullopt;
    // ord of the test ideal is at least s+1, so n >= s+1 >= 3
    std::uint32_t k_star = *n - 2;
    std::uint32_t s = *f.order();
    return DeterminacyBound{k_star, 2 * k_star - s + 2};
}

} // namespace

std::int64_t ReportField::value() const {
    if (kind_ != Kind::Value) throw Error("report field has no finite value");
    return value_;
}

Ideal jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < f.ring()->num_vars(); ++i) {
        gens.push_back(f.derivative(i));
    }
    return Ideal(f.ring(), std::move(gens));
}

Ideal contact_test_ideal(const Polynomial& f) {
    Ideal part1 = ideal_product(m_power(f.ring(), 1), Ideal(f.ring(), {f}));
    Ideal part2 = ideal_product(m_power(f.ring(), 2), jacobian_ideal(f));
    return ideal_sum(part1, part2);
}

Ideal right_test_ideal(const Polynomial& f) {
    return ideal_product(m_power(f.ring(), 2), jacobian_ideal(f));
}

Ideal tjurina_ideal(const Polynomial& f) {
    return ideal_sum(Ideal(f.ring(), {f}), jacobian_ideal(f));
}

Ideal milnor_k_ideal(const Polynomial& f, std::uint32_t k) {
    if (k > f.ring()->degree_cap()) {
        throw DegreeCapError("k-th Milnor ideal beyond the degree cap");
    }
    return ideal_product(m_power(f.ring(), k), jacobian_ideal(f));
}

Ideal tjurina_k_ideal(const Polynomial& f, std::uint32_t k) {
    if (k > f.ring()->degree_cap()) {
        throw DegreeCapError("k-th Tjurina ideal beyond the degree cap");
    }
    return ideal_sum(Ideal(f.ring(), {f}), milnor_k_ideal(f, k));
}

ColengthResult milnor_number(const Polynomial& f) {
    return colength(jacobian_ideal(f));
}

ColengthResult tjurina_number(const Polynomial& f) {
    return colength(tjurina_ideal(f));
}

std::optional<DeterminacyBound> right_determinacy_bound(const Polynomial& f) {
    require_determinacy_input(f);
    return determinacy_bound_from(f, right_test_ideal(f));
}

std::optional<DeterminacyBound> contact_determinacy_bound(const Polynomial& f) {
    require_determinacy_input(f);
    return determinacy_bound_from(f, contact_test_ideal(f));
}

std::optional<std::uint32_t> min_k_contact(const Polynomial& f) {
    require_determinacy_input(f);
    auto n_star = min_m_power(std_basis(contact_test_ideal(f)));
    if (!n_star) return std::nullopt;
    std::int64_t k = 2 * static_cast<std::int64_t>(*n_star) - 2 * static_cast<std::int64_t>(*f.order());
    return static_cast<std::uint32_t>(std::max<std::int64_t>(k, 0));
}

std::optional<std::uint32_t> min_k_right(const Polynomial& f) {
    require_determinacy_input(f);
    Ideal j = jacobian_ideal(f);
    auto s_prime = ideal_order(j);
    if (!s_prime) return std::nullopt; // j(f) = 0, mu infinite
    auto n_prime = min_m_power(std_basis(ideal_product(m_power(f.ring(), 2), j)));
    if (!n_prime) return std::nullopt;
    std::int64_t k = 2 * static_cast<std::int64_t>(*n_prime) -
                     static_cast<std::int64_t>(*f.order()) -
                     static_cast<std::int64_t>(*s_prime) - 1;
    return static_cast<std::uint32_t>(std::max<std::int64_t>(k, 0));
}

CorollaryBounds corollary_bounds(const Polynomial& f) {
    CorollaryBounds out;
    if (f.is_zero()) return out; // tau, mu infinite: both unknown
    std::int64_t s = *f.order();
    Ideal j = jacobian_ideal(f);
    auto tau = colength(tjurina_ideal(f));
    if (tau) out.contact = 2 * static_cast<std::int64_t>(*tau) - 2 * s + 4;
    auto mu = colength(j);
    if (mu) {
        std::int64_t s_prime = *ideal_order(j); // mu finite forces j nonzero
        out.right = 2 * static_cast<std::int64_t>(*mu) - s - s_prime + 3;
    }
    return out;
}

SingularityReport analyze(const Polynomial& f) {
    SingularityReport report(f);
    report.notes.push_back(kClosedFieldNote);

    if (f.is_zero()) {
        const char* reason = "f = 0: every invariant of the zero germ is degenerate";
        report.s = ReportField::unknown(reason);
        report.s_prime = ReportField::infinite(); // j(0) = 0
        report.mu = ReportField::infinite();
        report.tau = ReportField::infinite();
        for (ReportField* field : {&report.right_det, &report.contact_det, &report.min_k_right,
                                   &report.min_k_contact, &report.cor_bound_right,
                                   &report.cor_bound_contact}) {
            *field = ReportField::unknown(reason);
        }
        return report;
    }

    const std::uint32_t s = *f.order();
    report.s = ReportField::value(s);

    Ideal j = jacobian_ideal(f);
    StdBasis j_basis = std_basis(j);
    auto s_prime = ideal_order(j);
    report.s_prime = s_prime ? ReportField::value(*s_prime) : ReportField::infinite();
    auto mu = colength(j_basis);
    report.mu = mu ? ReportField::value(static_cast<std::int64_t>(*mu))
                   : ReportField::infinite();

    StdBasis tj_basis = std_basis(tjurina_ideal(f));
    auto tau = colength(tj_basis);
    report.tau = tau ? ReportField::value(static_cast<std::int64_t>(*tau))
                     : ReportField::infinite();
    if (tau) report.hf_tjurina = hilbert_function(tj_basis);

    std::string gate;
    if (s >= f.ring()->degree_cap()) {
        gate = "ord(f) reaches the degree cap; determinacy data would be a truncation artifact";
    } else if (s < 2) {
        gate = "ord(f) < 2: f is a unit or smooth germ, outside the determinacy theorems";
    }
    if (!gate.empty()) {
        for (ReportField* field : {&report.right_det, &report.contact_det, &report.min_k_right,
                                   &report.min_k_contact, &report.cor_bound_right,
                                   &report.cor_bound_contact}) {
            *field = ReportField::unknown(gate);
        }
        return report;
    }
    report.notes.push_back(kSufficientKNote);

    const char* cap_reason = "no m-power containment below the degree cap; raise the cap";
    if (!tau) {
        const char* reason = "tau infinite: the contact containment hypothesis never holds";
        report.contact_det = ReportField::unknown(reason);
        report.min_k_contact = ReportField::unknown(reason);
        report.cor_bound_contact = ReportField::unknown(reason);
    } else {
        auto n_star = min_m_power(std_basis(contact_test_ideal(f)));
        if (n_star) {
            report.contact_det = ReportField::value(2 * static_cast<std::int64_t>(*n_star - 2) -
                                                    static_cast<std::int64_t>(s) + 2);
            report.min_k_contact = ReportField::value(
                std::max<std::int64_t>(2 * static_cast<std::int64_t>(*n_star) - 2 * s, 0));
        } else {
            report.contact_det = ReportField::unknown(cap_reason);
            report.min_k_contact = ReportField::unknown(cap_reason);
        }
        report.cor_bound_contact =
            ReportField::value(2 * static_cast<std::int64_t>(*tau) - 2 * (std::int64_t)s + 4);
    }

    if (!mu) {
        const char* reason = "mu infinite: the right containment hypothesis never holds";
        report.right_det = ReportField::unknown(reason);
        report.min_k_right = ReportField::unknown(reason);
        report.cor_bound_right = ReportField::unknown(reason);
    } else {
        auto n_prime = min_m_power(std_basis(right_test_ideal(f)));
        if (n_prime) {
            report.right_det = ReportField::value(2 * static_cast<std::int64_t>(*n_prime - 2) -
                                                  static_cast<std::int64_t>(s) + 2);
            report.min_k_right = ReportField::value(std::max<std::int64_t>(
                2 * static_cast<std::int64_t>(*n_prime) - static_cast<std::int64_t>(s) -
                    static_cast<std::int64_t>(*s_prime) - 1,
                0));
        } else {
            report.right_det = ReportField::unknown(cap_reason);
            report.min_k_right = ReportField::unknown(cap_reason);
        }
        report.cor_bound_right =
            ReportField::value(2 * static_cast<std::int64_t>(*mu) - (std::int64_t)s -
                               static_cast<std::int64_t>(*s_prime) + 3);
    }
    return report;
}

} // namespace germ
