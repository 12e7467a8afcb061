#include "germ/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "germ/error.hpp"

namespace germ {

namespace {

std::string dim_str(const ColengthResult& v) {
    return v ? std::to_string(*v) : "infinity";
}

std::string ord_str(const std::optional<std::uint32_t>& v) {
    return v ? std::to_string(*v) : "infinity";
}

std::string hf_str(const std::vector<std::uint64_t>& h) {
    std::string out = "[";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(h[i]);
    }
    return out + "]";
}

// Shared comparison driver; the two modes differ in their k-ideal family,
// determinacy bound, 'b' membership requirement and invariant list.
class Comparer {
public:
    Comparer(const Polynomial& f, const Polynomial& g, CompareMode mode)
        : f_(f), g_(g), mode_(mode) {
        require_same_ring(f.ring(), g.ring());
        if (f.is_zero() || g.is_zero()) {
            throw ZeroPolynomialError("equivalence comparison of a zero germ");
        }
        if (*f.order() < 2 || *g.order() < 2) {
            throw OrderTooSmallError("equivalence comparison assumes both germs in m^2");
        }
        verdict_.kind = VerdictKind::Inconclusive;
        verdict_.mode = mode;
        verdict_.cap = f.ring()->degree_cap();
        verdict_.characteristic = f.ring()->field().characteristic();
    }

    EquivalenceVerdict run() {
        const bool contact = mode_ == CompareMode::Contact;

        if (contact) {
            if (!tjurina_number(f_)) {
                throw NotApplicableError("tau(f) infinite: Theorem hypotheses fail");
            }
        } else if (!milnor_number(f_)) {
            throw NotApplicableError("mu(f) infinite: Theorem hypotheses fail");
        }

        // (a) perturbation beyond the determinacy bound
        auto det = contact ? contact_determinacy_bound(f_) : right_determinacy_bound(f_);
        if (!det) {
            throw DegreeCapError("determinacy scan found no m-power below the degree cap; "
                                 "raise the cap");
        }
        Polynomial diff = g_ - f_;
        auto diff_ord = diff.order();
        bool by_perturbation = !diff_ord || *diff_ord > det->bound;
        note("determinacy_perturbation", std::nullopt, by_perturbation,
             "ord(g-f) = " + ord_str(diff_ord) + ", bound = " + std::to_string(det->bound));
        if (by_perturbation) {
            verdict_.kind = VerdictKind::Equivalent;
            verdict_.certificate = CertificateKind::DeterminacyPerturbation;
            verdict_.certificate_bound = det->bound;
            return verdict_;
        }

        // (b) identity lift: literal k-ideal equality at the minimal k,
        // with k = 0, 1 recorded alongside for the audit trail
        auto min_k = contact ? min_k_contact(f_) : min_k_right(f_);
        if (!min_k) {
            throw DegreeCapError("minimal k scan found no m-power below the degree cap; "
                                 "raise the cap");
        }
        require_k(*min_k);
        std::set<std::uint32_t> ks = {0, 1, *min_k};
        std::map<std::uint32_t, std::pair<StdBasis, StdBasis>> bases;
        bool equal_at_min_k = false;
        for (std::uint32_t k : ks) {
            auto pair = bases.emplace(k, std::make_pair(std_basis(k_ideal(f_, k)),
                                                        std_basis(k_ideal(g_, k))));
            bool equal = ideal_equal(pair.first->second.first, pair.first->second.second);
            note("k_ideal_equality", k, equal, "");
            if (k == *min_k) equal_at_min_k = equal;
        }
        bool lift_ok = equal_at_min_k;
        if (!contact && equal_at_min_k) {
            // the right-mode lift additionally needs f - g inside m^k j(f)
            bool member = is_member(f_ - g_, bases.at(*min_k).first);
            note("difference_membership", *min_k, member, "f - g against m^k j(f)");
            lift_ok = member;
        }
        if (lift_ok) {
            verdict_.kind = VerdictKind::Equivalent;
            verdict_.certificate = CertificateKind::IdentityLiftIdealEquality;
            verdict_.certificate_k = *min_k;
            return verdict_;
        }

        // (c) genuine invariants; any mismatch refutes
        if (refute("s", std::nullopt, ord_str(f_.order()), ord_str(g_.order()))) return verdict_;
        if (!contact) {
            if (refute("s_prime", std::nullopt, ord_str(ideal_order(jacobian_ideal(f_))),
                       ord_str(ideal_order(jacobian_ideal(g_))))) {
                return verdict_;
            }
        }
        const auto& base0 = bases.at(0);
        ColengthResult dim_f = colength(base0.first);
        ColengthResult dim_g = colength(base0.second);
        if (refute(contact ? "tau" : "mu", std::nullopt, dim_str(dim_f), dim_str(dim_g))) {
            return verdict_;
        }
        // dimensions agree and are finite from here on
        std::set<std::uint32_t> hf_ks = {0, *min_k};
        auto other_k = contact ? min_k_contact(g_) : min_k_right(g_);
        if (other_k) {
            require_k(*other_k);
            hf_ks.insert(*other_k);
        }
        for (std::uint32_t k : hf_ks) {
            auto it = bases.find(k);
            if (it == bases.end()) {
                it = bases.emplace(k, std::make_pair(std_basis(k_ideal(f_, k)),
                                                     std_basis(k_ideal(g_, k)))).first;
            }
            std::string name = (contact ? "hilbert_tjurina_k" : "hilbert_milnor_k");
            if (refute(name, k, hf_str(hilbert_function(it->second.first)),
                       hf_str(hilbert_function(it->second.second)))) {
                return verdict_;
            }
        }
        return verdict_; // (d) inconclusive
    }

private:
    Ideal k_ideal(const Polynomial& h, std::uint32_t k) const {
        return mode_ == CompareMode::Contact ? tjurina_k_ideal(h, k) : milnor_k_ideal(h, k);
    }

    void require_k(std::uint32_t k) const {
        if (k > f_.ring()->degree_cap()) {
            throw DegreeCapError("comparison needs k = " + std::to_string(k) +
                                 " beyond the degree cap; raise the cap");
        }
    }

    void note(std::string check, std::optional<std::uint32_t> k, bool ok, std::string detail) {
        verdict_.evidence.push_back({std::move(check), k, ok, std::move(detail)});
    }

    // Records the comparison; on mismatch fills the witness and flips the
    // verdict. Returns true when refuted.
    bool refute(const std::string& invariant, std::optional<std::uint32_t> k,
                const std::string& value_f, const std::string& value_g) {
        bool equal = value_f == value_g;
        std::string name = k ? invariant + std::to_string(*k) : invariant;
        note("invariant_" + name, k, equal, "f: " + value_f + ", g: " + value_g);
        if (equal) return false;
        verdict_.kind = VerdictKind::NotEquivalent;
        verdict_.witness = name;
        verdict_.witness_k = k;
        verdict_.witness_f = value_f;
        verdict_.witness_g = value_g;
        return true;
    }

    const Polynomial& f_;
    const Polynomial& g_;
    CompareMode mode_;
    EquivalenceVerdict verdict_;
};

} // namespace

EquivalenceVerdict contact_compare(const Polynomial& f, const Polynomial& g) {
    return Comparer(f, g, CompareMode::Contact).run();
}

EquivalenceVerdict right_compare(const Polynomial& f, const Polynomial& g) {
    return Comparer(f, g, CompareMode::Right).run();
}

bool replay_verdict(const EquivalenceVerdict& verdict, const Polynomial& f, const Polynomial& g) {
    const bool contact = verdict.mode == CompareMode::Contact;
    switch (verdict.kind) {
    case VerdictKind::Inconclusive:
        return true;
    case VerdictKind::Equivalent: {
        if (verdict.certificate == CertificateKind::DeterminacyPerturbation) {
            auto det = contact ? contact_determinacy_bound(f) : right_determinacy_bound(f);
            if (!det || det->bound != verdict.certificate_bound) return false;
            auto diff_ord = (g - f).order();
            return !diff_ord || *diff_ord > det->bound;
        }
        if (!verdict.certificate_k) return false;
        std::uint32_t k = *verdict.certificate_k;
        if (contact) {
            return ideal_equal(tjurina_k_ideal(f, k), tjurina_k_ideal(g, k));
        }
        StdBasis mf = std_basis(milnor_k_ideal(f, k));
        return ideal_equal(mf, std_basis(milnor_k_ideal(g, k))) && is_member(f - g, mf);
    }
    case VerdictKind::NotEquivalent: {
        if (!verdict.witness) return false;
        auto value = [&](const Polynomial& h) -> std::string {
            const std::string& w = *verdict.witness;
            if (w == "s") return ord_str(h.order());
            if (w == "s_prime") return ord_str(ideal_order(jacobian_ideal(h)));
            if (w == "tau") return dim_str(tjurina_number(h));
            if (w == "mu") return dim_str(milnor_number(h));
            if (verdict.witness_k) {
                std::uint32_t k = *verdict.witness_k;
                Ideal ideal = contact ? tjurina_k_ideal(h, k) : milnor_k_ideal(h, k);
                return hf_str(hilbert_function(ideal));
            }
            return "?";
        };
        return value(f) == *verdict.witness_f && value(g) == *verdict.witness_g &&
               *verdict.witness_f != *verdict.witness_g;
    }
    }
    return false;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Equivalent: return "equivalent";
    case VerdictKind::NotEquivalent: return "not_equivalent";
    case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(CompareMode mode) {
    return mode == CompareMode::Contact ? "contact" : "right";
}

std::string to_string(CertificateKind kind) {
    return kind == CertificateKind::DeterminacyPerturbation ? "determinacy_perturbation"
                                                            : "identity_lift_ideal_equality";
}

} // namespace germ
