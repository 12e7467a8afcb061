#ifndef GERM_SINGULARITY_HPP
#define GERM_SINGULARITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germ/localalg.hpp"

namespace germ {

// Value of a report entry: a number, infinity (a first-class value, never a
// sentinel integer), or unknown with a reason.
class ReportField {
public:
    static ReportField value(std::int64_t v) { return ReportField(Kind::Value, v, ""); }
    static ReportField infinite() { return ReportField(Kind::Infinite, 0, ""); }
    static ReportField unknown(std::string reason) {
        return ReportField(Kind::Unknown, 0, std::move(reason));
    }

    bool has_value() const { return kind_ == Kind::Value; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }
    std::int64_t value() const;
    const std::string& reason() const { return reason_; }

private:
    enum class Kind { Value, Infinite, Unknown };
    ReportField(Kind kind, std::int64_t v, std::string reason)
        : kind_(kind), value_(v), reason_(std::move(reason)) {}

    Kind kind_;
    std::int64_t value_;
    std::string reason_;
};

struct SingularityReport {
    explicit SingularityReport(Polynomial germ) : f(std::move(germ)) {}

    Polynomial f;
    ReportField s = ReportField::unknown("");        // ord(f)
    ReportField s_prime = ReportField::unknown("");  // ord(j(f))
    ReportField mu = ReportField::unknown("");
    ReportField tau = ReportField::unknown("");
    ReportField right_det = ReportField::unknown("");
    ReportField contact_det = ReportField::unknown("");
    ReportField min_k_right = ReportField::unknown("");
    ReportField min_k_contact = ReportField::unknown("");
    ReportField cor_bound_right = ReportField::unknown("");
    ReportField cor_bound_contact = ReportField::unknown("");
    std::optional<std::vector<std::uint64_t>> hf_tjurina; // present when tau finite
    std::vector<std::string> notes;
};

// <partial f / partial x_1, ..., partial f / partial x_n>, zero derivatives
// dropped.
Ideal jacobian_ideal(const Polynomial& f);

// The two determinacy test ideals: m<f> + m^2 j(f) for contact, m^2 j(f)
// for right. The m-power containment hypotheses of the determinacy and
// min-k theorems are all containments in one of these.
Ideal contact_test_ideal(const Polynomial& f);
Ideal right_test_ideal(const Polynomial& f);

// <f> + j(f).
Ideal tjurina_ideal(const Polynomial& f);

// m^k j(f), the k-th Milnor ideal: its quotient is the k-th Milnor algebra.
Ideal milnor_k_ideal(const Polynomial& f, std::uint32_t k);

// <f> + m^k j(f), the k-th Tjurina ideal. k = 0 recovers tj(f).
Ideal tjurina_k_ideal(const Polynomial& f, std::uint32_t k);

ColengthResult milnor_number(const Polynomial& f);
ColengthResult tjurina_number(const Polynomial& f);

struct DeterminacyBound {
    std::uint32_t k_star; // smallest k with m^{k+2} inside the test ideal
    std::uint32_t bound;  // 2*k_star - ord(f) + 2
};

// Right determinacy: smallest k with m^{k+2} inside m^2 j(f) yields the
// bound 2k - ord(f) + 2; f is then right bound-determined. nullopt when no
// m-power lies in m^2 j(f) below the cap (infinite Milnor number).
// Requires f nonzero with ord(f) >= 2.
std::optional<DeterminacyBound> right_determinacy_bound(const Polynomial& f);

// Contact analogue with test ideal m<f> + m^2 j(f).
std::optional<DeterminacyBound> contact_determinacy_bound(const Polynomial& f);

// Smallest k >= 0 with floor((k+2s)/2) >= N*, N* the least m-power inside
// m<f> + m^2 j(f): equality of the k-th Tjurina algebras at this k upgrades
// to contact equivalence. Closed form 2*N* - 2s, always >= 2. nullopt when
// N* is not found below the cap.
std::optional<std::uint32_t> min_k_contact(const Polynomial& f);

// Right analogue: smallest k with floor((k+s+s')/2) + ... >= N', i.e.
// max(0, 2*N' - s - s' - 1) with N' the least m-power inside m^2 j(f).
std::optional<std::uint32_t> min_k_right(const Polynomial& f);

struct CorollaryBounds {
    std::optional<std::int64_t> contact; // 2*tau - 2s + 4 when tau finite
    std::optional<std::int64_t> right;   // 2*mu - s - s' + 3 when mu finite
};

CorollaryBounds corollary_bounds(const Polynomial& f);

// Aggregate report; never throws on mathematically undefined quantities,
// which come back as unknown fields with reasons (f = 0 and ord(f) at the
// cap give a degenerate report).
SingularityReport analyze(const Polynomial& f);

} // namespace germ

#endif
