#ifndef GERM_EQUIVALENCE_HPP
#define GERM_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "germ/singularity.hpp"

namespace germ {

enum class VerdictKind { Equivalent, NotEquivalent, Inconclusive };
enum class CompareMode { Contact, Right };
enum class CertificateKind { DeterminacyPerturbation, IdentityLiftIdealEquality };

// One named check performed during a comparison, kept so verdicts can be
// audited and replayed.
struct EvidenceItem {
    std::string check;
    std::optional<std::uint32_t> k;
    bool ok;
    std::string detail;
};

struct EquivalenceVerdict {
    VerdictKind kind;
    CompareMode mode;
    // Equivalent only: which sufficient condition fired.
    std::optional<CertificateKind> certificate;
    std::optional<std::uint32_t> certificate_k;     // identity-lift k
    std::optional<std::uint32_t> certificate_bound; // determinacy bound used
    // NotEquivalent only: the invariant that separates f from g.
    std::optional<std::string> witness;
    std::optional<std::uint32_t> witness_k; // for k-indexed invariants
    std::optional<std::string> witness_f;
    std::optional<std::string> witness_g;
    std::vector<EvidenceItem> evidence;
    std::uint32_t cap = 0;
    std::uint32_t characteristic = 0;
};

// Contact equivalence (g = u * f(phi) for a unit u and automorphism phi),
// decided as far as the sufficient certificates and genuine invariants
// reach. Chain, first success wins:
//   (a) ord(g - f) beyond the contact determinacy bound of f;
//   (b) literal k-th Tjurina ideal equality at k = min_k_contact(f);
//   (c) invariant refutation: s, tau, Hilbert functions of the k-th Tjurina
//       algebras at k = 0 and the minimal k of both sides;
//   (d) Inconclusive with the full comparison record.
// Requires both germs nonzero with ord >= 2 in the same context and tau(f)
// finite (NotApplicableError otherwise). Throws DegreeCapError when a
// needed k exceeds the cap.
EquivalenceVerdict contact_compare(const Polynomial& f, const Polynomial& g);

// Right equivalence (g = f(phi)); same chain shape with m^k j(f) in place
// of the Tjurina family, the membership f - g in m^k j(f) added to (b), and
// invariants s, s', mu, Hilbert functions of the k-th Milnor algebras in
// (c). Requires mu(f) finite.
EquivalenceVerdict right_compare(const Polynomial& f, const Polynomial& g);

// Re-runs the checks a verdict rests on: certificate memberships and
// equalities for Equivalent, the witness mismatch for NotEquivalent.
// Inconclusive replays trivially. False means the stored verdict does not
// reproduce.
bool replay_verdict(const EquivalenceVerdict& verdict, const Polynomial& f, const Polynomial& g);

std::string to_string(VerdictKind kind);
std::string to_string(CompareMode mode);
std::string to_string(CertificateKind kind);

} // namespace germ

#endif
