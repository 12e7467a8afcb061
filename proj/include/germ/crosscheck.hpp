#ifndef GERM_CROSSCHECK_HPP
#define GERM_CROSSCHECK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germ/equivalence.hpp"
#include "germ/oracle.hpp"
#include "germ/singularity.hpp"
#include "germ/stdbasis.hpp"

namespace germ {

// One oracle-side replay of an engine claim. ok is empty when the check had
// to be skipped (no sound truncation depth within the oracle's size budget);
// skipped checks are reported but never count against agreement.
struct CrossCheckEntry {
    std::string check;
    std::optional<bool> ok;
    std::string detail;
};

struct CrossCheckLog {
    bool agreement = true; // conjunction over the non-skipped entries
    std::vector<CrossCheckEntry> entries;

    void record(std::string check, bool ok, std::string detail = "");
    void skip(std::string check, std::string why);
};

// Largest truncation degree the oracle will attempt in this ring: bounded by
// the cap and by the number of monomials it implies.
std::uint32_t oracle_depth_limit(const RingPtr& ring);

// Cross-checks for the CLI commands. Each re-derives the dimensions,
// memberships and m-power scans behind the engine result with the truncated
// linear-algebra oracle, at depths where the oracle answer is exact.
CrossCheckLog crosscheck_report(const SingularityReport& report);
CrossCheckLog crosscheck_verdict(const EquivalenceVerdict& verdict, const Polynomial& f,
                                 const Polynomial& g);
CrossCheckLog crosscheck_nf(const Polynomial& f, const std::vector<Polynomial>& gens,
                            const MoraResult& result);
CrossCheckLog crosscheck_std(const Ideal& source, const StdBasis& basis);
CrossCheckLog crosscheck_dim(const Ideal& source, const ColengthResult& engine);
CrossCheckLog crosscheck_hilbert(const Ideal& source, const std::vector<std::uint64_t>& engine_hf);
CrossCheckLog crosscheck_minpow(const Ideal& source, const std::optional<std::uint32_t>& engine);

} // namespace germ

#endif
