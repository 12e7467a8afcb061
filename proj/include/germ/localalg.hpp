#ifndef GERM_LOCALALG_HPP
#define GERM_LOCALALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "germ/stdbasis.hpp"

namespace germ {

// K-dimension of the quotient by an ideal; nullopt means infinite.
using ColengthResult = std::optional<std::uint64_t>;

// Counts standard monomials from the staircase. Finite exactly when every
// variable has a pure power below the staircase (m-primary test); detected
// structurally, never by timeout.
ColengthResult colength(const StdBasis& basis);
ColengthResult colength(const Ideal& I);

// Degreewise standard-monomial counts, trailing zeros trimmed. This is the
// Hilbert-Samuel function of the quotient, an isomorphism invariant.
// Throws InfiniteColengthError when the colength is infinite.
std::vector<std::uint64_t> hilbert_function(const StdBasis& basis);
std::vector<std::uint64_t> hilbert_function(const Ideal& I);

// Does m^N lie in the ideal? Decided modulo m^{cap+1}, which by Nakayama is
// exact for N <= cap. Requires N <= cap.
bool contains_m_power(const StdBasis& basis, std::uint32_t n);

// Smallest N <= cap with m^N inside the ideal, scanning from ord of the
// ideal upward (containment is monotone in N); nullopt when none exists
// below the cap.
std::optional<std::uint32_t> min_m_power(const StdBasis& basis);
std::optional<std::uint32_t> min_m_power(const Ideal& I);

// Equality as ideals of K[x]/m^{cap+1}: staircases must match and every
// basis element of each side must reduce to zero against the other.
bool ideal_equal(const StdBasis& a, const StdBasis& b);
bool ideal_equal(const Ideal& a, const Ideal& b);

} // namespace germ

#endif
