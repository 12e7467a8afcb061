#ifndef GERM_RENDER_HPP
#define GERM_RENDER_HPP

#include <string>

#include <json.hpp>

#include "germ/equivalence.hpp"
#include "germ/singularity.hpp"

namespace germ {

// JSON result payloads. Field names match the report structs; infinite
// values appear as the string "infinity", unknowns as "unknown" with the
// explanation collected under "reasons".
nlohmann::json report_to_json(const SingularityReport& report);
nlohmann::json verdict_to_json(const EquivalenceVerdict& verdict, const Polynomial& f,
                               const Polynomial& g);

// Human-readable tables carrying the same content.
std::string report_to_text(const SingularityReport& report);
std::string verdict_to_text(const EquivalenceVerdict& verdict, const Polynomial& f,
                            const Polynomial& g);

} // namespace germ

#endif
