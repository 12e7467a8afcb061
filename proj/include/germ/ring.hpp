#ifndef GERM_RING_HPP
#define GERM_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germ/field.hpp"

namespace germ {

// Ambient local ring: a coefficient field, an ordered list of variable
// names, and the truncation degree cap. All polynomial data in a context is
// understood modulo m^{cap+1}, m the ideal generated by the variables.
class RingContext {
public:
    static constexpr std::uint32_t kDefaultCap = 64;

    RingContext(FieldSpec field, std::vector<std::string> var_names,
                std::uint32_t degree_cap = kDefaultCap);

    FieldSpec field() const { return field_; }
    std::size_t num_vars() const { return var_names_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::string& var_name(std::size_t i) const { return var_names_[i]; }
    std::optional<std::size_t> var_index(std::string_view name) const;
    std::uint32_t degree_cap() const { return degree_cap_; }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.field_ == b.field_ && a.var_names_ == b.var_names_ &&
               a.degree_cap_ == b.degree_cap_;
    }
    friend bool operator!=(const RingContext& a, const RingContext& b) { return !(a == b); }

private:
    FieldSpec field_;
    std::vector<std::string> var_names_;
    std::uint32_t degree_cap_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> var_names,
                  std::uint32_t degree_cap = RingContext::kDefaultCap);

// Throws ContextMismatchError unless both pointers denote equal contexts.
void require_same_ring(const RingPtr& a, const RingPtr& b);

} // namespace germ

#endif
