#include "germ/ring.hpp"

#include <cctype>
#include <set>

#include "germ/error.hpp"

namespace germ {

namespace {

bool identifier_like(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

} // namespace

RingContext::RingContext(FieldSpec field, std::vector<std::string> var_names,
                         std::uint32_t degree_cap)
    : field_(field), var_names_(std::move(var_names)), degree_cap_(degree_cap) {
    if (var_names_.empty()) throw Error("a ring needs at least one variable");
    if (degree_cap_ < 2) throw Error("degree cap must be at least 2");
    std::set<std::string> seen;
    for (const auto& name : var_names_) {
        if (!identifier_like(name)) throw Error("bad variable name: '" + name + "'");
        if (!seen.insert(name).second) throw Error("duplicate variable name: '" + name + "'");
    }
}

std::optional<std::size_t> RingContext::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < var_names_.size(); ++i) {
        if (var_names_[i] == name) return i;
    }
    return std::nullopt;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> var_names, std::uint32_t degree_cap) {
    return std::make_shared<const RingContext>(field, std::move(var_names), degree_cap);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw ContextMismatchError();
}

} // namespace germ
