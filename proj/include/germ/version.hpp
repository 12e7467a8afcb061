#ifndef GERM_VERSION_HPP
#define GERM_VERSION_HPP

namespace germ {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace germ

#endif
