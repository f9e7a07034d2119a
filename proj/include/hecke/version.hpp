#ifndef HECKE_VERSION_HPP
#define HECKE_VERSION_HPP

namespace hecke {

inline constexpr const char* library_version = "0.1.0";
/// Bumped whenever any engine can produce a different value for the same query; cached
/// results carrying another tag are recomputed.
inline constexpr const char* engine_version = "hecke-engine/1";

} // namespace hecke

#endif
