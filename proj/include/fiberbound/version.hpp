#ifndef FIBERBOUND_VERSION_HPP
#define FIBERBOUND_VERSION_HPP

namespace fiberbound {

inline constexpr const char* kVersion = "0.1.0";
/// Bumped whenever the JSON report layout changes.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace fiberbound

#endif  // FIBERBOUND_VERSION_HPP
