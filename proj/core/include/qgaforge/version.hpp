#pragma once

namespace qgaforge {

inline constexpr const char* kArtifactName = "qgaforge";
inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace qgaforge
