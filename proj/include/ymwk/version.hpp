#pragma once

namespace ymwk {

inline constexpr const char* kArtifactName = "ymwk";
inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace ymwk
