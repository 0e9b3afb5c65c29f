#pragma once

namespace spear {

inline constexpr const char* kToolVersion = "0.1.0";

// Bumped whenever the prompt assembly layout changes; recorded in every step
// log so results stay attributable to the exact template that produced them.
inline constexpr const char* kPromptTemplateVersion = "spear-prompt-v1";

}  // namespace spear
