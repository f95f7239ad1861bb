#pragma once

namespace gridsynth {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace gridsynth
