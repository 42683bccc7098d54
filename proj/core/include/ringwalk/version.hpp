#pragma once

namespace ringwalk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ringwalk
