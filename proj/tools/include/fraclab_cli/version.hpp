#pragma once

namespace fraclab::cli {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fraclab::cli
