#pragma once

namespace dbci {
inline constexpr const char* kVersion = "0.1.0";
}
