#pragma once

#include <cstdio>
#include <string>

namespace evident {

// Fixed 6-decimal rendering used by every report; keeps output files
// byte-identical across runs and platforms.
inline std::string format6(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0.0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace evident
