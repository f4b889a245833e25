#pragma once

namespace powerdepth {

// Depth of the quotient ring, capped: exact values 0 and 1, everything else >= 2.
enum class DepthClass { Zero, One, GeTwo };

inline const char* to_string(DepthClass c) {
    switch (c) {
        case DepthClass::Zero: return "ZERO";
        case DepthClass::One: return "ONE";
        default: return "GE_TWO";
    }
}

}  // namespace powerdepth
