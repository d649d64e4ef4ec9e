#pragma once

#include <cstdio>
#include <string>

namespace topo {

// Fixed 9-significant-digit rendering used by all emitted TSVs.
inline std::string format_g9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// Value-column variant: integral values keep a trailing ".0" so data
// columns are recognizably real-valued ("1.0", not "1").
inline std::string format_value(double v) {
    std::string s = format_g9(v);
    if (s.find_first_of(".einf") == std::string::npos) s += ".0";
    return s;
}

}  // namespace topo
