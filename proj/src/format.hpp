#pragma once

#include <cstdio>
#include <string>

namespace superq::detail {

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace superq::detail
