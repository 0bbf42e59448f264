#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace condcolor::detail {

inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string fnv1a_hex(std::string_view bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

}  // namespace condcolor::detail
