#include "focalforge/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace focalforge {

int jobs_from_environment(int fallback) {
    const char* raw = std::getenv("FOCALFORGE_JOBS");
    if (raw == nullptr) return fallback;
    int value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) return fallback;
    return value;
}

}  // namespace focalforge
