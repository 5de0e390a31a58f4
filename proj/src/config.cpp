#include "pipcat/config.hpp"

#include <cstdlib>
#include <string>

#include "pipcat/errors.hpp"

namespace pipcat {

int element_cap() {
    static const int cap = [] {
        const char* env = std::getenv(kCapEnvVar);
        if (env == nullptr) {
            return kDefaultElementCap;
        }
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 40) {
            return kDefaultElementCap;
        }
        return static_cast<int>(v);
    }();
    return cap;
}

void require_within_cap(int n, const char* what) {
    if (n > element_cap()) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " elements exceeds cap of " +
                          std::to_string(element_cap()) + " (set " + kCapEnvVar + " to raise it)");
    }
}

}  // namespace pipcat
