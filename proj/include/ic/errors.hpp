#pragma once

#include <stdexcept>
#include <string>

namespace ic {

// Bad user-supplied data (files, CLI arguments, malformed instances).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A geometric claim the construction relies on failed its exact check.
// This signals a bug in the construction, not a user error.
struct ConstructionError : std::logic_error {
    explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

inline void construction_check(bool ok, const std::string& claim) {
    if (!ok) throw ConstructionError("construction check failed: " + claim);
}

} // namespace ic
