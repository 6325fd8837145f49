#pragma once

#include <functional>
#include <optional>

#include "zlab/errors.hpp"

namespace testing {

/// Code of the zlab::Error thrown by f, or nullopt when nothing is thrown.
inline std::optional<zlab::Errc> thrown(const std::function<void()>& f) {
    try {
        f();
    } catch (const zlab::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace testing
