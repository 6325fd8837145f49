#include "zlab/constants.hpp"

#include <cstdint>
#include <cstdio>

namespace zlab {

std::vector<FittedConstants::Entry> FittedConstants::entries() const {
    return {
        {"formula1", formula1},
        {"formula2", formula2},
        {"spacing", spacing},
        {"trig_sum", trig_sum},
        {"partial_sum", partial_sum},
        {"lemma_sums", lemma_sums},
        {"w_tilde", w_tilde},
        {"titchmarsh", titchmarsh},
        {"hardy_littlewood", hardy_littlewood},
        {"ladder_residual", ladder_residual},
    };
}

const FittedConstants& frozen_constants() {
    static const FittedConstants constants = [] {
        // Twice the largest ratio seen by derive_constants(), rounded up.
        FittedConstants c;
        c.formula1 = 0.0054;
        c.formula2 = 0.0037;
        c.spacing = 2.1;
        c.trig_sum = 0.82;
        c.partial_sum = 0.27;
        c.lemma_sums = 0.035;
        c.w_tilde = 0.00049;
        c.titchmarsh = 0.064;
        c.hardy_littlewood = 19.0;
        c.ladder_residual = 0.36;
        return c;
    }();
    return constants;
}

std::string snapshot_hash(const FittedConstants& constants) {
    // FNV-1a over the printed snapshot.
    std::uint64_t h = 1469598103934665603ULL;
    char buf[64];
    for (const auto& e : constants.entries()) {
        const int len = std::snprintf(buf, sizeof buf, "%s=%.17g;", e.name, e.value);
        for (int i = 0; i < len; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
    }
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace zlab
