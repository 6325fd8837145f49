#include "zlab/phase.hpp"

namespace zlab::phase {

LogTable::LogTable(std::size_t size) : ln_(size), ln_d_(size), inv_sqrt_(size) {
    for (std::size_t n = 1; n < size; ++n) {
        ln_[n] = std::log(static_cast<long double>(n));
        ln_d_[n] = static_cast<double>(ln_[n]);
        inv_sqrt_[n] = 1.0 / std::sqrt(static_cast<double>(n));
    }
}

const LogTable& logs() {
    static const LogTable table(std::size_t{1} << 14);
    return table;
}

}  // namespace zlab::phase
