#pragma once

#include <string>
#include <vector>

#include "zlab/constants.hpp"

namespace zlab {

/// Re-derives every fitted constant as the largest |error| / shape over a
/// small fixed grid.  Deterministic; takes a few seconds.
FittedConstants derive_constants();

/// Upper limits a constant must never exceed; 0 means uncapped.
FittedConstants constant_caps();

struct ConstantCheck {
    std::string name;
    double frozen = 0.0;
    double derived = 0.0;
    double cap = 0.0;
    bool grew = false;       // derived > factor * frozen
    bool over_cap = false;
};

/// One row per constant.  Strict mode fails when any row has grew or over_cap.
std::vector<ConstantCheck> compare_constants(const FittedConstants& frozen, const FittedConstants& derived,
                                             double factor = 2.0);

/// True when no row grew or broke its cap.
bool constants_hold(const std::vector<ConstantCheck>& checks);

}  // namespace zlab
