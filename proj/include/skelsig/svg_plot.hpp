#pragma once

#include <string>

#include "skelsig/skeleton_space.hpp"

namespace skelsig {

/// Hand-emitted SVG of a figure dataset. Output depends only on the inputs:
/// fixed canvas, fixed palette, points and lines in dataset order, numbers
/// printed with two decimals. `metadata` is embedded verbatim (escaped).
std::string render_svg(const FigureDataset& dataset, const std::string& metadata = {});

}  // namespace skelsig
