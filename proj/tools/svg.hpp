#pragma once

#include <cstddef>
#include <string>

#include "berge5/bound.hpp"

namespace berge5::cli {

// Heatmap of B over the simplex (a1 to the right, a2 upwards) with the
// maximizer marked.
std::string bound_heatmap_svg(const BoundCurve& curve, std::size_t resolution = 100);

}  // namespace berge5::cli
