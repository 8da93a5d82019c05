#pragma once

#include <string>

#include "shivar/shi_variety.hpp"

namespace shivar {

struct PlotOptions {
    double radius = 4.0;      // draw alcoves whose centroid lies within this distance
    int max_alcoves = 50000;  // hard cap on the breadth-first expansion
};

// SVG 1.1 picture of the alcove tiling of a rank-2 type, one polygon per
// alcove, colored by the irreducible component of its element. The simple
// roots are embedded at their true angle (120/135/150 degrees), short roots
// at unit length. Throws InvalidTypeError for rank != 2.
std::string alcove_svg(const RootSystem& rs, const ComponentTable& table,
                       const PlotOptions& options = {});

}  // namespace shivar
