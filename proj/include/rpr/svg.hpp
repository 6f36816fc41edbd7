#pragma once

#include <stdexcept>
#include <string>

#include "rpr/kinematics.hpp"

namespace rpr {

struct SvgOptions {
    double width = 640.0;       // drawing area, pixels
    double legend_height = 96.0;
    double margin = 0.10;       // fraction of the larger extent, each side
    double vertex_tol = 1e-6;   // allowed mismatch of the two vertex routes, drawing units
};

class SvgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// SVG 1.1 drawing of one assembly configuration: base triangle, platform
/// triangle, connector segments and an angle legend. y points up in world
/// coordinates and is flipped for the screen.
std::string render_posture_svg(const ManipulatorProblem& problem, const SolutionTuple& tuple,
                               const PostureAngles& angles, const SvgOptions& opts = {});

}  // namespace rpr
