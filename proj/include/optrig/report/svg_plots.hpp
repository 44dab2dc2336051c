#pragma once

#include <string>
#include <utility>
#include <vector>

#include "optrig/pythagorean.hpp"

namespace optrig::report {

/// Unit circle with one labeled marker per triple at (a/c, b/c). Rendering is
/// pure and deterministic; throws EmptyInput on an empty list.
std::string render_plot_circle(
    const std::vector<std::pair<pyth::TripleParams, pyth::PythTriple>>& triples);

/// Polyline of the turning angle phi = arccos(2*sqrt(k)/(1+k)) over the
/// condition number k in [lambda_min, lambda_max]. Requires
/// 1 <= lambda_min < lambda_max and steps >= 2 (BadRange otherwise).
std::string render_plot_angle(double lambda_min, double lambda_max, int steps);

/// Validates and renders first, then writes; a rendering error leaves no
/// file behind. Throws IoError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace optrig::report
