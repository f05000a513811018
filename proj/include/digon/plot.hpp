#pragma once

// Plot data for sampled extremal maps: one CSV per ray and an SVG overlay of
// the unit circle, the anchors theta_j, the zeros delta_j and the image samples.

#include <filesystem>
#include <string>
#include <vector>

#include "digon/extremal_map.hpp"

namespace digon {

std::string plot_svg(const SampledMap& sampled);

/// Writes ray_<k>.csv for every ray and overlay.svg into `dir` (created if
/// missing). Returns the written paths. Throws InputError when `dir` cannot be
/// created or a file cannot be written.
std::vector<std::filesystem::path> emit_plot_data(const SampledMap& sampled, const std::filesystem::path& dir);

}  // namespace digon
