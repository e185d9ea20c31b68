#pragma once

#include "plansim/render/png_io.hpp"
#include "plansim/render/theme.hpp"
#include "plansim/worlds/scenario.hpp"

namespace plansim::render {

/// Deterministic tile rendering: rows*tile x cols*tile RGB pixels. Distinct
/// cell/item/agent states produce distinct tiles within a theme.
Image render_scenario(const worlds::GridScenario& sc, const Theme& theme);

/// Recovers the symbolic scenario from a rendered image by exact tile
/// matching (the test oracle for the render round-trip, and the perception
/// path for image-based oracle input). Rule variant and seed are not part
/// of the pixels; they default to Base/0.
worlds::GridScenario decode_image(const Image& image, const Theme& theme, worlds::World world);

}  // namespace plansim::render
