#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knot4/patch.hpp"

namespace knot4 {

// Surface description:
//   {"kind": "general"|"case1"|"case2", "x1": "...", "x2": "...", "x3": "...", "x4": "...",
//    "phi": "...", "lambda": 0.0, "params": {...}, "u_domain": [a, b], "v_domain": [a, b],
//    "unit_speed_complete": false}
// Optional: "name", "family" (corpus tag), "x1_offset" (start value of a completed x1).
SurfaceSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const SurfaceSpec& spec);

SurfaceSpec load_spec(const std::filesystem::path& path);

// All *.json files in dir, in filename order.
std::vector<SurfaceSpec> load_spec_dir(const std::filesystem::path& dir);

}  // namespace knot4
