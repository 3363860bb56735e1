#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lstn/instance.hpp"

namespace lstn {

// Instance file format (JSON, UTF-8):
//   {"dim": d, "regions": [{"label": "...", "vertices": [[x, ...], ...]}, ...]}
// Vertices are arrays of length dim. Writing then reading reproduces coordinates
// bit-exactly.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace lstn
