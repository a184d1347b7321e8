// MSRC binary cube files: little-endian header followed by interleaved
// (I, Q) float32 pairs in frame-major, chirp, fast-sample order.
#pragma once

#include <filesystem>

#include "msr/types.hpp"

namespace msr {

void write_cube(const DataCube& cube, const std::filesystem::path& path);
DataCube read_cube(const std::filesystem::path& path);

}  // namespace msr
