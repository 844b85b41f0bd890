#pragma once

#include "polardrg/polar_space.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace polardrg {

// On-disk geometry cache, one file per (n, q):
//
//   line 1   JSON header {"format":"HPS1","version":1,"n","q","modulus",
//            "strata":[{"rank","count"}...],"checksum"}
//   payload  for each stratum in rank order, every basis matrix row-major
//            as little-endian uint16 element indices
//
// The checksum is FNV-1a 64 of the payload, in hex.

inline constexpr const char* cache_format = "HPS1";
inline constexpr int cache_version = 1;

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, int q);

/// Full serialization of strata 0..d_rank (enumerating them as needed).
std::string serialize_geometry(PolarGeometry& geometry);

/// Installs all strata from `bytes`. Returns false, leaving the geometry
/// untouched, on any header, size, modulus or checksum mismatch.
bool deserialize_geometry(PolarGeometry& geometry, const std::string& bytes);

struct CacheOutcome {
    bool hit = false;
    bool rebuilt = false; // an existing file failed validation
    std::filesystem::path path;
};

/// Loads the geometry from `dir`, or enumerates it and writes the file.
/// A valid file is never rewritten.
CacheOutcome load_or_build(PolarGeometry& geometry, const std::filesystem::path& dir);

std::uint64_t fnv1a64(const std::string& bytes, std::size_t offset = 0);

} // namespace polardrg
