#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcert/json_util.hpp"

namespace pcert {

// Small bundled triangulations (at most four tetrahedra). Every gluing
// identifies face k of one tetrahedron with face k of another via the
// identity map, so a coordinate vector that is constant across tetrahedra
// meets the matching equations automatically.
std::vector<std::string> bundled_triangulation_names();
json bundled_triangulation(const std::string& name);

// One sampled instance: a bundled triangulation together with an admissible
// coordinate vector for it.
struct CoordinateSample {
  std::string triangulation;
  json tri;
  json coords;
};

// Deterministic stream of admissible coordinate vectors across the bundled
// triangulations. The same seed always yields the same samples.
std::vector<CoordinateSample> sample_coordinates(std::uint64_t seed, int count);

// Closed running-bond wall of hexagonal bricks (rows even and >= 4,
// cols >= 3): a torus whose interior vertices are all trivalent. One family
// per column.
json brick_torus(int rows, int cols);

// Same wall without the vertical wrap: an annulus with two boundary circles
// (rows >= 2, cols >= 3).
json brick_tube(int rows, int cols);

// Closed orientable synthetic complex of exactly the requested genus
// (genus >= 2). "banded" confines the red faces to a wrapping band so the
// reduction stays bounded; "island" scatters the red faces as disks inside
// a pocket so the reduction closes up and a separating curve is needed.
// The file is re-imported and its genus re-checked before it is returned.
json synthetic_interchange(int genus, int t, const std::string& flavor, std::uint64_t seed);

}  // namespace pcert
