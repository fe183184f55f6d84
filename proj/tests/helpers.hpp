#pragma once

#include <string>

#include "pcert/json_util.hpp"
#include "pcert/triangulation.hpp"

namespace pcert::testing {

inline json tri_json(const std::string& text) { return parse_json_text(text, "test"); }

// One material tetrahedron, no gluings.
inline Triangulation single_tet() {
  return validate_triangulation(tri_json(R"({"tets":[{"status":["material","material","material","material"]}],"gluings":[]})"));
}

// The standard 2-tetrahedron S^3: face i of tet 0 glued to face i of tet 1
// with the identity correspondence on sorted face vertices.
inline Triangulation s3_2tet() {
  return validate_triangulation(tri_json(R"({
    "tets":[{"status":["material","material","material","material"]},
            {"status":["material","material","material","material"]}],
    "gluings":[{"a":[0,0],"b":[1,0],"map":[0,1,2]},
               {"a":[0,1],"b":[1,1],"map":[0,1,2]},
               {"a":[0,2],"b":[1,2],"map":[0,1,2]},
               {"a":[0,3],"b":[1,3],"map":[0,1,2]}]})"));
}

// Two tetrahedra sharing a single face.
inline Triangulation two_tet_one_gluing() {
  return validate_triangulation(tri_json(R"({
    "tets":[{"status":["material","material","material","material"]},
            {"status":["material","material","material","material"]}],
    "gluings":[{"a":[0,0],"b":[1,0],"map":[0,1,2]}]})"));
}

// Interchange file for a torus built from one column of n hexagonal bricks,
// stacked into a single parallel family. Brick r (face r) is bounded below by
// horizontal edges n+2r, n+2r+1 and above by the next pair, with vertical
// edge r used on both sides; odd rows shift the seam half a brick.
inline json brick_ring_json(int n, const std::string& kind) {
  json faces = json::array();
  for (int r = 0; r < n; ++r) {
    const int s = (r + 1) % n;
    const long long v = r + 1;
    const long long h1r = n + 2 * r + 1, h2r = h1r + 1;
    const long long h1s = n + 2 * s + 1, h2s = h1s + 1;
    std::vector<long long> cyc;
    if (r % 2 == 0) {
      cyc = {h1s, h2s, -v, -h2r, -h1r, v};
    } else {
      cyc = {h2s, h1s, -v, -h1r, -h2r, v};
    }
    json face = json::object();
    face["kind"] = kind;
    face["boundary"] = cyc;
    faces.push_back(std::move(face));
  }
  json sides = json::object();
  for (int f = 0; f < n; ++f) sides["f" + std::to_string(f)] = json::array({1, 2});
  std::vector<int> fam(n);
  for (int f = 0; f < n; ++f) fam[f] = f;
  json out = json::object();
  out["faces"] = std::move(faces);
  out["edges"] = 3 * n;
  out["vertices"] = 2 * n;
  out["families"] = json::array({fam});
  out["sides"] = std::move(sides);
  return out;
}

}  // namespace pcert::testing
