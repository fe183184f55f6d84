#pragma once

#include <string>
#include <vector>

#include "pcert/json_util.hpp"
#include "pcert/surface_complex.hpp"

namespace pcert {

enum class FaceColor { dark_red, light_red, blue, yellow };
enum class LightRedLabel { lr_b, lr_y, lr_r };

const char* face_color_name(FaceColor c);
const char* light_red_label_name(LightRedLabel l);

struct Coloring {
  std::vector<FaceColor> color;            // per face
  std::vector<LightRedLabel> light_label;  // meaningful where color == light_red
  bool swap_applied = false;

  [[nodiscard]] bool is_red(int f) const {
    return color[f] == FaceColor::dark_red || color[f] == FaceColor::light_red;
  }
};

// Returns the family partition after validating it: every face in exactly one
// family, and (for complexes built from coordinates) members parallel and
// consecutive along their stack or edge class.
std::vector<std::vector<int>> compute_families(const SurfaceComplex& sc);

// Position rules per family of size n: 1 and n dark red; 2 and n-1 light red
// when n >= 3; 3..n-2 alternate blue/yellow starting blue. Light-red labels
// record the color on the non-dark side (red neighbors give lr_r).
Coloring color_families(const std::vector<std::vector<int>>& families, int face_count);

// Family neighbors listed by transverse side label; -1 marks a missing side.
struct FiberNeighbors {
  int side1 = -1;
  int side2 = -1;
};
FiberNeighbors fiber_neighbors(const SurfaceComplex& sc, int face);

// The vertices of red non-vertex-disk faces, split by incident corner colors:
// at least two reds; one red, one blue, one yellow; or one red and two of the
// same of blue/yellow. Only interior vertices are classified.
struct VertexPartition {
  std::vector<int> v_all;
  std::vector<int> v0;
  std::vector<int> v_plus;
  std::vector<int> v_minus;
};
VertexPartition classify_vertices(const SurfaceComplex& sc, const Coloring& col);

// Keeps the original coloring or exchanges blue and yellow on the vertex
// disks, whichever leaves fewer tri-colored vertices (ties keep the
// original); the smaller count is at most half the classified vertices.
Coloring choose_swap(const SurfaceComplex& sc, const Coloring& col);

// The edges shared by a blue and a yellow face, decomposed into arcs and
// circles. Arc endpoints are the vertices meeting exactly one such edge.
struct Gamma {
  std::vector<std::vector<int>> arcs;  // edge ids in walk order
  std::vector<std::vector<int>> circles;
  std::vector<int> endpoints;  // sorted vertex ids
};
Gamma compute_gamma(const SurfaceComplex& sc, const Coloring& col);

json coloring_to_json(const Coloring& col, const Gamma& gamma);

// Structural assertions on a finished coloring. Violations that depend on
// coordinate provenance are demoted to warnings on synthetic complexes.
struct ColoringChecks {
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};
ColoringChecks check_coloring_invariants(const SurfaceComplex& sc, const Coloring& col,
                                         const VertexPartition& part, const Gamma& gamma);

}  // namespace pcert
