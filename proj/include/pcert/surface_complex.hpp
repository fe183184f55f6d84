#pragma once

#include <vector>

#include "pcert/complex.hpp"
#include "pcert/json_util.hpp"
#include "pcert/normal_surface.hpp"
#include "pcert/triangulation.hpp"

namespace pcert {

// Where a face of the induced complex comes from: a normal piece keeps its
// (tet, disk kind, type, stack slot); a vertex disk keeps its intersection
// point (edge class, position along the class).
struct FaceProvenance {
  int tet = -1;
  DiskKind disk = DiskKind::tri;
  int type = 0;
  long long stack = 0;
  int tube_half = 0;
  int edge_class = -1;
  long long position = -1;

  [[nodiscard]] bool is_vertex_disk() const { return edge_class >= 0; }
};

struct SurfaceComplex {
  Complex complex;
  std::vector<FaceProvenance> provenance;  // empty for interchange builds
  std::vector<std::vector<int>> families;  // ordered, smallest face id first
  std::vector<int> family_of;              // per face
  std::vector<int> position_in_family;     // per face, 0-based
  // 0: the face's sides are labeled [1,2]; 1: labeled [2,1]. Labels follow a
  // coherent orientation per component (all zero on non-orientable ones).
  std::vector<int> side_parity;
  bool synthetic = false;
  int declared_t = 1;

  [[nodiscard]] int face_count() const { return static_cast<int>(complex.faces.size()); }
};

// Materializes the cell structure the surface induces: one truncated face per
// normal piece, one vertex disk per edge intersection point, joined along the
// truncation graph. Fails when the surface is one-sided.
SurfaceComplex build_from_coordinates(const Triangulation& tri, const ValidatedSurface& surf);

SurfaceComplex build_from_interchange(const json& file);
json interchange_to_json(const SurfaceComplex& sc);

}  // namespace pcert
