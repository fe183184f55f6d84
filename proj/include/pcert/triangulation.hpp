#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pcert/json_util.hpp"

namespace pcert {

enum class VertexStatus { material, removed, truncated };

const char* to_string(VertexStatus s);
VertexStatus vertex_status_from_string(const std::string& s, const std::string& stage);

// Tetrahedron conventions: vertices 0..3, edge e joins kEdgeVerts[e],
// face f is the triangle omitting vertex f with its vertices enumerated in
// increasing order (kFaceVerts[f]).
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVerts = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::array<int, 3>, 4> kFaceVerts = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

int edge_index(int u, int w);
int face_corner_pos(int face, int vertex);
std::array<int, 2> faces_containing_edge(int e);

struct FaceGluing {
  int tet_a = 0, face_a = 0;
  int tet_b = 0, face_b = 0;
  // map[i] is the position within kFaceVerts[face_b] of the image of
  // kFaceVerts[face_a][i].
  std::array<int, 3> map{0, 1, 2};

  [[nodiscard]] int image_vertex(int v) const;     // tet_a-vertex on face_a -> tet_b-vertex
  [[nodiscard]] int preimage_vertex(int v) const;  // tet_b-vertex on face_b -> tet_a-vertex
};

struct GeneralizedTetrahedron {
  int id = 0;
  std::array<VertexStatus, 4> vertex_status{VertexStatus::material, VertexStatus::material,
                                            VertexStatus::material, VertexStatus::material};
};

// One wedge of the walk around an edge class: tetrahedron `tet` wraps around
// its edge u->w (directed along the class direction); the walk enters the
// wedge through face_in and leaves through face_out (-1 marks the unglued
// end of a boundary edge's walk).
struct EdgeWedge {
  int tet = 0;
  int u = 0, w = 0;
  int face_in = -1;
  int face_out = -1;
  [[nodiscard]] int edge() const { return edge_index(u, w); }
};

struct EdgeClass {
  int id = 0;
  bool boundary = false;
  std::vector<EdgeWedge> wedges;  // cyclic when interior, linear when boundary
};

struct VertexClass {
  int id = 0;
  VertexStatus status = VertexStatus::material;
  std::vector<std::pair<int, int>> members;  // (tet, vertex), sorted
};

struct Triangulation {
  std::vector<GeneralizedTetrahedron> tets;
  std::vector<FaceGluing> gluings;

  std::vector<EdgeClass> edge_classes;
  std::vector<VertexClass> vertex_classes;
  std::vector<std::pair<int, int>> boundary_faces;    // unglued (tet, face), sorted
  std::vector<std::array<int, 6>> edge_class_of;      // [tet][edge] -> class id
  std::vector<std::array<bool, 6>> edge_dir_matches;  // low->high runs along the class direction?
  std::vector<std::array<int, 6>> wedge_index_of;     // [tet][edge] -> index into class wedges
  std::vector<std::array<int, 4>> vertex_class_of;    // [tet][vertex] -> class id
  std::vector<std::array<int, 4>> gluing_of_face;     // [tet][face] -> gluing index or -1

  [[nodiscard]] int t() const { return static_cast<int>(tets.size()); }
  [[nodiscard]] int edge_degree(int edge_class_id) const;
  [[nodiscard]] const FaceGluing* gluing_at(int tet, int face) const;
};

Triangulation validate_triangulation(const json& raw);
Triangulation validate_triangulation(std::vector<GeneralizedTetrahedron> tets,
                                     std::vector<FaceGluing> gluings);
json triangulation_to_json(const Triangulation& tri);

}  // namespace pcert
