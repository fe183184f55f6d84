#pragma once

#include <array>
#include <string>
#include <vector>

namespace pcert {

enum class FaceKind {
  truncated_triangle,
  truncated_quad,
  truncated_octagon,
  tubed_piece,
  vertex_disk,
};

const char* face_kind_name(FaceKind kind);
FaceKind face_kind_from_string(const std::string& name, const std::string& stage);

// A dart is a directed edge: 2*edge + dir, dir 0 running tail -> head.
inline int make_dart(int edge, int dir) { return 2 * edge + dir; }
inline int dart_edge(int d) { return d >> 1; }
inline int dart_dir(int d) { return d & 1; }
inline int dart_reverse(int d) { return d ^ 1; }
// Edge-end slots: 2*edge = tail end, 2*edge + 1 = head end. A forward dart
// (dir 0) runs tail -> head, so every dart starts at slot d and ends at d^1.
inline int dart_start_slot(int d) { return d; }
inline int dart_end_slot(int d) { return d ^ 1; }

// A 2-cell with one or more boundary cycles of darts. A face with c cycles
// is a planar piece contributing 2 - c to the Euler characteristic.
struct FaceCell {
  FaceKind kind = FaceKind::vertex_disk;
  int origin = -1;  // id in the complex this one derives from
  std::vector<std::vector<int>> cycles;
};

struct EdgeUse {
  int face = -1;
  int cycle = 0;
  int pos = 0;
};

// A cell complex whose vertices are derived from the face cycles: the end of
// each dart is identified with the start of its cyclic successor. Complexes
// assembled this way are always surfaces, possibly with boundary.
struct Complex {
  std::vector<FaceCell> faces;
  int edge_count = 0;
  std::vector<int> edge_origin;  // per edge: id in the originating complex, or -1

  // Derived by finalize().
  std::vector<std::vector<EdgeUse>> uses;  // per edge, 1 or 2 entries
  std::vector<int> vertex_of_slot;         // per edge-end slot
  int vertex_count = 0;
  std::vector<std::vector<int>> vertex_slots;
  std::vector<bool> vertex_on_boundary;
  std::vector<int> face_component;
  int component_count = 0;
  std::vector<std::vector<int>> boundary_circles;  // oriented dart walks
  std::vector<int> circle_component;
  std::vector<bool> component_orientable;

  void finalize();

  [[nodiscard]] int dart_at(const EdgeUse& u) const { return faces[u.face].cycles[u.cycle][u.pos]; }
  [[nodiscard]] bool edge_on_boundary(int e) const { return uses[e].size() == 1; }
  // Vertex at the corner following position `pos` of a cycle.
  [[nodiscard]] int corner_vertex(int face, int cycle, int pos) const;
  [[nodiscard]] long long chi(int component = -1) const;
  [[nodiscard]] int circles_in_component(int component) const;
  [[nodiscard]] std::vector<int> component_face_list(int component) const;
  [[nodiscard]] bool orientable(int component) const;
  // 2 - 2g - b = chi for an orientable component with b boundary circles.
  [[nodiscard]] long long genus(int component) const;
};

struct SubcomplexResult {
  Complex complex;
  std::vector<int> new_face_id;  // per old face, -1 if dropped
  std::vector<int> new_edge_id;  // per old edge, -1 if unused
};
SubcomplexResult subcomplex(const Complex& c, const std::vector<int>& face_ids);

struct CutResult {
  Complex complex;
  // Per requested edge: the retained id and the duplicate id (-1 when the
  // edge was already on the boundary, which cutting leaves untouched).
  std::vector<std::array<int, 2>> sides;
};
CutResult cut(const Complex& c, const std::vector<int>& edge_ids);

// A point where a curve crosses an edge: crossing `index` counted from the
// edge tail, approached through the `use`-th occurrence of the edge in the
// chord's face (cycle order).
struct CurvePoint {
  int edge = 0;
  int index = 0;
  int use = 0;
  bool operator==(const CurvePoint&) const = default;
};

struct Chord {
  int face = 0;
  CurvePoint entry;
  CurvePoint exit;
};

using Curve = std::vector<Chord>;

struct RefineResult {
  Complex complex;
  std::vector<std::vector<int>> curve_edges;  // per curve, its chord edges in order
  std::vector<std::vector<int>> edge_segments;  // per old edge, segment ids tail -> head
};
// Subdivide edges at the curve crossing points and carve the faces along the
// chords, so every curve becomes a cycle of edges of the result.
RefineResult refine(const Complex& c, const std::vector<Curve>& curves, const std::string& stage);

// A closed curve (given by the edges it consists of) is inessential when it
// bounds a disk: cutting along it leaves a disk component touching the cut.
bool is_essential(const Complex& c, const std::vector<int>& curve_edge_ids);
bool chord_curve_essential(const Complex& c, const Curve& curve, const std::string& stage);

}  // namespace pcert
