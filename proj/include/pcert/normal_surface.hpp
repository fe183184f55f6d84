#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcert/json_util.hpp"
#include "pcert/triangulation.hpp"

namespace pcert {

// Quad type q in {0,1,2} separates the vertex pair P_q = {0, q+1} from the
// complementary pair. quad_partner(q, v) is the vertex paired with v under
// that split.
int quad_partner(int q, int v);
bool in_quad_pair(int q, int v);
bool quad_crosses_edge(int q, int e);
// {edge joining P_q, edge joining the complementary pair}
std::array<int, 2> quad_axis_edges(int q);

enum class DiskKind { tri, quad, oct };

struct TubePiece {
  bool is_tri = true;
  int index = 0;  // tri vertex or quad type
};

enum class ExceptionalKind { octagon, tube };

struct Exceptional {
  int tet = 0;
  ExceptionalKind kind = ExceptionalKind::octagon;
  int oct_type = 0;  // internal 0..2; the JSON field "type" is 1..3
  TubePiece piece;
  long long position = 0;  // 0-based slot within the merged parallel stack
};

struct NormalCoordinates {
  struct TetCoords {
    std::array<long long, 4> tri{0, 0, 0, 0};
    std::array<long long, 3> quad{0, 0, 0};
  };
  std::vector<TetCoords> tets;
  std::optional<Exceptional> exceptional;
};

NormalCoordinates parse_coordinates(const json& raw);
json coordinates_to_json(const NormalCoordinates& coords);

// One materialized normal disk. The two disks of a tubed piece carry
// tube_half 1 (nearer the triangle vertex / quad pair side) and 2; both use
// the merged stack slot as `stack`.
struct DiskInstance {
  DiskKind kind = DiskKind::tri;
  int tet = 0;
  int type = 0;  // tri vertex / quad type / oct type
  long long stack = 0;
  int tube_half = 0;  // 0 ordinary, 1 lower tube disk, 2 upper tube disk
};

// A crossing of a disk boundary with a tet edge: disk instance id plus the
// boundary crossing slot within that disk (3 for triangles, 4 for quads,
// 8 for octagons).
struct Crossing {
  int disk = -1;
  int slot = -1;
  bool operator==(const Crossing&) const = default;
};

int disk_slot_count(DiskKind kind);
// The tet edge crossed at a given slot of a disk of this kind/type.
int disk_slot_edge(DiskKind kind, int type, int slot);

struct ValidatedSurface {
  const Triangulation* tri = nullptr;
  NormalCoordinates coords;
  std::vector<DiskInstance> disks;
  // Crossings along each tet edge, ordered from the lower to the higher
  // endpoint of kEdgeVerts[e].
  std::vector<std::array<std::vector<Crossing>, 6>> local_order;
  std::vector<long long> class_points;  // intersection points per edge class

  [[nodiscard]] long long arcs(int tet, int face, int corner) const;
  // Crossing order along the class direction of a wedge.
  [[nodiscard]] std::vector<Crossing> wedge_order(const EdgeWedge& w) const;
};

ValidatedSurface validate_coordinates(const Triangulation& tri, const NormalCoordinates& coords);

// One intersection point of the surface with an edge class: the disk corner
// meeting it in each wedge of the class walk (same index order as wedges).
using EdgePoint = std::vector<Crossing>;
std::vector<EdgePoint> order_along_edge(const ValidatedSurface& surf, int edge_class_id);

// χ(Σ) by cell count of the induced complex (defined with the builder).
long long euler_characteristic(const Triangulation& tri, const NormalCoordinates& coords);

}  // namespace pcert
