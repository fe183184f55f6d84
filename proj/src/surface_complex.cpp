#include "pcert/surface_complex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pcert/error.hpp"

namespace pcert {

namespace {

constexpr const char* kStageSurface = "surface";
constexpr const char* kStageInterchange = "interchange";

struct ParityUnionFind {
  std::vector<int> parent;
  std::vector<int> parity;  // relative to parent

  explicit ParityUnionFind(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  }

  // Returns false when the requested relation contradicts an earlier one.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

// One step of a piece's boundary walk: the truncation at crossing `slot`,
// then the arc to the next crossing, running through tet face `face` and
// cutting corner `corner`.
struct WalkStep {
  int slot;
  int face;
  int corner;
};

std::array<int, 2> complement_pair(int q) {
  std::array<int, 2> out{};
  int n = 0;
  for (int v = 1; v < 4; ++v) {
    if (v != q + 1) out[n++] = v;
  }
  return out;
}

std::vector<WalkStep> piece_walk(DiskKind kind, int type) {
  if (kind == DiskKind::tri) {
    std::array<int, 3> o{};
    int n = 0;
    for (int u = 0; u < 4; ++u) {
      if (u != type) o[n++] = u;
    }
    return {{0, o[2], type}, {1, o[0], type}, {2, o[1], type}};
  }
  const int b = type + 1;
  const auto [x, y] = complement_pair(type);
  if (kind == DiskKind::quad) {
    return {{0, b, 0}, {1, x, y}, {3, 0, b}, {2, y, x}};
  }
  return {{4, y, 0}, {0, b, x}, {6, 0, x}, {2, y, b},
          {5, x, b}, {3, 0, y}, {7, b, y}, {1, x, 0}};
}

// Every piece carries a reference transverse side: triangles face their
// vertex, quads and octagons face the pair P_q, tube disks face the region
// between the two halves, vertex disks face the tail of their edge class.
// These two predicates express that side locally, at a crossing (does it
// point toward the class tail?) and along an arc (does it point toward the
// cut corner?), which is what gluing the pieces compares.

bool side1_toward_tail(const DiskInstance& d, int slot, int u, int w) {
  if (d.tube_half == 1) {
    if (d.kind == DiskKind::tri) return d.type == w;
    return !in_quad_pair(d.type, u);
  }
  if (d.tube_half == 2) {
    if (d.kind == DiskKind::tri) return d.type == u;
    return in_quad_pair(d.type, u);
  }
  switch (d.kind) {
    case DiskKind::tri:
      return d.type == u;
    case DiskKind::quad:
      return in_quad_pair(d.type, u);
    case DiskKind::oct:
      break;
  }
  if (slot < 4) return in_quad_pair(d.type, u);
  const auto [x, y] = complement_pair(d.type);
  if (slot == 4) return u == 0;
  if (slot == 5) return u == d.type + 1;
  if (slot == 6) return w == x;
  return w == y;
}

int side1_rho(const DiskInstance& d, int corner) {
  if (d.tube_half == 1) {
    if (d.kind == DiskKind::tri) return 0;
    return in_quad_pair(d.type, corner) ? 0 : 1;
  }
  if (d.tube_half == 2) {
    if (d.kind == DiskKind::tri) return 1;
    return in_quad_pair(d.type, corner) ? 1 : 0;
  }
  if (d.kind == DiskKind::tri) return 1;
  return in_quad_pair(d.type, corner) ? 1 : 0;
}

// Orientation parity labels: within each orientable component, 0 for faces
// oriented coherently with the smallest face id, 1 for the rest.
std::vector<int> orientation_parities(const Complex& c) {
  const int nf = static_cast<int>(c.faces.size());
  ParityUnionFind uf(nf);
  for (int e = 0; e < c.edge_count; ++e) {
    if (c.uses[e].size() != 2) continue;
    const int d0 = c.dart_at(c.uses[e][0]);
    const int d1 = c.dart_at(c.uses[e][1]);
    const int rel = dart_dir(d0) == dart_dir(d1) ? 1 : 0;
    if (!uf.unite(c.uses[e][0].face, c.uses[e][1].face, rel)) {
      // Non-orientable component; its faces keep parity 0 below.
    }
  }
  std::vector<int> offset(c.component_count, -1);
  std::vector<int> out(nf, 0);
  for (int f = 0; f < nf; ++f) {
    const int comp = c.face_component[f];
    if (!c.component_orientable[comp]) continue;
    const int p = uf.find(f).second;
    if (offset[comp] < 0) offset[comp] = p;  // faces scanned in id order
    out[f] = p ^ offset[comp];
  }
  return out;
}

void fill_family_index(SurfaceComplex& sc) {
  sc.family_of.assign(sc.face_count(), -1);
  sc.position_in_family.assign(sc.face_count(), -1);
  for (int i = 0; i < static_cast<int>(sc.families.size()); ++i) {
    const auto& fam = sc.families[i];
    for (int j = 0; j < static_cast<int>(fam.size()); ++j) {
      sc.family_of[fam[j]] = i;
      sc.position_in_family[fam[j]] = j;
    }
  }
}

}  // namespace

SurfaceComplex build_from_coordinates(const Triangulation& tri, const ValidatedSurface& surf) {
  SurfaceComplex sc;
  sc.synthetic = false;
  sc.declared_t = tri.t();

  const int disk_count = static_cast<int>(surf.disks.size());

  // Face ids: normal pieces in disk order (a tube's two disks share one
  // face), then vertex disks by (edge class, position).
  std::vector<int> disk_face(disk_count, -1);
  std::vector<FaceCell> faces;
  std::vector<FaceProvenance> provenance;
  for (int i = 0; i < disk_count; ++i) {
    const DiskInstance& d = surf.disks[i];
    if (d.tube_half == 2) {
      disk_face[i] = disk_face[i - 1];
      continue;
    }
    FaceCell cell;
    if (d.tube_half == 1) {
      cell.kind = FaceKind::tubed_piece;
    } else {
      cell.kind = d.kind == DiskKind::tri    ? FaceKind::truncated_triangle
                  : d.kind == DiskKind::quad ? FaceKind::truncated_quad
                                             : FaceKind::truncated_octagon;
    }
    disk_face[i] = static_cast<int>(faces.size());
    cell.origin = disk_face[i];
    faces.push_back(std::move(cell));
    FaceProvenance p;
    p.tet = d.tet;
    p.disk = d.kind;
    p.type = d.type;
    p.stack = d.stack;
    p.tube_half = d.tube_half;
    provenance.push_back(p);
  }

  const int class_count = static_cast<int>(tri.edge_classes.size());
  std::vector<std::vector<int>> vd_face(class_count);
  for (int cls = 0; cls < class_count; ++cls) {
    vd_face[cls].resize(static_cast<size_t>(surf.class_points[cls]), -1);
    for (long long p = 0; p < surf.class_points[cls]; ++p) {
      FaceCell cell;
      cell.kind = FaceKind::vertex_disk;
      cell.origin = static_cast<int>(faces.size());
      vd_face[cls][static_cast<size_t>(p)] = cell.origin;
      faces.push_back(std::move(cell));
      FaceProvenance pr;
      pr.edge_class = cls;
      pr.position = p;
      provenance.push_back(pr);
    }
  }

  // Local position of every crossing slot of every disk.
  std::array<std::pair<int, int>, 8> no_slots;
  no_slots.fill({-1, -1});
  std::vector<std::array<std::pair<int, int>, 8>> slot_at(disk_count, no_slots);
  for (int t = 0; t < tri.t(); ++t) {
    for (int e = 0; e < 6; ++e) {
      const auto& line = surf.local_order[t][e];
      for (int i = 0; i < static_cast<int>(line.size()); ++i) {
        slot_at[line[i].disk][line[i].slot] = {e, i};
      }
    }
  }

  struct TruncRec {
    int id = -1;
    int f_tail = -1;  // tet face of the arc arriving at the crossing
    int f_head = -1;  // tet face of the arc leaving it
  };
  std::map<std::tuple<int, long long, int>, TruncRec> trunc_edges;
  struct ArcRec {
    int id = -1;
    int tail_edge = -1;  // tet edge of the creator's start crossing
    int rho = 0;
    int face = -1;  // creator's face cell
    int uses = 0;
  };
  std::map<std::tuple<int, int, int, long long>, ArcRec> arc_edges;
  int edge_count = 0;
  struct SideRelation {
    int face_a;
    int face_b;
    int rel;
  };
  std::vector<SideRelation> relations;

  // Maps a vertex of tet face (t, f) through its gluing.
  const auto glued_vertex = [&](const FaceGluing& g, bool from_a, int v) {
    return from_a ? g.image_vertex(v) : g.preimage_vertex(v);
  };

  for (int d = 0; d < disk_count; ++d) {
    const DiskInstance& disk = surf.disks[d];
    const int t = disk.tet;
    const auto steps = piece_walk(disk.kind, disk.type);
    const int m = static_cast<int>(steps.size());
    std::vector<int> cycle;
    cycle.reserve(2 * m);
    for (int i = 0; i < m; ++i) {
      const auto [e, li] = slot_at[d][steps[i].slot];
      if (e < 0) throw InternalError("disk crossing slot missing from the edge order");
      const int n = static_cast<int>(surf.local_order[t][e].size());
      const int cls = tri.edge_class_of[t][e];
      const int wi = tri.wedge_index_of[t][e];
      const long long pos = tri.edge_dir_matches[t][e] ? li : n - 1 - li;
      const EdgeWedge& wedge = tri.edge_classes[cls].wedges[wi];

      const auto [prev_it, inserted] =
          trunc_edges.try_emplace(std::make_tuple(cls, pos, wi), TruncRec{});
      if (!inserted) throw InternalError("truncation edge created twice");
      TruncRec& tr = prev_it->second;
      tr.id = edge_count++;
      tr.f_tail = steps[(i + m - 1) % m].face;
      tr.f_head = steps[i].face;
      cycle.push_back(make_dart(tr.id, 0));
      const bool toward_tail = side1_toward_tail(disk, steps[i].slot, wedge.u, wedge.w);
      relations.push_back(
          {disk_face[d], vd_face[cls][static_cast<size_t>(pos)], toward_tail ? 0 : 1});

      // The arc from this crossing to the next, at its depth from the cut
      // corner (the prefix property makes the depth the same at both ends).
      const int corner = steps[i].corner;
      const int lo = kEdgeVerts[e][0];
      const long long depth = corner == lo ? li : n - 1 - li;
      {
        const auto [e2, li2] = slot_at[d][steps[(i + 1) % m].slot];
        const int n2 = static_cast<int>(surf.local_order[t][e2].size());
        const long long depth2 = corner == kEdgeVerts[e2][0] ? li2 : n2 - 1 - li2;
        if (depth != depth2) throw InternalError("arc depth mismatch between its endpoints");
      }

      const int f = steps[i].face;
      const int gi = tri.gluing_of_face[t][f];
      int key_tet = t, key_face = f, key_corner = corner;
      int my_edge = e;
      if (gi >= 0) {
        const FaceGluing& g = tri.gluings[gi];
        const bool from_a = g.tet_a == t && g.face_a == f;
        const int other_tet = from_a ? g.tet_b : g.tet_a;
        const int other_face = from_a ? g.face_b : g.face_a;
        if (std::make_pair(other_tet, other_face) < std::make_pair(t, f)) {
          key_tet = other_tet;
          key_face = other_face;
          key_corner = glued_vertex(g, from_a, corner);
          my_edge = edge_index(glued_vertex(g, from_a, kEdgeVerts[e][0]),
                               glued_vertex(g, from_a, kEdgeVerts[e][1]));
        }
      }
      ArcRec& ar = arc_edges[std::make_tuple(key_tet, key_face, key_corner, depth)];
      const int rho = side1_rho(disk, corner);
      if (ar.uses == 0) {
        ar.id = edge_count++;
        ar.tail_edge = my_edge;
        ar.rho = rho;
        ar.face = disk_face[d];
        ar.uses = 1;
        cycle.push_back(make_dart(ar.id, 0));
      } else if (ar.uses == 1) {
        ar.uses = 2;
        relations.push_back({ar.face, disk_face[d], ar.rho == rho ? 0 : 1});
        cycle.push_back(make_dart(ar.id, my_edge == ar.tail_edge ? 0 : 1));
      } else {
        throw InternalError("arc edge used more than twice");
      }
    }
    faces[disk_face[d]].cycles.push_back(std::move(cycle));
  }

  // Vertex disks: one cycle of truncation edges per intersection point,
  // closed by a free edge when the class is a boundary class.
  for (int cls = 0; cls < class_count; ++cls) {
    const EdgeClass& ec = tri.edge_classes[cls];
    const int degree = static_cast<int>(ec.wedges.size());
    for (long long pos = 0; pos < surf.class_points[cls]; ++pos) {
      std::vector<int> cycle;
      cycle.reserve(degree + 1);
      for (int wi = 0; wi < degree; ++wi) {
        const auto it = trunc_edges.find(std::make_tuple(cls, pos, wi));
        if (it == trunc_edges.end()) throw InternalError("missing truncation edge at a wedge");
        const TruncRec& tr = it->second;
        const EdgeWedge& wedge = ec.wedges[wi];
        int f_in = wedge.face_in;
        if (f_in < 0) {
          const auto fc = faces_containing_edge(wedge.edge());
          f_in = fc[0] == wedge.face_out ? fc[1] : fc[0];
        }
        if (tr.f_tail != f_in && tr.f_head != f_in) {
          throw InternalError("truncation edge does not meet the expected faces");
        }
        cycle.push_back(make_dart(tr.id, tr.f_tail == f_in ? 0 : 1));
      }
      if (ec.boundary) {
        cycle.push_back(make_dart(edge_count++, 0));
      }
      faces[vd_face[cls][static_cast<size_t>(pos)]].cycles.push_back(std::move(cycle));
    }
  }

  sc.complex.faces = std::move(faces);
  sc.complex.edge_count = edge_count;
  sc.complex.edge_origin.resize(edge_count);
  std::iota(sc.complex.edge_origin.begin(), sc.complex.edge_origin.end(), 0);
  sc.complex.finalize();
  sc.provenance = std::move(provenance);

  ParityUnionFind side_uf(sc.face_count());
  for (const SideRelation& r : relations) {
    if (!side_uf.unite(r.face_a, r.face_b, r.rel)) {
      throw InputError(kStageSurface, "one-sided surface");
    }
  }

  sc.side_parity = orientation_parities(sc.complex);

  // Families: maximal runs of parallel ordinary disks (tubes and octagons
  // are singletons), plus one family per edge class along its direction.
  int i = 0;
  while (i < disk_count) {
    const DiskInstance& head = surf.disks[i];
    int j = i;
    std::vector<int> run;
    while (j < disk_count && surf.disks[j].tet == head.tet && surf.disks[j].kind == head.kind &&
           surf.disks[j].type == head.type) {
      const DiskInstance& dj = surf.disks[j];
      if (dj.tube_half == 1) {
        if (!run.empty()) sc.families.push_back(std::move(run));
        run.clear();
        sc.families.push_back({disk_face[j]});
        j += 2;
        continue;
      }
      run.push_back(disk_face[j]);
      ++j;
    }
    if (!run.empty()) sc.families.push_back(std::move(run));
    i = j;
  }
  for (int cls = 0; cls < class_count; ++cls) {
    if (surf.class_points[cls] == 0) continue;
    sc.families.push_back(vd_face[cls]);
  }
  fill_family_index(sc);
  return sc;
}

long long euler_characteristic(const Triangulation& tri, const NormalCoordinates& coords) {
  const ValidatedSurface surf = validate_coordinates(tri, coords);
  return build_from_coordinates(tri, surf).complex.chi();
}

namespace {

std::vector<int> parse_cycle(const json& raw, long long edge_count, const std::string& stage) {
  if (!raw.is_array() || raw.empty()) {
    throw InputError(stage, "each boundary cycle must be a nonempty array of signed edge ids");
  }
  std::vector<int> cycle;
  cycle.reserve(raw.size());
  for (const auto& entry : raw) {
    if (!entry.is_number_integer()) {
      throw InputError(stage, "boundary entries must be signed edge ids");
    }
    const long long v = entry.get<long long>();
    if (v == 0 || v < -edge_count || v > edge_count) {
      throw InputError(stage, "boundary entry " + std::to_string(v) +
                                  " is not a valid signed edge id");
    }
    const int e = static_cast<int>((v > 0 ? v : -v) - 1);
    cycle.push_back(make_dart(e, v > 0 ? 0 : 1));
  }
  return cycle;
}

}  // namespace

SurfaceComplex build_from_interchange(const json& file) {
  const std::string stage = kStageInterchange;
  check_fields(file, stage, {"faces", "edges", "vertices", "families", "sides"}, {"t"});
  const long long edge_count = get_int(file, "edges", stage);
  const long long vertex_count = get_int(file, "vertices", stage);
  if (edge_count < 0 || vertex_count < 0) {
    throw InputError(stage, "edge and vertex counts must be nonnegative");
  }

  SurfaceComplex sc;
  sc.synthetic = true;
  sc.declared_t = 1;
  if (file.contains("t")) {
    const long long t = get_int(file, "t", stage);
    if (t < 1) throw InputError(stage, "t must be at least 1");
    sc.declared_t = static_cast<int>(t);
  }

  const json& faces_raw = get_array(file, "faces", stage);
  for (const auto& obj : faces_raw) {
    if (!obj.is_object()) throw InputError(stage, "faces entries must be objects");
    check_fields(obj, stage, {"kind", "boundary"}, {});
    FaceCell cell;
    cell.kind = face_kind_from_string(get_string(obj, "kind", stage), stage);
    cell.origin = static_cast<int>(sc.complex.faces.size());
    const json& boundary = get_array(obj, "boundary", stage);
    const bool nested = !boundary.empty() && boundary[0].is_array();
    if (cell.kind == FaceKind::tubed_piece) {
      if (!nested || boundary.size() != 2) {
        throw InputError(stage, "tubed_piece must have exactly two boundary cycles");
      }
      for (const auto& c : boundary) cell.cycles.push_back(parse_cycle(c, edge_count, stage));
    } else {
      if (nested) {
        throw InputError(stage, "only tubed_piece faces may have several boundary cycles");
      }
      cell.cycles.push_back(parse_cycle(boundary, edge_count, stage));
      const size_t len = cell.cycles[0].size();
      const auto require_len = [&](size_t want) {
        if (len != want) {
          throw InputError(stage, std::string(face_kind_name(cell.kind)) + " must have " +
                                      std::to_string(want) + " boundary darts");
        }
      };
      if (cell.kind == FaceKind::truncated_triangle) require_len(6);
      if (cell.kind == FaceKind::truncated_quad) require_len(8);
      if (cell.kind == FaceKind::truncated_octagon) require_len(16);
    }
    sc.complex.faces.push_back(std::move(cell));
  }

  std::vector<int> edge_uses(static_cast<size_t>(edge_count), 0);
  for (const FaceCell& f : sc.complex.faces) {
    for (const auto& cycle : f.cycles) {
      for (int d : cycle) ++edge_uses[static_cast<size_t>(dart_edge(d))];
    }
  }
  for (long long e = 0; e < edge_count; ++e) {
    if (edge_uses[static_cast<size_t>(e)] == 0) {
      throw InputError(stage, "edge e" + std::to_string(e) + " is never used");
    }
    if (edge_uses[static_cast<size_t>(e)] > 2) {
      throw InputError(stage, "edge e" + std::to_string(e) + " is used more than twice");
    }
  }

  sc.complex.edge_count = static_cast<int>(edge_count);
  sc.complex.edge_origin.resize(static_cast<size_t>(edge_count));
  std::iota(sc.complex.edge_origin.begin(), sc.complex.edge_origin.end(), 0);
  sc.complex.finalize();

  if (sc.complex.vertex_count != vertex_count) {
    throw InputError(stage, "vertex count mismatch: file declares " +
                                std::to_string(vertex_count) + ", complex has " +
                                std::to_string(sc.complex.vertex_count));
  }
  for (int v = 0; v < sc.complex.vertex_count; ++v) {
    if (!sc.complex.vertex_on_boundary[v] && sc.complex.vertex_slots[v].size() != 3) {
      throw InputError(stage, "vertex v" + std::to_string(v) + " is not 3-valent");
    }
  }

  const json& families_raw = get_array(file, "families", stage);
  std::vector<int> seen(sc.face_count(), 0);
  for (const auto& fam_raw : families_raw) {
    if (!fam_raw.is_array() || fam_raw.empty()) {
      throw InputError(stage, "families must be nonempty arrays of face ids");
    }
    std::vector<int> fam;
    for (const auto& entry : fam_raw) {
      if (!entry.is_number_integer()) throw InputError(stage, "family entries must be face ids");
      const long long f = entry.get<long long>();
      if (f < 0 || f >= sc.face_count()) {
        throw InputError(stage, "family face id out of range");
      }
      if (seen[static_cast<size_t>(f)]++) {
        throw InputError(stage, "families must partition the faces");
      }
      fam.push_back(static_cast<int>(f));
    }
    if (fam.size() > 1 && fam.back() < fam.front()) std::reverse(fam.begin(), fam.end());
    sc.families.push_back(std::move(fam));
  }
  for (int f = 0; f < sc.face_count(); ++f) {
    if (!seen[f]) throw InputError(stage, "families must partition the faces");
  }
  fill_family_index(sc);

  const json& sides = get_object(file, "sides", stage);
  sc.side_parity.assign(sc.face_count(), -1);
  for (const auto& [key, value] : sides.items()) {
    long long f = -1;
    if (key.size() > 1 && key[0] == 'f') {
      try {
        f = std::stoll(key.substr(1));
      } catch (const std::exception&) {
        f = -1;
      }
    }
    if (f < 0 || f >= sc.face_count() || sc.side_parity[static_cast<size_t>(f)] != -1) {
      throw InputError(stage, "sides must label every face exactly once");
    }
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
        !value[1].is_number_integer()) {
      throw InputError(stage, "side labels must be [1,2] or [2,1]");
    }
    const long long a = value[0].get<long long>(), b = value[1].get<long long>();
    if (a == 1 && b == 2) {
      sc.side_parity[static_cast<size_t>(f)] = 0;
    } else if (a == 2 && b == 1) {
      sc.side_parity[static_cast<size_t>(f)] = 1;
    } else {
      throw InputError(stage, "side labels must be [1,2] or [2,1]");
    }
  }
  for (int f = 0; f < sc.face_count(); ++f) {
    if (sc.side_parity[f] == -1) {
      throw InputError(stage, "sides must label every face exactly once");
    }
  }
  // Side labels must follow a coherent orientation: crossing an interior
  // edge whose darts disagree in direction keeps the label order, matching
  // directions flip it. (Skipped on non-orientable components, where no
  // labeling satisfies this.)
  for (int e = 0; e < sc.complex.edge_count; ++e) {
    if (sc.complex.uses[e].size() != 2) continue;
    const EdgeUse& u0 = sc.complex.uses[e][0];
    const EdgeUse& u1 = sc.complex.uses[e][1];
    if (!sc.complex.component_orientable[sc.complex.face_component[u0.face]]) continue;
    const int rel = dart_dir(sc.complex.dart_at(u0)) == dart_dir(sc.complex.dart_at(u1)) ? 1 : 0;
    if ((sc.side_parity[u0.face] ^ sc.side_parity[u1.face]) != rel) {
      throw InputError(stage, "inconsistent side labels at edge e" + std::to_string(e));
    }
  }
  return sc;
}

json interchange_to_json(const SurfaceComplex& sc) {
  json out = json::object();
  json faces = json::array();
  for (const FaceCell& f : sc.complex.faces) {
    json entry = json::object();
    entry["kind"] = face_kind_name(f.kind);
    const auto encode = [](const std::vector<int>& cycle) {
      json arr = json::array();
      for (int d : cycle) {
        arr.push_back(dart_dir(d) == 0 ? dart_edge(d) + 1 : -(dart_edge(d) + 1));
      }
      return arr;
    };
    if (f.kind == FaceKind::tubed_piece) {
      json cycles = json::array();
      for (const auto& cycle : f.cycles) cycles.push_back(encode(cycle));
      entry["boundary"] = std::move(cycles);
    } else {
      entry["boundary"] = encode(f.cycles[0]);
    }
    faces.push_back(std::move(entry));
  }
  out["faces"] = std::move(faces);
  out["edges"] = sc.complex.edge_count;
  out["vertices"] = sc.complex.vertex_count;
  json families = json::array();
  for (const auto& fam : sc.families) families.push_back(fam);
  out["families"] = std::move(families);
  json sides = json::object();
  for (int f = 0; f < sc.face_count(); ++f) {
    sides["f" + std::to_string(f)] =
        sc.side_parity[f] == 0 ? json::array({1, 2}) : json::array({2, 1});
  }
  out["sides"] = std::move(sides);
  out["t"] = sc.declared_t;
  return out;
}

}  // namespace pcert
