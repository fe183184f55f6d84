#include "pcert/normal_surface.hpp"

#include <algorithm>
#include <string>

#include "pcert/error.hpp"

namespace pcert {

namespace {

constexpr const char* kStage = "coordinates";
constexpr long long kMaxDisks = 500000;

// Boundary crossing slots of a quad of type q, in the order
// (a,x), (a,y), (b,x), (b,y) where P_q = {a=0, b=q+1} and x < y are the
// remaining two vertices.
std::array<int, 4> quad_slot_edges(int q) {
  const int b = q + 1;
  int x = -1;
  int y = -1;
  for (int u = 1; u < 4; ++u) {
    if (u == b) continue;
    if (x < 0) {
      x = u;
    } else {
      y = u;
    }
  }
  return {edge_index(0, x), edge_index(0, y), edge_index(b, x), edge_index(b, y)};
}

long long parse_count(const json& arr, std::size_t i) {
  if (!arr[i].is_number_integer()) {
    throw InputError(kStage, "coordinate entries must be integers");
  }
  return arr[i].get<long long>();
}

}  // namespace

int quad_partner(int q, int v) {
  const int b = q + 1;
  if (v == 0) return b;
  if (v == b) return 0;
  for (int u = 1; u < 4; ++u) {
    if (u != b && u != v) return u;
  }
  return -1;
}

bool in_quad_pair(int q, int v) { return v == 0 || v == q + 1; }

bool quad_crosses_edge(int q, int e) {
  const auto [u, w] = kEdgeVerts[e];
  return in_quad_pair(q, u) != in_quad_pair(q, w);
}

std::array<int, 2> quad_axis_edges(int q) {
  const int b = q + 1;
  int x = -1;
  int y = -1;
  for (int u = 1; u < 4; ++u) {
    if (u == b) continue;
    if (x < 0) {
      x = u;
    } else {
      y = u;
    }
  }
  return {edge_index(0, b), edge_index(x, y)};
}

int disk_slot_count(DiskKind kind) {
  switch (kind) {
    case DiskKind::tri:
      return 3;
    case DiskKind::quad:
      return 4;
    case DiskKind::oct:
      return 8;
  }
  return 0;
}

int disk_slot_edge(DiskKind kind, int type, int slot) {
  if (kind == DiskKind::tri) {
    int seen = 0;
    for (int u = 0; u < 4; ++u) {
      if (u == type) continue;
      if (seen == slot) return edge_index(type, u);
      ++seen;
    }
    throw InternalError("bad triangle crossing slot");
  }
  if (kind == DiskKind::quad) {
    if (slot < 0 || slot >= 4) throw InternalError("bad quad crossing slot");
    return quad_slot_edges(type)[slot];
  }
  if (slot >= 0 && slot < 4) return quad_slot_edges(type)[slot];
  if (slot == 4 || slot == 5) return quad_axis_edges(type)[0];
  if (slot == 6 || slot == 7) return quad_axis_edges(type)[1];
  throw InternalError("bad octagon crossing slot");
}

NormalCoordinates parse_coordinates(const json& raw) {
  check_fields(raw, kStage, {"tets"}, {"exceptional"});
  NormalCoordinates out;
  const json& tets = get_array(raw, "tets", kStage);
  if (tets.empty()) {
    throw InputError(kStage, "a coordinate vector needs at least one tetrahedron entry");
  }
  for (const json& tj : tets) {
    check_fields(tj, kStage, {"tri", "quad"});
    NormalCoordinates::TetCoords tc;
    const json& tri = get_array(tj, "tri", kStage);
    if (tri.size() != 4) {
      throw InputError(kStage, "field 'tri' must list four counts");
    }
    for (std::size_t i = 0; i < 4; ++i) tc.tri[i] = parse_count(tri, i);
    const json& quad = get_array(tj, "quad", kStage);
    if (quad.size() != 3) {
      throw InputError(kStage, "field 'quad' must list three counts");
    }
    for (std::size_t i = 0; i < 3; ++i) tc.quad[i] = parse_count(quad, i);
    out.tets.push_back(tc);
  }
  if (raw.contains("exceptional")) {
    const json& ej = get_object(raw, "exceptional", kStage);
    Exceptional exc;
    const std::string kind = get_string(ej, "kind", kStage);
    if (kind == "octagon") {
      check_fields(ej, kStage, {"tet", "kind", "type"});
      exc.kind = ExceptionalKind::octagon;
      const long long type = get_int(ej, "type", kStage);
      if (type < 1 || type > 3) {
        throw InputError(kStage, "octagon type must be 1, 2, or 3");
      }
      exc.oct_type = static_cast<int>(type - 1);
    } else if (kind == "tube") {
      check_fields(ej, kStage, {"tet", "kind", "piece", "position"});
      exc.kind = ExceptionalKind::tube;
      const json& pj = get_object(ej, "piece", kStage);
      if (pj.contains("tri_vertex") == pj.contains("quad_type")) {
        throw InputError(kStage, "tube piece must carry exactly one of 'tri_vertex' or 'quad_type'");
      }
      if (pj.contains("tri_vertex")) {
        check_fields(pj, kStage, {"tri_vertex"});
        const long long v = get_int(pj, "tri_vertex", kStage);
        if (v < 0 || v > 3) {
          throw InputError(kStage, "tube tri_vertex must lie in 0..3");
        }
        exc.piece = TubePiece{true, static_cast<int>(v)};
      } else {
        check_fields(pj, kStage, {"quad_type"});
        const long long q = get_int(pj, "quad_type", kStage);
        if (q < 0 || q > 2) {
          throw InputError(kStage, "tube quad_type must lie in 0..2");
        }
        exc.piece = TubePiece{false, static_cast<int>(q)};
      }
      exc.position = get_int(ej, "position", kStage);
      if (exc.position < 0) {
        throw InputError(kStage, "tube position out of range");
      }
    } else {
      throw InputError(kStage, "unknown exceptional kind '" + kind + "'");
    }
    exc.tet = static_cast<int>(get_int(ej, "tet", kStage));
    out.exceptional = exc;
  }
  return out;
}

json coordinates_to_json(const NormalCoordinates& coords) {
  json out;
  out["tets"] = json::array();
  for (const auto& tc : coords.tets) {
    json tj;
    tj["tri"] = tc.tri;
    tj["quad"] = tc.quad;
    out["tets"].push_back(tj);
  }
  if (coords.exceptional) {
    const Exceptional& exc = *coords.exceptional;
    json ej;
    ej["tet"] = exc.tet;
    if (exc.kind == ExceptionalKind::octagon) {
      ej["kind"] = "octagon";
      ej["type"] = exc.oct_type + 1;
    } else {
      ej["kind"] = "tube";
      json pj;
      if (exc.piece.is_tri) {
        pj["tri_vertex"] = exc.piece.index;
      } else {
        pj["quad_type"] = exc.piece.index;
      }
      ej["piece"] = pj;
      ej["position"] = exc.position;
    }
    out["exceptional"] = ej;
  }
  return out;
}

long long ValidatedSurface::arcs(int tet, int face, int corner) const {
  const auto& tc = coords.tets[tet];
  long long n = tc.tri[corner];
  for (int q = 0; q < 3; ++q) {
    if (quad_partner(q, face) == corner) n += tc.quad[q];
  }
  if (coords.exceptional && coords.exceptional->tet == tet) {
    const Exceptional& exc = *coords.exceptional;
    if (exc.kind == ExceptionalKind::octagon) {
      if (quad_partner(exc.oct_type, face) != corner) n += 1;
    } else if (exc.piece.is_tri) {
      if (corner == exc.piece.index) n += 2;
    } else {
      if (quad_partner(exc.piece.index, face) == corner) n += 2;
    }
  }
  return n;
}

std::vector<Crossing> ValidatedSurface::wedge_order(const EdgeWedge& w) const {
  std::vector<Crossing> order = local_order[w.tet][w.edge()];
  if (w.u > w.w) std::reverse(order.begin(), order.end());
  return order;
}

ValidatedSurface validate_coordinates(const Triangulation& tri, const NormalCoordinates& coords) {
  if (static_cast<int>(coords.tets.size()) != tri.t()) {
    throw InputError(kStage, "coordinate vector does not match the number of tetrahedra");
  }
  long long total = 0;
  for (const auto& tc : coords.tets) {
    for (long long n : tc.tri) {
      if (n < 0) throw InputError(kStage, "negative coordinate");
      total += n;
    }
    int quad_types = 0;
    for (long long n : tc.quad) {
      if (n < 0) throw InputError(kStage, "negative coordinate");
      if (n > 0) ++quad_types;
      total += n;
    }
    if (quad_types > 1) {
      throw InputError(kStage, "two quad types in one tetrahedron");
    }
  }
  if (coords.exceptional) {
    const Exceptional& exc = *coords.exceptional;
    if (exc.tet < 0 || exc.tet >= tri.t()) {
      throw InputError(kStage, "exceptional piece references a tetrahedron out of range");
    }
    const auto& tc = coords.tets[exc.tet];
    if (exc.kind == ExceptionalKind::octagon) {
      for (long long n : tc.quad) {
        if (n > 0) throw InputError(kStage, "octagon tetrahedron also carries quads");
      }
      total += 1;
    } else {
      if (!exc.piece.is_tri) {
        for (int q = 0; q < 3; ++q) {
          if (q != exc.piece.index && tc.quad[q] > 0) {
            throw InputError(kStage, "two quad types in one tetrahedron");
          }
        }
      }
      const long long count =
          exc.piece.is_tri ? tc.tri[exc.piece.index] : tc.quad[exc.piece.index];
      if (exc.position > count) {
        throw InputError(kStage, "tube position out of range");
      }
      total += 2;
    }
  }
  if (total > kMaxDisks) {
    throw InputError(kStage, "coordinates too large to materialize");
  }

  ValidatedSurface surf;
  surf.tri = &tri;
  surf.coords = coords;

  // Materialize disk instances tet by tet: triangle stacks (vertex order,
  // inner disks first), quad stacks (pair side first), then the octagon.
  // A tubed piece contributes its two disks at the merged stack slot.
  surf.local_order.resize(coords.tets.size());
  std::vector<std::array<std::vector<int>, 4>> tri_stack(coords.tets.size());
  std::vector<std::array<std::vector<int>, 3>> quad_stack(coords.tets.size());
  std::vector<int> oct_of(coords.tets.size(), -1);
  for (int t = 0; t < tri.t(); ++t) {
    const auto& tc = coords.tets[t];
    const Exceptional* exc =
        (coords.exceptional && coords.exceptional->tet == t) ? &*coords.exceptional : nullptr;
    auto emit_stack = [&](DiskKind kind, int type, long long count, bool tubed,
                          long long tube_pos) {
      std::vector<int>& ids =
          kind == DiskKind::tri ? tri_stack[t][type] : quad_stack[t][type];
      long long ordinary = 0;
      const long long slots = count + (tubed ? 1 : 0);
      for (long long s = 0; s < slots; ++s) {
        if (tubed && s == tube_pos) {
          ids.push_back(static_cast<int>(surf.disks.size()));
          surf.disks.push_back({kind, t, type, s, 1});
          ids.push_back(static_cast<int>(surf.disks.size()));
          surf.disks.push_back({kind, t, type, s, 2});
        } else {
          ids.push_back(static_cast<int>(surf.disks.size()));
          surf.disks.push_back({kind, t, type, ordinary++, 0});
        }
      }
    };
    for (int v = 0; v < 4; ++v) {
      const bool tubed =
          exc && exc->kind == ExceptionalKind::tube && exc->piece.is_tri && exc->piece.index == v;
      emit_stack(DiskKind::tri, v, tc.tri[v], tubed, exc ? exc->position : 0);
    }
    for (int q = 0; q < 3; ++q) {
      const bool tubed =
          exc && exc->kind == ExceptionalKind::tube && !exc->piece.is_tri && exc->piece.index == q;
      emit_stack(DiskKind::quad, q, tc.quad[q], tubed, exc ? exc->position : 0);
    }
    if (exc && exc->kind == ExceptionalKind::octagon) {
      oct_of[t] = static_cast<int>(surf.disks.size());
      surf.disks.push_back({DiskKind::oct, t, exc->oct_type, 0, 0});
    }
  }

  // Crossing order along each tet edge from its lower to its higher vertex:
  // triangles at the lower vertex (innermost first), then the middle band
  // (octagon axis crossings or the quad stack, oriented away from the pair
  // side), then triangles at the higher vertex (innermost last).
  auto slot_on_edge = [&](int disk_id, int e, bool near_low) {
    const DiskInstance& d = surf.disks[disk_id];
    const int n_slots = disk_slot_count(d.kind);
    for (int s = 0; s < n_slots; ++s) {
      if (disk_slot_edge(d.kind, d.type, s) != e) continue;
      if (d.kind == DiskKind::oct && s >= 4) {
        // Axis slots come in near-end pairs (near-a, near-b) and
        // (near-x, near-y) with the lower vertex's slot first.
        const bool is_near_low = (s == 4 || s == 6);
        if (is_near_low != near_low) continue;
      }
      return Crossing{disk_id, s};
    }
    throw InternalError("disk does not cross the requested edge");
  };
  for (int t = 0; t < tri.t(); ++t) {
    for (int e = 0; e < 6; ++e) {
      const auto [lo, hi] = kEdgeVerts[e];
      std::vector<Crossing>& order = surf.local_order[t][e];
      for (int id : tri_stack[t][lo]) order.push_back(slot_on_edge(id, e, true));
      if (oct_of[t] >= 0) {
        const int q = surf.disks[oct_of[t]].type;
        const auto axes = quad_axis_edges(q);
        if (e == axes[0] || e == axes[1]) {
          order.push_back(slot_on_edge(oct_of[t], e, true));
          order.push_back(slot_on_edge(oct_of[t], e, false));
        } else {
          order.push_back(slot_on_edge(oct_of[t], e, true));
        }
      }
      for (int q = 0; q < 3; ++q) {
        if (quad_stack[t][q].empty() || !quad_crosses_edge(q, e)) continue;
        std::vector<int> ids = quad_stack[t][q];
        if (!in_quad_pair(q, lo)) std::reverse(ids.begin(), ids.end());
        for (int id : ids) order.push_back(slot_on_edge(id, e, true));
      }
      for (auto it = tri_stack[t][hi].rbegin(); it != tri_stack[t][hi].rend(); ++it) {
        order.push_back(slot_on_edge(*it, e, true));
      }
    }
  }

  // Matching: glued face corners must carry equally many arcs.
  for (const FaceGluing& g : tri.gluings) {
    for (int va : kFaceVerts[g.face_a]) {
      const int vb = g.image_vertex(va);
      const long long na = surf.arcs(g.tet_a, g.face_a, va);
      const long long nb = surf.arcs(g.tet_b, g.face_b, vb);
      if (na != nb) {
        throw InputError(
            kStage, "matching-equation violation at gluing (" + std::to_string(g.tet_a) + "," +
                        std::to_string(g.face_a) + ")-(" + std::to_string(g.tet_b) + "," +
                        std::to_string(g.face_b) + "): corner " + std::to_string(va) + " meets " +
                        std::to_string(na) + " arcs against " + std::to_string(nb));
      }
    }
  }

  // After matching holds, every wedge of an edge class must report the same
  // number of crossings.
  surf.class_points.assign(tri.edge_classes.size(), 0);
  for (const EdgeClass& ec : tri.edge_classes) {
    const std::size_t n = surf.local_order[ec.wedges[0].tet][ec.wedges[0].edge()].size();
    for (const EdgeWedge& w : ec.wedges) {
      if (surf.local_order[w.tet][w.edge()].size() != n) {
        throw InternalError("inconsistent crossing counts along an edge class");
      }
    }
    surf.class_points[ec.id] = static_cast<long long>(n);
  }
  return surf;
}

std::vector<EdgePoint> order_along_edge(const ValidatedSurface& surf, int edge_class_id) {
  if (edge_class_id < 0 || edge_class_id >= static_cast<int>(surf.tri->edge_classes.size())) {
    throw InputError(kStage, "edge class id out of range");
  }
  const EdgeClass& ec = surf.tri->edge_classes[edge_class_id];
  std::vector<std::vector<Crossing>> per_wedge;
  per_wedge.reserve(ec.wedges.size());
  for (const EdgeWedge& w : ec.wedges) per_wedge.push_back(surf.wedge_order(w));
  std::vector<EdgePoint> points(surf.class_points[edge_class_id]);
  for (std::size_t p = 0; p < points.size(); ++p) {
    points[p].reserve(per_wedge.size());
    for (const auto& order : per_wedge) points[p].push_back(order[p]);
  }
  return points;
}

}  // namespace pcert
