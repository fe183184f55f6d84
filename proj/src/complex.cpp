#include "pcert/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "pcert/error.hpp"

namespace pcert {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Union-find carrying a parity bit to the root; used for orientability.
struct ParityUnionFind {
  std::vector<int> parent;
  std::vector<int> parity;  // relative to parent
  explicit ParityUnionFind(int n) : parent(n), parity(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  }
  // Returns false if the requested relation contradicts the current state.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

}  // namespace

const char* face_kind_name(FaceKind kind) {
  switch (kind) {
    case FaceKind::truncated_triangle:
      return "truncated_triangle";
    case FaceKind::truncated_quad:
      return "truncated_quad";
    case FaceKind::truncated_octagon:
      return "truncated_octagon";
    case FaceKind::tubed_piece:
      return "tubed_piece";
    case FaceKind::vertex_disk:
      return "vertex_disk";
  }
  return "vertex_disk";
}

FaceKind face_kind_from_string(const std::string& name, const std::string& stage) {
  if (name == "truncated_triangle") return FaceKind::truncated_triangle;
  if (name == "truncated_quad") return FaceKind::truncated_quad;
  if (name == "truncated_octagon") return FaceKind::truncated_octagon;
  if (name == "tubed_piece") return FaceKind::tubed_piece;
  if (name == "vertex_disk") return FaceKind::vertex_disk;
  throw InputError(stage, "unknown face kind '" + name + "'");
}

void Complex::finalize() {
  uses.assign(edge_count, {});
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].cycles.empty()) throw InternalError("face without a boundary cycle");
    for (std::size_t ci = 0; ci < faces[f].cycles.size(); ++ci) {
      const auto& cycle = faces[f].cycles[ci];
      if (cycle.empty()) throw InternalError("empty boundary cycle");
      for (std::size_t pi = 0; pi < cycle.size(); ++pi) {
        const int e = dart_edge(cycle[pi]);
        if (e < 0 || e >= edge_count) throw InternalError("dart references a missing edge");
        uses[e].push_back({static_cast<int>(f), static_cast<int>(ci), static_cast<int>(pi)});
      }
    }
  }
  for (int e = 0; e < edge_count; ++e) {
    if (uses[e].empty()) throw InternalError("edge never used by a face");
    if (uses[e].size() > 2) throw InternalError("edge used more than twice");
  }

  // Vertices: identify the end of each dart with the start of its successor.
  UnionFind uf(2 * edge_count);
  for (const FaceCell& face : faces) {
    for (const auto& cycle : face.cycles) {
      const std::size_t n = cycle.size();
      for (std::size_t pi = 0; pi < n; ++pi) {
        uf.unite(dart_end_slot(cycle[pi]), dart_start_slot(cycle[(pi + 1) % n]));
      }
    }
  }
  vertex_of_slot.assign(2 * edge_count, -1);
  std::vector<int> id_of_root(2 * edge_count, -1);
  vertex_count = 0;
  for (int s = 0; s < 2 * edge_count; ++s) {
    const int root = uf.find(s);
    if (id_of_root[root] < 0) id_of_root[root] = vertex_count++;
    vertex_of_slot[s] = id_of_root[root];
  }
  vertex_slots.assign(vertex_count, {});
  for (int s = 0; s < 2 * edge_count; ++s) vertex_slots[vertex_of_slot[s]].push_back(s);

  vertex_on_boundary.assign(vertex_count, false);
  std::vector<int> boundary_partner(2 * edge_count, -1);
  {
    std::vector<std::vector<int>> boundary_slots(vertex_count);
    for (int e = 0; e < edge_count; ++e) {
      if (uses[e].size() != 1) continue;
      boundary_slots[vertex_of_slot[2 * e]].push_back(2 * e);
      boundary_slots[vertex_of_slot[2 * e + 1]].push_back(2 * e + 1);
    }
    for (int v = 0; v < vertex_count; ++v) {
      if (boundary_slots[v].empty()) continue;
      if (boundary_slots[v].size() != 2) {
        throw InternalError("vertex link is neither a path nor a cycle");
      }
      vertex_on_boundary[v] = true;
      boundary_partner[boundary_slots[v][0]] = boundary_slots[v][1];
      boundary_partner[boundary_slots[v][1]] = boundary_slots[v][0];
    }
  }

  // Connected components over faces sharing an edge.
  UnionFind fuf(static_cast<int>(faces.size()));
  for (int e = 0; e < edge_count; ++e) {
    if (uses[e].size() == 2) fuf.unite(uses[e][0].face, uses[e][1].face);
  }
  face_component.assign(faces.size(), -1);
  component_count = 0;
  std::vector<int> comp_of_root(faces.size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const int root = fuf.find(static_cast<int>(f));
    if (comp_of_root[root] < 0) comp_of_root[root] = component_count++;
    face_component[f] = comp_of_root[root];
  }

  // Boundary circles: walk boundary edges through the slot pairing.
  boundary_circles.clear();
  circle_component.clear();
  std::vector<bool> seen(edge_count, false);
  for (int e = 0; e < edge_count; ++e) {
    if (uses[e].size() != 1 || seen[e]) continue;
    std::vector<int> walk;
    int d = make_dart(e, 0);
    do {
      seen[dart_edge(d)] = true;
      walk.push_back(d);
      const int s = boundary_partner[dart_end_slot(d)];
      if (s < 0) throw InternalError("boundary walk fell off the surface");
      const int e2 = s / 2;
      d = make_dart(e2, s == 2 * e2 ? 0 : 1);
    } while (d != walk.front());
    circle_component.push_back(face_component[uses[e][0].face]);
    boundary_circles.push_back(std::move(walk));
  }

  // Orientability: the two uses of an interior edge must run in opposite
  // directions once the faces are coherently oriented.
  ParityUnionFind puf(static_cast<int>(faces.size()));
  component_orientable.assign(component_count, true);
  for (int e = 0; e < edge_count; ++e) {
    if (uses[e].size() != 2) continue;
    const int d0 = dart_at(uses[e][0]);
    const int d1 = dart_at(uses[e][1]);
    const int rel = dart_dir(d0) == dart_dir(d1) ? 1 : 0;
    if (!puf.unite(uses[e][0].face, uses[e][1].face, rel)) {
      component_orientable[face_component[uses[e][0].face]] = false;
    }
  }
}

int Complex::corner_vertex(int face, int cycle, int pos) const {
  return vertex_of_slot[dart_end_slot(faces[face].cycles[cycle][pos])];
}

long long Complex::chi(int component) const {
  long long v = 0;
  for (int i = 0; i < vertex_count; ++i) {
    if (component < 0 ||
        face_component[uses[vertex_slots[i][0] / 2][0].face] == component) {
      ++v;
    }
  }
  long long e = 0;
  for (int i = 0; i < edge_count; ++i) {
    if (component < 0 || face_component[uses[i][0].face] == component) ++e;
  }
  long long f = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (component < 0 || face_component[i] == component) {
      f += 2 - static_cast<long long>(faces[i].cycles.size());
    }
  }
  return v - e + f;
}

int Complex::circles_in_component(int component) const {
  int n = 0;
  for (int comp : circle_component) {
    if (component < 0 || comp == component) ++n;
  }
  return n;
}

std::vector<int> Complex::component_face_list(int component) const {
  std::vector<int> out;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (face_component[f] == component) out.push_back(static_cast<int>(f));
  }
  return out;
}

bool Complex::orientable(int component) const {
  if (component >= 0) return component_orientable[component];
  for (bool ok : component_orientable) {
    if (!ok) return false;
  }
  return true;
}

long long Complex::genus(int component) const {
  if (!orientable(component)) throw InternalError("genus requested for a non-orientable piece");
  const long long rest = 2 - circles_in_component(component) - chi(component);
  if (rest < 0 || rest % 2 != 0) throw InternalError("inconsistent genus computation");
  return rest / 2;
}

SubcomplexResult subcomplex(const Complex& c, const std::vector<int>& face_ids) {
  std::vector<int> ids = face_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  SubcomplexResult out;
  out.new_face_id.assign(c.faces.size(), -1);
  out.new_edge_id.assign(c.edge_count, -1);
  std::vector<bool> edge_used(c.edge_count, false);
  for (int f : ids) {
    if (f < 0 || f >= static_cast<int>(c.faces.size())) {
      throw InternalError("subcomplex face id out of range");
    }
    for (const auto& cycle : c.faces[f].cycles) {
      for (int d : cycle) edge_used[dart_edge(d)] = true;
    }
  }
  int next = 0;
  for (int e = 0; e < c.edge_count; ++e) {
    if (edge_used[e]) {
      out.new_edge_id[e] = next++;
      out.complex.edge_origin.push_back(c.edge_origin[e]);
    }
  }
  out.complex.edge_count = next;
  for (int f : ids) {
    out.new_face_id[f] = static_cast<int>(out.complex.faces.size());
    FaceCell face = c.faces[f];
    for (auto& cycle : face.cycles) {
      for (int& d : cycle) d = make_dart(out.new_edge_id[dart_edge(d)], dart_dir(d));
    }
    out.complex.faces.push_back(std::move(face));
  }
  out.complex.finalize();
  return out;
}

CutResult cut(const Complex& c, const std::vector<int>& edge_ids) {
  std::vector<int> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  CutResult out;
  out.complex.faces = c.faces;
  out.complex.edge_count = c.edge_count;
  out.complex.edge_origin = c.edge_origin;
  for (int e : ids) {
    if (e < 0 || e >= c.edge_count) throw InternalError("cut edge id out of range");
    if (c.uses[e].size() != 2) {
      out.sides.push_back({e, -1});
      continue;
    }
    const int dup = out.complex.edge_count++;
    out.complex.edge_origin.push_back(c.edge_origin[e]);
    const EdgeUse& u = c.uses[e][1];
    int& dart = out.complex.faces[u.face].cycles[u.cycle][u.pos];
    dart = make_dart(dup, dart_dir(dart));
    out.sides.push_back({e, dup});
  }
  out.complex.finalize();
  return out;
}

namespace {

// Resolves a chord endpoint to the `use`-th occurrence of its edge within a
// face, in cycle order.
struct Occurrence {
  int cycle = -1;
  int pos = -1;
};

Occurrence resolve_use(const Complex& c, int face, int edge, int use, const std::string& stage) {
  int seen = 0;
  for (std::size_t ci = 0; ci < c.faces[face].cycles.size(); ++ci) {
    const auto& cycle = c.faces[face].cycles[ci];
    for (std::size_t pi = 0; pi < cycle.size(); ++pi) {
      if (dart_edge(cycle[pi]) != edge) continue;
      if (seen == use) return {static_cast<int>(ci), static_cast<int>(pi)};
      ++seen;
    }
  }
  throw InputError(stage, "chord use ordinal exceeds the face's uses of the edge");
}

}  // namespace

RefineResult refine(const Complex& c, const std::vector<Curve>& curves, const std::string& stage) {
  // Validate the chords and collect the crossing points per edge.
  struct Record {
    int face;
    Occurrence occ;
    int crossing;  // index along the edge
  };
  std::map<std::pair<int, int>, std::vector<Record>> points;  // (edge, index) -> records
  std::vector<std::set<int>> edge_indices(c.edge_count);
  for (const Curve& curve : curves) {
    if (curve.empty()) throw InputError(stage, "a curve needs at least one chord");
    for (std::size_t k = 0; k < curve.size(); ++k) {
      const Chord& ch = curve[k];
      if (ch.face < 0 || ch.face >= static_cast<int>(c.faces.size())) {
        throw InputError(stage, "chord references a missing face");
      }
      for (const CurvePoint* pt : {&ch.entry, &ch.exit}) {
        if (pt->edge < 0 || pt->edge >= c.edge_count) {
          throw InputError(stage, "chord references a missing edge");
        }
        if (pt->index < 0) throw InputError(stage, "negative crossing index");
        if (c.uses[pt->edge].size() != 2) {
          throw InputError(stage, "curve crosses a boundary edge");
        }
      }
      if (ch.entry == ch.exit) throw InputError(stage, "degenerate chord");
      const Chord& next = curve[(k + 1) % curve.size()];
      if (ch.exit.edge != next.entry.edge || ch.exit.index != next.entry.index) {
        throw InputError(stage, "curve chords do not chain up");
      }
      for (const CurvePoint* pt : {&ch.entry, &ch.exit}) {
        points[{pt->edge, pt->index}].push_back(
            {ch.face, resolve_use(c, ch.face, pt->edge, pt->use, stage), pt->index});
        edge_indices[pt->edge].insert(pt->index);
      }
    }
  }
  for (auto& [key, records] : points) {
    if (records.size() != 2) throw InputError(stage, "curves are not disjoint");
    const EdgeUse a{records[0].face, records[0].occ.cycle, records[0].occ.pos};
    const EdgeUse b{records[1].face, records[1].occ.cycle, records[1].occ.pos};
    if (a.face == b.face && a.cycle == b.cycle && a.pos == b.pos) {
      throw InputError(stage, "curve touches an edge without crossing it");
    }
  }
  for (int e = 0; e < c.edge_count; ++e) {
    const auto& idx = edge_indices[e];
    if (!idx.empty() && (*idx.begin() != 0 || *idx.rbegin() != static_cast<int>(idx.size()) - 1)) {
      throw InputError(stage, "crossing indices along an edge must be contiguous from 0");
    }
  }

  // Subdivide each crossed edge: segment 0 keeps the id, the rest are new.
  RefineResult out;
  int next_edge = c.edge_count;
  std::vector<int> new_origin = c.edge_origin;
  out.edge_segments.assign(c.edge_count, {});
  for (int e = 0; e < c.edge_count; ++e) {
    out.edge_segments[e].push_back(e);
    for (std::size_t i = 0; i < edge_indices[e].size(); ++i) {
      out.edge_segments[e].push_back(next_edge++);
      new_origin.push_back(c.edge_origin[e]);
    }
  }
  std::vector<FaceCell> faces = c.faces;
  // expansion_start[f][cycle][pos] = index of the first replacement dart.
  std::vector<std::vector<std::vector<int>>> expansion_start(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    expansion_start[f].resize(faces[f].cycles.size());
    for (std::size_t ci = 0; ci < faces[f].cycles.size(); ++ci) {
      const auto& old_cycle = faces[f].cycles[ci];
      std::vector<int> rebuilt;
      expansion_start[f][ci].resize(old_cycle.size());
      for (std::size_t pi = 0; pi < old_cycle.size(); ++pi) {
        const int d = old_cycle[pi];
        const auto& segs = out.edge_segments[dart_edge(d)];
        expansion_start[f][ci][pi] = static_cast<int>(rebuilt.size());
        if (dart_dir(d) == 0) {
          for (int s : segs) rebuilt.push_back(make_dart(s, 0));
        } else {
          for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
            rebuilt.push_back(make_dart(*it, 1));
          }
        }
      }
      faces[f].cycles[ci] = std::move(rebuilt);
    }
  }

  // Allocate the chord edges in curve order; these ids are the output curves.
  out.curve_edges.assign(curves.size(), {});
  std::vector<std::vector<std::array<int, 3>>> face_chords(faces.size());  // {curve, chord, edge}
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t k = 0; k < curves[i].size(); ++k) {
      out.curve_edges[i].push_back(next_edge);
      face_chords[curves[i][k].face].push_back(
          {static_cast<int>(i), static_cast<int>(k), next_edge});
      new_origin.push_back(-1);
      ++next_edge;
    }
  }

  // Carve each face along its chords with a linked boundary-node list.
  struct Node {
    int dart = -1;
    int next = -1;
    bool endpoint = false;  // a pending chord endpoint sits in the gap after this node
    bool harvested = false;
  };
  std::vector<FaceCell> extracted;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (face_chords[f].empty()) continue;
    std::vector<Node> nodes;
    std::vector<std::vector<int>> node_at(faces[f].cycles.size());
    for (std::size_t ci = 0; ci < faces[f].cycles.size(); ++ci) {
      const auto& cycle = faces[f].cycles[ci];
      const int base = static_cast<int>(nodes.size());
      node_at[ci].resize(cycle.size());
      for (std::size_t pi = 0; pi < cycle.size(); ++pi) {
        node_at[ci][pi] = base + static_cast<int>(pi);
        nodes.push_back({cycle[pi], base + static_cast<int>((pi + 1) % cycle.size()), false, false});
      }
    }
    // Chord endpoints as corner gaps: the gap after a subdivision junction.
    auto corner_node = [&](const CurvePoint& pt, int face_id) {
      const Occurrence occ = resolve_use(c, face_id, pt.edge, pt.use, stage);
      const int start = expansion_start[face_id][occ.cycle][occ.pos];
      const int k = static_cast<int>(edge_indices[pt.edge].size());
      const int d = c.faces[face_id].cycles[occ.cycle][occ.pos];
      const int offset = dart_dir(d) == 0 ? pt.index : k - 1 - pt.index;
      return node_at[occ.cycle][static_cast<std::size_t>(start + offset) %
                                faces[face_id].cycles[occ.cycle].size()];
    };
    struct Pending {
      int node_a;
      int node_b;
      int edge;
    };
    std::vector<Pending> pending;
    for (const auto& [curve_i, chord_k, edge_id] : face_chords[f]) {
      const Chord& ch = curves[curve_i][chord_k];
      const int na = corner_node(ch.entry, static_cast<int>(f));
      const int nb = corner_node(ch.exit, static_cast<int>(f));
      if (na == nb) throw InputError(stage, "curve touches an edge without crossing it");
      if (nodes[na].endpoint || nodes[nb].endpoint) {
        throw InputError(stage, "curves are not disjoint");
      }
      nodes[na].endpoint = true;
      nodes[nb].endpoint = true;
      pending.push_back({na, nb, edge_id});
    }
    auto harvest = [&](int start) {
      std::vector<int> cycle;
      int cur = start;
      do {
        nodes[cur].harvested = true;
        cycle.push_back(nodes[cur].dart);
        cur = nodes[cur].next;
      } while (cur != start);
      return cycle;
    };
    while (!pending.empty()) {
      bool progressed = false;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        const auto [na, nb, ce] = pending[i];
        bool same_cycle = false;
        bool side1_clean = true;
        for (int cur = nodes[na].next; cur != na; cur = nodes[cur].next) {
          if (cur == nb) {
            same_cycle = true;
            break;
          }
          if (nodes[cur].endpoint) side1_clean = false;
        }
        const int fwd = make_dart(ce, 0);  // entry corner -> exit corner
        const int rev = make_dart(ce, 1);
        if (!same_cycle) {
          // The chord joins two cycles of the face; splice them together.
          nodes[na].endpoint = false;
          nodes[nb].endpoint = false;
          const int a2 = nodes[na].next;
          const int b2 = nodes[nb].next;
          const int fwd_node = static_cast<int>(nodes.size());
          nodes.push_back({fwd, b2, false, false});
          const int rev_node = static_cast<int>(nodes.size());
          nodes.push_back({rev, a2, false, false});
          nodes[na].next = fwd_node;
          nodes[nb].next = rev_node;
          pending.erase(pending.begin() + static_cast<long>(i));
          progressed = true;
          break;
        }
        bool side2_clean = true;
        if (!side1_clean) {
          for (int cur = nodes[nb].next; cur != nb; cur = nodes[cur].next) {
            if (cur == na) break;
            if (nodes[cur].endpoint) side2_clean = false;
          }
        }
        if (!side1_clean && !side2_clean) continue;
        nodes[na].endpoint = false;
        nodes[nb].endpoint = false;
        // Split off the clean side as a disk face bounded by the chord.
        const int keep_a = side1_clean ? na : nb;
        const int keep_b = side1_clean ? nb : na;
        const int chord_off = side1_clean ? rev : fwd;
        const int chord_keep = side1_clean ? fwd : rev;
        const int ring_start = nodes[keep_a].next;
        const int after_b = nodes[keep_b].next;
        const int off_node = static_cast<int>(nodes.size());
        nodes.push_back({chord_off, ring_start, false, false});
        nodes[keep_b].next = off_node;
        const int keep_node = static_cast<int>(nodes.size());
        nodes.push_back({chord_keep, after_b, false, false});
        nodes[keep_a].next = keep_node;
        FaceCell piece;
        piece.kind = faces[f].kind;
        piece.origin = faces[f].origin;
        piece.cycles.push_back(harvest(ring_start));
        extracted.push_back(std::move(piece));
        pending.erase(pending.begin() + static_cast<long>(i));
        progressed = true;
        break;
      }
      if (!progressed) throw InputError(stage, "curve is not embedded within a face");
    }
    // The remaining rings are the carved remainder of this face.
    std::vector<std::vector<int>> rest;
    for (std::size_t ni = 0; ni < nodes.size(); ++ni) {
      if (!nodes[ni].harvested) rest.push_back(harvest(static_cast<int>(ni)));
    }
    faces[f].cycles = std::move(rest);
  }

  out.complex.faces = std::move(faces);
  for (FaceCell& piece : extracted) out.complex.faces.push_back(std::move(piece));
  out.complex.edge_count = next_edge;
  out.complex.edge_origin = std::move(new_origin);
  out.complex.finalize();
  return out;
}

bool is_essential(const Complex& c, const std::vector<int>& curve_edge_ids) {
  const CutResult r = cut(c, curve_edge_ids);
  std::set<int> touched;
  for (const auto& side : r.sides) {
    for (int e : side) {
      if (e < 0) continue;
      for (const EdgeUse& u : r.complex.uses[e]) {
        touched.insert(r.complex.face_component[u.face]);
      }
    }
  }
  for (int comp : touched) {
    if (r.complex.chi(comp) == 1) return false;
  }
  return true;
}

bool chord_curve_essential(const Complex& c, const Curve& curve, const std::string& stage) {
  const RefineResult r = refine(c, {curve}, stage);
  return is_essential(r.complex, r.curve_edges[0]);
}

}  // namespace pcert
