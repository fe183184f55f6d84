#include "pcert/pants.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>

#include "pcert/error.hpp"

namespace pcert {

namespace {

// A working piece carved out of the surface. Faces and edges remember where
// they came from; cap faces (which stand in for complement disks) map to no
// surface face and are always removable.
struct Patch {
  Complex cx;
  std::vector<int> sigma_face;
  std::vector<int> sigma_edge;
  std::vector<char> removable;
};

Patch patch_component(const Patch& p, int comp) {
  const std::vector<int> faces = p.cx.component_face_list(comp);
  SubcomplexResult sub = subcomplex(p.cx, faces);
  Patch out;
  out.cx = std::move(sub.complex);
  out.sigma_face.resize(out.cx.faces.size());
  out.removable.resize(out.cx.faces.size());
  for (int f : faces) {
    const int nf = sub.new_face_id[f];
    out.sigma_face[nf] = p.sigma_face[f];
    out.removable[nf] = p.removable[f];
  }
  out.sigma_edge.resize(out.cx.edge_count);
  for (int e = 0; e < static_cast<int>(p.sigma_edge.size()); ++e) {
    if (sub.new_edge_id[e] >= 0) out.sigma_edge[sub.new_edge_id[e]] = p.sigma_edge[e];
  }
  return out;
}

Patch patch_cut(const Patch& p, const std::vector<int>& edges) {
  CutResult r = cut(p.cx, edges);
  Patch out;
  out.sigma_face = p.sigma_face;
  out.removable = p.removable;
  out.sigma_edge = p.sigma_edge;
  for (const auto& side : r.sides) {
    if (side[1] >= 0) out.sigma_edge.push_back(p.sigma_edge[side[0]]);
  }
  out.cx = std::move(r.complex);
  return out;
}

std::vector<int> patch_sigma_edges(const Patch& p, const std::vector<int>& edges) {
  std::vector<int> out;
  out.reserve(edges.size());
  for (int e : edges) out.push_back(p.sigma_edge[e]);
  std::sort(out.begin(), out.end());
  return out;
}

// Occurrence bookkeeping: edge end k of edge e is slot 2e+k, and the vertex
// there is vertex_of_slot[2e+k].

// Splits a set of edges, each of whose incident vertices meets exactly two
// of them, into the closed walks they form.
std::vector<std::vector<int>> split_circles(const Complex& cx, const std::vector<int>& edges,
                                            const char* what) {
  std::map<int, std::vector<std::pair<int, int>>> at;  // vertex -> (edge, end)
  for (int e : edges) {
    at[cx.vertex_of_slot[2 * e]].push_back({e, 0});
    at[cx.vertex_of_slot[2 * e + 1]].push_back({e, 1});
  }
  for (const auto& [v, occ] : at) {
    if (occ.size() != 2) {
      throw InternalError(std::string("pants: ") + what + " do not form circles");
    }
  }
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::set<int> used;
  std::vector<std::vector<int>> circles;
  for (int e0 : sorted) {
    if (used.count(e0)) continue;
    std::vector<int> circle{e0};
    used.insert(e0);
    std::pair<int, int> incoming{e0, 1};
    int vertex = cx.vertex_of_slot[2 * e0 + 1];
    while (true) {
      const auto& occ = at[vertex];
      const auto other = (occ[0] == incoming) ? occ[1] : occ[0];
      if (other == std::make_pair(e0, 0)) break;
      circle.push_back(other.first);
      used.insert(other.first);
      incoming = {other.first, 1 - other.second};
      vertex = cx.vertex_of_slot[2 * other.first + (1 - other.second)];
    }
    circles.push_back(std::move(circle));
  }
  return circles;
}

// Whether the edges form one embedded closed curve.
bool simple_single_circle(const Complex& cx, const std::vector<int>& edges) {
  std::set<int> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size() || edges.empty()) return false;
  std::map<int, int> degree;
  for (int e : edges) {
    degree[cx.vertex_of_slot[2 * e]] += 1;
    degree[cx.vertex_of_slot[2 * e + 1]] += 1;
  }
  for (const auto& [v, d] : degree) {
    if (d != 2) return false;
  }
  return split_circles(cx, edges, "curve edges").size() == 1;
}

std::set<int> circle_vertices(const Complex& cx, const std::vector<int>& edges) {
  std::set<int> out;
  for (int e : edges) {
    out.insert(cx.vertex_of_slot[2 * e]);
    out.insert(cx.vertex_of_slot[2 * e + 1]);
  }
  return out;
}

void rotate_canonical(SignedWalk& walk) {
  if (walk.empty()) return;
  std::size_t best = 0;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const auto key = [&](std::size_t k) { return std::make_pair(std::abs(walk[k]), walk[k]); };
    if (key(i) < key(best)) best = i;
  }
  std::rotate(walk.begin(), walk.begin() + static_cast<long>(best), walk.end());
}

// Orients an embedded closed curve, starting from its smallest edge run tail
// to head.
SignedWalk signed_walk(const Complex& cx, const std::vector<int>& edges) {
  const auto circles = split_circles(cx, edges, "curve edges");
  if (circles.size() != 1) throw InternalError("pants: curve is not a single circle");
  std::map<int, std::vector<std::pair<int, int>>> at;
  for (int e : edges) {
    at[cx.vertex_of_slot[2 * e]].push_back({e, 0});
    at[cx.vertex_of_slot[2 * e + 1]].push_back({e, 1});
  }
  const int e0 = *std::min_element(edges.begin(), edges.end());
  SignedWalk walk{e0 + 1};
  std::pair<int, int> incoming{e0, 1};
  int vertex = cx.vertex_of_slot[2 * e0 + 1];
  while (true) {
    const auto& occ = at[vertex];
    const auto other = (occ[0] == incoming) ? occ[1] : occ[0];
    if (other == std::make_pair(e0, 0)) break;
    walk.push_back(other.second == 0 ? other.first + 1 : -(other.first + 1));
    incoming = {other.first, 1 - other.second};
    vertex = cx.vertex_of_slot[2 * other.first + (1 - other.second)];
  }
  rotate_canonical(walk);
  return walk;
}

// The walk of a boundary circle of a patch, written with surface edge ids.
SignedWalk boundary_walk_in_sigma(const Patch& p, const std::vector<int>& darts) {
  SignedWalk walk;
  walk.reserve(darts.size());
  for (int d : darts) {
    const int se = p.sigma_edge[dart_edge(d)];
    walk.push_back(dart_dir(d) == 0 ? se + 1 : -(se + 1));
  }
  rotate_canonical(walk);
  return walk;
}

// Candidate curves for the descent, deduplicated and ordered by length then
// edge ids. Two sources feed the list: the boundary cycles of faces glued
// along more than one cycle (tube attachment circles, any length), and an
// exhaustive enumeration of the short embedded cycles through interior
// vertices. On the trivalent complexes the descent works in, every cut it
// ever profits from is such a cycle: face boundaries, tube rims, and the
// circles that wrap a fiber.
std::vector<std::vector<int>> candidate_cycles(const Complex& cx) {
  constexpr int kMaxCycleLength = 8;
  std::vector<std::vector<std::pair<int, int>>> adj(cx.vertex_count);
  std::vector<char> usable_edge(cx.edge_count, 0);
  std::vector<int> usable;
  for (int e = 0; e < cx.edge_count; ++e) {
    if (cx.uses[e].size() != 2) continue;
    const int u = cx.vertex_of_slot[2 * e];
    const int v = cx.vertex_of_slot[2 * e + 1];
    if (cx.vertex_on_boundary[u] || cx.vertex_on_boundary[v]) continue;
    usable_edge[e] = 1;
    usable.push_back(e);
    adj[u].push_back({e, v});
    if (v != u) adj[v].push_back({e, u});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::set<std::vector<int>> dedupe;

  for (const auto& face : cx.faces) {
    if (face.cycles.size() < 2) continue;
    for (const auto& cycle : face.cycles) {
      std::vector<int> edges;
      edges.reserve(cycle.size());
      for (int d : cycle) edges.push_back(dart_edge(d));
      std::sort(edges.begin(), edges.end());
      if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
      const bool ok = std::all_of(edges.begin(), edges.end(),
                                  [&](int e) { return usable_edge[e] != 0; });
      if (ok) dedupe.insert(std::move(edges));
    }
  }

  // Enumerate vertex-simple cycles of length at most kMaxCycleLength, each
  // anchored at (and found from) its smallest edge.
  std::vector<char> on_path(cx.vertex_count, 0);
  std::vector<int> path;
  const auto extend = [&](auto&& self, int anchor, int home, int at) -> void {
    for (const auto& [e2, far] : adj[at]) {
      if (e2 <= anchor) continue;
      if (far == home) {
        path.push_back(e2);
        std::vector<int> cycle = path;
        std::sort(cycle.begin(), cycle.end());
        dedupe.insert(std::move(cycle));
        path.pop_back();
        continue;
      }
      if (on_path[far] || static_cast<int>(path.size()) + 2 > kMaxCycleLength) continue;
      on_path[far] = 1;
      path.push_back(e2);
      self(self, anchor, home, far);
      path.pop_back();
      on_path[far] = 0;
    }
  };
  for (int a : usable) {
    const int u = cx.vertex_of_slot[2 * a];
    const int v = cx.vertex_of_slot[2 * a + 1];
    if (u == v) {
      dedupe.insert({a});
      continue;
    }
    on_path[u] = 1;
    on_path[v] = 1;
    path.assign(1, a);
    extend(extend, a, u, v);
    on_path[u] = 0;
    on_path[v] = 0;
  }

  std::vector<std::vector<int>> out(dedupe.begin(), dedupe.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Shared scratch state for curve screening during a reduction: the sorted
// edge sets bounding single-cycle faces (such curves bound a disk outright)
// and a memo of embedded-essential verdicts, so repeated candidates across
// descent levels are only ever cut once.
struct CurveChecker {
  const Complex& sigma;
  std::set<std::vector<int>> face_disk_sets;
  std::map<std::vector<int>, bool> memo;

  explicit CurveChecker(const Complex& s) : sigma(s) {
    for (const auto& face : s.faces) {
      if (face.cycles.size() != 1) continue;
      std::vector<int> edges;
      edges.reserve(face.cycles[0].size());
      for (int d : face.cycles[0]) edges.push_back(dart_edge(d));
      std::sort(edges.begin(), edges.end());
      if (std::adjacent_find(edges.begin(), edges.end()) == edges.end()) {
        face_disk_sets.insert(std::move(edges));
      }
    }
    // Boundaries of unions of two adjacent disk faces also bound disks; record
    // them so the descent can discard such curves without cutting the surface.
    for (int e = 0; e < s.edge_count; ++e) {
      if (s.uses[e].size() != 2) continue;
      const int f0 = s.uses[e][0].face;
      const int f1 = s.uses[e][1].face;
      if (f0 == f1) continue;
      if (s.faces[f0].cycles.size() != 1 || s.faces[f1].cycles.size() != 1) continue;
      std::map<int, int> count;
      std::set<int> corners;
      for (const int f : {f0, f1}) {
        for (int d : s.faces[f].cycles[0]) {
          ++count[dart_edge(d)];
          corners.insert(s.vertex_of_slot[d]);
        }
      }
      const long long chi =
          static_cast<long long>(corners.size()) - static_cast<long long>(count.size()) + 2;
      if (chi != 1) continue;
      std::vector<int> rim;
      for (const auto& [edge, times] : count) {
        if (times == 1) rim.push_back(edge);
      }
      if (simple_single_circle(s, rim)) face_disk_sets.insert(std::move(rim));
    }
  }

  // True when the sorted surface edge ids form an embedded essential circle.
  bool embedded_essential(const std::vector<int>& image) {
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    if (face_disk_sets.count(image)) return false;
    if (const auto it = memo.find(image); it != memo.end()) return it->second;
    const bool ok = simple_single_circle(sigma, image) && is_essential(sigma, image);
    memo.emplace(image, ok);
    return ok;
  }
};

struct CandidateInternal {
  Patch patch;
  CandidateResult info;
};

std::optional<FaceColor> patch_face_color(const Patch& p, const Coloring& col, int f) {
  const int sf = p.sigma_face[f];
  if (sf < 0) return std::nullopt;
  return col.color[sf];
}

CandidateInternal find_candidate_internal(const SurfaceComplex& sc, const Coloring& col,
                                          const Gamma& gamma) {
  const Complex& sigma = sc.complex;
  std::vector<int> by_faces;
  for (int f = 0; f < sc.face_count(); ++f) {
    if (col.color[f] == FaceColor::blue || col.color[f] == FaceColor::yellow) {
      by_faces.push_back(f);
    }
  }
  if (by_faces.empty()) throw GateNotMet("theorem gate not met: no blue or yellow faces");

  SubcomplexResult sub = subcomplex(sigma, by_faces);
  Patch part;
  part.cx = std::move(sub.complex);
  part.sigma_face.resize(part.cx.faces.size());
  part.removable.assign(part.cx.faces.size(), 0);
  for (int f : by_faces) part.sigma_face[sub.new_face_id[f]] = f;
  part.sigma_edge.resize(part.cx.edge_count);
  for (int e = 0; e < sigma.edge_count; ++e) {
    if (sub.new_edge_id[e] >= 0) part.sigma_edge[sub.new_edge_id[e]] = e;
  }

  std::vector<int> arc_edges;
  for (const auto& arc : gamma.arcs) {
    for (int e : arc) {
      const int local = sub.new_edge_id[e];
      if (local < 0) throw InternalError("pants: an interchange arc leaves the blue/yellow part");
      arc_edges.push_back(local);
    }
  }
  Patch pieces = patch_cut(part, arc_edges);

  int chosen = -1;
  long long chosen_chi = 0;
  int chosen_b = 0;
  for (int c = 0; c < pieces.cx.component_count; ++c) {
    const long long chi = pieces.cx.chi(c);
    const int b = pieces.cx.circles_in_component(c);
    if (chi < 0 && chi <= -static_cast<long long>(b)) {
      chosen = c;
      chosen_chi = chi;
      chosen_b = b;
      break;
    }
  }
  if (chosen < 0) {
    throw GateNotMet("theorem gate not met: no component satisfies the cut inequality");
  }

  CandidateInternal out;
  out.patch = patch_component(pieces, chosen);
  out.info.component = chosen;
  out.info.chi = chosen_chi;
  out.info.boundary_circles = chosen_b;
  for (int f = 0; f < static_cast<int>(out.patch.sigma_face.size()); ++f) {
    out.info.faces.push_back(out.patch.sigma_face[f]);
  }
  std::sort(out.info.faces.begin(), out.info.faces.end());
  return out;
}

// Blue/yellow interface edges interior to the patch, ignoring caps.
std::vector<int> interchange_edges(const Patch& p, const Coloring& col) {
  std::vector<int> out;
  for (int e = 0; e < p.cx.edge_count; ++e) {
    if (p.cx.uses[e].size() != 2) continue;
    const auto c1 = patch_face_color(p, col, p.cx.uses[e][0].face);
    const auto c2 = patch_face_color(p, col, p.cx.uses[e][1].face);
    if (!c1 || !c2) continue;
    const bool mixed = (*c1 == FaceColor::blue && *c2 == FaceColor::yellow) ||
                       (*c1 == FaceColor::yellow && *c2 == FaceColor::blue);
    if (mixed) out.push_back(e);
  }
  return out;
}

struct Reduction {
  Patch fsecond;
  FaceColor color = FaceColor::blue;
  PantsTrail trail;
  std::vector<int> removed_faces;  // surface ids of the removable disks
  long long reduced_chi = 0;
  int reduced_boundary = 0;
};

Reduction reduce_internal(const SurfaceComplex& sc, const Coloring& col,
                          const CandidateInternal& ci, CurveChecker& check) {
  const Complex& sigma = sc.complex;
  Reduction out;
  out.trail.candidate_chi = ci.info.chi;
  out.trail.candidate_boundary = ci.info.boundary_circles;
  out.trail.candidate_faces = static_cast<int>(ci.info.faces.size());

  // Cap every boundary circle that bounds a disk component of the
  // complement; the caps stand in for those disks and stay removable.
  Patch w = ci.patch;
  std::vector<std::vector<int>> rim_sets;
  for (const auto& circle : w.cx.boundary_circles) {
    std::vector<int> edges;
    for (int d : circle) edges.push_back(dart_edge(d));
    rim_sets.push_back(patch_sigma_edges(w, edges));
  }
  std::vector<char> in_fi(sc.face_count(), 0);
  for (int f : ci.info.faces) in_fi[f] = 1;
  std::vector<int> complement;
  for (int f = 0; f < sc.face_count(); ++f) {
    if (!in_fi[f]) complement.push_back(f);
  }
  if (!complement.empty()) {
    SubcomplexResult comp_sub = subcomplex(sigma, complement);
    std::vector<int> sigma_of(comp_sub.complex.edge_count, -1);
    for (int e = 0; e < sigma.edge_count; ++e) {
      if (comp_sub.new_edge_id[e] >= 0) sigma_of[comp_sub.new_edge_id[e]] = e;
    }
    for (int c = 0; c < comp_sub.complex.component_count; ++c) {
      if (comp_sub.complex.chi(c) != 1 || comp_sub.complex.circles_in_component(c) != 1) continue;
      std::vector<int> disk_rim;
      for (std::size_t i = 0; i < comp_sub.complex.boundary_circles.size(); ++i) {
        if (comp_sub.complex.circle_component[i] != c) continue;
        for (int d : comp_sub.complex.boundary_circles[i]) {
          disk_rim.push_back(sigma_of[dart_edge(d)]);
        }
      }
      std::sort(disk_rim.begin(), disk_rim.end());
      for (std::size_t j = 0; j < rim_sets.size(); ++j) {
        if (rim_sets[j] != disk_rim) continue;
        std::vector<int> cap;
        const auto& walk = w.cx.boundary_circles[j];
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) cap.push_back(dart_reverse(*it));
        w.cx.faces.push_back({FaceKind::vertex_disk, -1, {cap}});
        w.sigma_face.push_back(-1);
        w.removable.push_back(1);
        out.trail.complement_disks += 1;
        break;
      }
    }
    if (out.trail.complement_disks > 0) w.cx.finalize();
  }

  // Split along the essential interchange circles.
  std::vector<int> essential_edges;
  for (const auto& circle : split_circles(w.cx, interchange_edges(w, col), "interchange edges")) {
    const std::vector<int> image = patch_sigma_edges(w, circle);
    const SignedWalk walk = signed_walk(sigma, image);
    if (is_essential(sigma, image)) {
      essential_edges.insert(essential_edges.end(), circle.begin(), circle.end());
      out.trail.essential_circles.push_back(walk);
    } else {
      out.trail.inessential_circles.push_back(walk);
    }
  }

  Patch fp;
  if (essential_edges.empty()) {
    fp = std::move(w);
    if (fp.cx.component_count != 1) {
      throw InternalError("pants: capped candidate is not connected");
    }
  } else {
    Patch split = patch_cut(w, essential_edges);
    int pick = -1;
    for (int c = 0; c < split.cx.component_count; ++c) {
      if (split.cx.chi(c) < 0) {
        pick = c;
        break;
      }
    }
    if (pick < 0) {
      throw InternalError("pants: splitting along the interchange circles left no negative piece");
    }
    fp = patch_component(split, pick);
  }
  if (fp.cx.chi(-1) >= 0) {
    throw InternalError("pants: the reduced piece has nonnegative Euler characteristic");
  }

  // Remaining interchange circles must be inessential; mark the outermost
  // disks they bound (plus the caps) removable.
  std::vector<std::vector<int>> islands;
  for (const auto& circle : split_circles(fp.cx, interchange_edges(fp, col), "interchange edges")) {
    const std::vector<int> image = patch_sigma_edges(fp, circle);
    if (is_essential(sigma, image)) {
      throw InternalError("pants: an essential interchange circle survived the splitting");
    }
    CutResult r = cut(fp.cx, circle);
    std::vector<int> edge_of(r.complex.edge_count);
    for (int e = 0; e < fp.cx.edge_count; ++e) edge_of[e] = e;
    for (const auto& side : r.sides) {
      if (side[1] >= 0) edge_of[side[1]] = side[0];
    }
    bool found = false;
    for (int c = 0; c < r.complex.component_count && !found; ++c) {
      if (r.complex.chi(c) != 1 || r.complex.circles_in_component(c) != 1) continue;
      std::vector<int> rim;
      for (std::size_t i = 0; i < r.complex.boundary_circles.size(); ++i) {
        if (r.complex.circle_component[i] != c) continue;
        for (int d : r.complex.boundary_circles[i]) {
          rim.push_back(fp.sigma_edge[edge_of[dart_edge(d)]]);
        }
      }
      std::sort(rim.begin(), rim.end());
      if (rim != image) continue;
      islands.push_back(r.complex.component_face_list(c));
      found = true;
    }
    if (!found) {
      throw InternalError("pants: an inessential interchange circle bounds no disk");
    }
  }
  std::sort(islands.begin(), islands.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::set<int>> kept;
  for (const auto& island : islands) {
    std::set<int> faces(island.begin(), island.end());
    const bool inside = std::any_of(kept.begin(), kept.end(), [&](const std::set<int>& big) {
      return std::includes(big.begin(), big.end(), faces.begin(), faces.end());
    });
    if (inside) continue;
    for (int f : island) {
      if (!fp.removable[f]) {
        fp.removable[f] = 1;
        if (fp.sigma_face[f] >= 0) out.removed_faces.push_back(fp.sigma_face[f]);
      }
    }
    out.trail.removed_disks += 1;
    kept.push_back(std::move(faces));
  }
  std::sort(out.removed_faces.begin(), out.removed_faces.end());

  // The rest must be one color.
  std::optional<FaceColor> cert_color;
  for (int f = 0; f < static_cast<int>(fp.cx.faces.size()); ++f) {
    if (fp.removable[f]) continue;
    const auto c = patch_face_color(fp, col, f);
    if (!c) throw InternalError("pants: a cap face escaped the removable marking");
    if (cert_color && *cert_color != *c) {
      throw InternalError("pants: the reduced piece is not monochromatic");
    }
    cert_color = c;
  }
  if (!cert_color) throw InternalError("pants: nothing remains after discarding removable disks");
  out.color = *cert_color;
  out.reduced_chi = fp.cx.chi(-1);
  out.reduced_boundary = static_cast<int>(fp.cx.boundary_circles.size());
  out.trail.reduced_chi = out.reduced_chi;
  out.trail.reduced_boundary = out.reduced_boundary;

  // A closed piece is split along a separating curve keeping the removable
  // disks on one side; otherwise the piece itself is descended into.
  if (fp.cx.boundary_circles.empty()) {
    out.trail.closed_case = true;
    std::vector<char> has_removable_faces(fp.cx.faces.size(), 0);
    bool any_removable = false;
    for (int f = 0; f < static_cast<int>(fp.cx.faces.size()); ++f) {
      if (fp.removable[f]) {
        has_removable_faces[f] = 1;
        any_removable = true;
      }
    }
    bool found = false;
    for (const auto& cand : candidate_cycles(fp.cx)) {
      const std::vector<int> image = patch_sigma_edges(fp, cand);
      if (!check.embedded_essential(image)) continue;
      Patch q = patch_cut(fp, cand);
      if (q.cx.component_count != 2) continue;
      bool removable_in[2] = {false, false};
      for (int f = 0; f < static_cast<int>(q.cx.faces.size()); ++f) {
        if (has_removable_faces[f]) removable_in[q.cx.face_component[f]] = true;
      }
      int target = -1;
      if (any_removable) {
        if (removable_in[0] && !removable_in[1] && q.cx.chi(1) < 0) target = 1;
        if (removable_in[1] && !removable_in[0] && q.cx.chi(0) < 0) target = 0;
      } else {
        for (int c = 0; c < 2; ++c) {
          if (q.cx.chi(c) < 0) {
            target = c;
            break;
          }
        }
      }
      if (target < 0) continue;
      out.trail.separating_curve = signed_walk(sigma, image);
      out.fsecond = patch_component(q, target);
      found = true;
      break;
    }
    if (!found) {
      throw InternalError("pants: no separating curve isolates the removable disks");
    }
  } else {
    out.fsecond = std::move(fp);
  }
  out.trail.final_chi = out.fsecond.cx.chi(-1);
  return out;
}

struct PantsHit {
  std::vector<SignedWalk> walks;               // 3, canonical order
  std::vector<std::vector<int>> edge_sets;     // matching sorted surface edges
};

std::optional<PantsHit> try_accept(const Patch& p, const Complex& sigma, const Coloring& col,
                                   FaceColor color, CurveChecker& check) {
  if (p.cx.component_count != 1) return std::nullopt;
  if (p.cx.chi(-1) != -1 || p.cx.boundary_circles.size() != 3) return std::nullopt;
  if (!p.cx.orientable(0) || p.cx.genus(0) != 0) return std::nullopt;
  for (int f = 0; f < static_cast<int>(p.cx.faces.size()); ++f) {
    if (p.removable[f]) return std::nullopt;
    const auto c = patch_face_color(p, col, f);
    if (!c || *c != color) return std::nullopt;
  }
  std::vector<SignedWalk> walks;
  std::vector<std::vector<int>> sets;
  for (const auto& circle : p.cx.boundary_circles) {
    std::vector<int> edges;
    for (int d : circle) edges.push_back(dart_edge(d));
    std::vector<int> image = patch_sigma_edges(p, edges);
    if (!check.embedded_essential(image)) return std::nullopt;
    walks.push_back(boundary_walk_in_sigma(p, circle));
    sets.push_back(std::move(image));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::vector<int> shared;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) return std::nullopt;
      const std::set<int> vi = circle_vertices(sigma, sets[i]);
      const std::set<int> vj = circle_vertices(sigma, sets[j]);
      std::vector<int> both;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::back_inserter(both));
      if (!both.empty()) return std::nullopt;
    }
  }
  std::vector<int> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (sets[a].size() != sets[b].size()) return sets[a].size() < sets[b].size();
    return sets[a] < sets[b];
  });
  PantsHit hit;
  for (int i : order) {
    hit.walks.push_back(walks[i]);
    hit.edge_sets.push_back(sets[i]);
  }
  return hit;
}

std::optional<PantsHit> descend(const Patch& p, const Complex& sigma, const Coloring& col,
                                FaceColor color, int depth, long& budget,
                                CurveChecker& check, std::vector<SignedWalk>& log) {
  if (auto hit = try_accept(p, sigma, col, color, check)) return hit;
  if (depth > 512) return std::nullopt;
  for (const auto& cand : candidate_cycles(p.cx)) {
    if (--budget <= 0) throw InternalError("pants: descent budget exhausted");
    const std::vector<int> image = patch_sigma_edges(p, cand);
    if (!check.embedded_essential(image)) continue;
    Patch q = patch_cut(p, cand);
    for (int c = 0; c < q.cx.component_count; ++c) {
      if (q.cx.chi(c) != -1) continue;
      Patch piece = patch_component(q, c);
      if (auto hit = try_accept(piece, sigma, col, color, check)) {
        log.push_back(signed_walk(sigma, image));
        return hit;
      }
    }
    int target = -1;
    for (int c = 0; c < q.cx.component_count; ++c) {
      if (q.cx.chi(c) < 0) {
        target = c;
        break;
      }
    }
    if (target < 0) continue;
    Patch next = patch_component(q, target);
    q = Patch{};  // ancestors stay live across the recursion; shed the full cut now
    log.push_back(signed_walk(sigma, image));
    if (auto hit = descend(next, sigma, col, color, depth + 1, budget, check, log)) {
      return hit;
    }
    log.pop_back();
  }
  return std::nullopt;
}

json walk_json(const SignedWalk& walk) {
  json out = json::array();
  for (int v : walk) out.push_back(v);
  return out;
}

json walks_json(const std::vector<SignedWalk>& walks) {
  json out = json::array();
  for (const auto& w : walks) out.push_back(walk_json(w));
  return out;
}

void require_regime(const SurfaceComplex& sc) {
  const Complex& sigma = sc.complex;
  if (sigma.component_count != 1) throw GateNotMet("the surface is not connected");
  if (!sigma.boundary_circles.empty()) throw GateNotMet("the surface is not closed");
  if (!sigma.orientable(0)) throw GateNotMet("the surface is not orientable");
}

}  // namespace

std::vector<int> walk_edge_ids(const SignedWalk& walk) {
  std::vector<int> out;
  out.reserve(walk.size());
  for (int v : walk) out.push_back(std::abs(v) - 1);
  return out;
}

CandidateResult find_candidate(const SurfaceComplex& sc, const Coloring& col, const Gamma& gamma) {
  return find_candidate_internal(sc, col, gamma).info;
}

ReduceOutcome reduce_candidate(const SurfaceComplex& sc, const Coloring& col, const Gamma& gamma) {
  const CandidateInternal ci = find_candidate_internal(sc, col, gamma);
  CurveChecker check(sc.complex);
  Reduction red = reduce_internal(sc, col, ci, check);
  ReduceOutcome out;
  out.color = red.color;
  out.chi = red.trail.final_chi;
  out.boundary_circles = static_cast<int>(red.fsecond.cx.boundary_circles.size());
  out.closed_case = red.trail.closed_case;
  for (int sf : red.fsecond.sigma_face) {
    if (sf >= 0) out.faces.push_back(sf);
  }
  std::sort(out.faces.begin(), out.faces.end());
  out.removed = red.removed_faces;
  out.essential_circles = red.trail.essential_circles;
  out.inessential_circles = red.trail.inessential_circles;
  out.separating_curve = red.trail.separating_curve;
  out.complement_disks = red.trail.complement_disks;
  return out;
}

PantsCertificate extract_pants_certificate(const SurfaceComplex& sc, const Coloring& col,
                                           const Gamma& gamma) {
  require_regime(sc);
  const CandidateInternal ci = find_candidate_internal(sc, col, gamma);
  CurveChecker check(sc.complex);
  Reduction red = reduce_internal(sc, col, ci, check);

  long budget = 2000000;
  std::vector<SignedWalk> log;
  const auto hit = descend(red.fsecond, sc.complex, col, red.color, 0, budget, check, log);
  if (!hit) throw InternalError("pants: descent failed to isolate a pair of pants");

  PantsCertificate cert;
  cert.color = red.color;
  cert.alpha = hit->walks[0];
  cert.beta = hit->walks[1];
  cert.gamma = hit->walks[2];
  cert.trail = red.trail;
  cert.trail.descent_cuts = log;

  std::string why;
  if (!verify_certificate(sc, col, cert, &why)) {
    throw InternalError("pants: certificate failed independent verification: " + why);
  }
  cert.verified = true;
  return cert;
}

bool verify_certificate(const SurfaceComplex& sc, const Coloring& col,
                        const PantsCertificate& cert, std::string* why) {
  const auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const Complex& sigma = sc.complex;
  if (cert.color != FaceColor::blue && cert.color != FaceColor::yellow) {
    return fail("certificate color is not blue or yellow");
  }
  const std::vector<const SignedWalk*> walks{&cert.alpha, &cert.beta, &cert.gamma};
  std::vector<std::vector<int>> sets;
  for (const SignedWalk* walk : walks) {
    if (walk->empty()) return fail("a certificate curve is empty");
    std::vector<int> edges = walk_edge_ids(*walk);
    for (int e : edges) {
      if (e < 0 || e >= sigma.edge_count) return fail("a certificate curve edge is out of range");
      if (sigma.uses[e].size() != 2) return fail("a certificate curve uses a boundary edge");
    }
    std::vector<int> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return fail("a certificate curve repeats an edge");
    }
    if (!simple_single_circle(sigma, sorted)) {
      return fail("a certificate curve is not an embedded circle");
    }
    sets.push_back(std::move(sorted));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::vector<int> shared;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) return fail("two certificate curves share an edge");
      const std::set<int> vi = circle_vertices(sigma, sets[i]);
      const std::set<int> vj = circle_vertices(sigma, sets[j]);
      std::vector<int> both;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(both));
      if (!both.empty()) return fail("two certificate curves share a vertex");
    }
  }
  for (const auto& set : sets) {
    if (!is_essential(sigma, set)) {
      return fail("a certificate curve bounds a disk");
    }
  }

  std::vector<int> all_edges;
  for (const auto& set : sets) all_edges.insert(all_edges.end(), set.begin(), set.end());
  const CutResult r = cut(sigma, all_edges);
  std::vector<int> edge_of(r.complex.edge_count);
  for (int e = 0; e < sigma.edge_count; ++e) edge_of[e] = e;
  for (const auto& side : r.sides) {
    if (side[1] >= 0) edge_of[side[1]] = side[0];
  }
  for (int c = 0; c < r.complex.component_count; ++c) {
    if (r.complex.chi(c) != -1 || r.complex.circles_in_component(c) != 3) continue;
    if (!r.complex.orientable(c) || r.complex.genus(c) != 0) continue;
    std::vector<std::vector<int>> rims;
    for (std::size_t i = 0; i < r.complex.boundary_circles.size(); ++i) {
      if (r.complex.circle_component[i] != c) continue;
      std::vector<int> rim;
      for (int d : r.complex.boundary_circles[i]) rim.push_back(edge_of[dart_edge(d)]);
      std::sort(rim.begin(), rim.end());
      rims.push_back(std::move(rim));
    }
    std::vector<char> matched(3, 0);
    bool all_matched = true;
    for (const auto& rim : rims) {
      bool found = false;
      for (int k = 0; k < 3; ++k) {
        if (!matched[k] && sets[k] == rim) {
          matched[k] = 1;
          found = true;
          break;
        }
      }
      if (!found) all_matched = false;
    }
    if (!all_matched || !(matched[0] && matched[1] && matched[2])) continue;
    bool colored = true;
    for (int f : r.complex.component_face_list(c)) {
      if (col.color[f] != cert.color) {
        colored = false;
        break;
      }
    }
    if (!colored) continue;
    if (why) why->clear();
    return true;
  }
  return fail("no component of the cut surface is a pair of pants bounded by the three curves");
}

json pants_certificate_to_json(const PantsCertificate& cert) {
  json out;
  out["color"] = face_color_name(cert.color);
  out["alpha"] = walk_json(cert.alpha);
  out["beta"] = walk_json(cert.beta);
  out["gamma"] = walk_json(cert.gamma);
  json trail;
  trail["candidate"] = {{"chi", cert.trail.candidate_chi},
                        {"boundary_circles", cert.trail.candidate_boundary},
                        {"faces", cert.trail.candidate_faces}};
  trail["essential_circles"] = walks_json(cert.trail.essential_circles);
  trail["inessential_circles"] = walks_json(cert.trail.inessential_circles);
  trail["complement_disks"] = cert.trail.complement_disks;
  trail["removed_disks"] = cert.trail.removed_disks;
  trail["reduced"] = {{"chi", cert.trail.reduced_chi},
                      {"boundary_circles", cert.trail.reduced_boundary}};
  trail["closed_case"] = cert.trail.closed_case;
  trail["separating_curve"] = walk_json(cert.trail.separating_curve);
  trail["descent_cuts"] = walks_json(cert.trail.descent_cuts);
  trail["final_chi"] = cert.trail.final_chi;
  out["trail"] = trail;
  out["verified"] = cert.verified;
  return out;
}

}  // namespace pcert
