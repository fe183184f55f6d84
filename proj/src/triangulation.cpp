#include "pcert/triangulation.hpp"

#include <algorithm>
#include <numeric>

#include "pcert/error.hpp"

namespace pcert {

namespace {

constexpr const char* kStage = "triangulation";

// Plain union-find.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Directed tet-edge id: ((tet*6 + e)*2 + dir); dir 0 runs from the lower to
// the higher vertex of kEdgeVerts[e].
int directed_id(int tet, int u, int w) {
  int e = edge_index(u, w);
  int dir = (u < w) ? 0 : 1;
  return (tet * 6 + e) * 2 + dir;
}

}  // namespace

const char* to_string(VertexStatus s) {
  switch (s) {
    case VertexStatus::material: return "material";
    case VertexStatus::removed: return "removed";
    case VertexStatus::truncated: return "truncated";
  }
  return "?";
}

VertexStatus vertex_status_from_string(const std::string& s, const std::string& stage) {
  if (s == "material") return VertexStatus::material;
  if (s == "removed") return VertexStatus::removed;
  if (s == "truncated") return VertexStatus::truncated;
  throw InputError(stage, "unknown vertex status '" + s + "'");
}

int edge_index(int u, int w) {
  if (u > w) std::swap(u, w);
  for (int e = 0; e < 6; ++e)
    if (kEdgeVerts[static_cast<std::size_t>(e)][0] == u &&
        kEdgeVerts[static_cast<std::size_t>(e)][1] == w)
      return e;
  throw InternalError("bad edge endpoints");
}

int face_corner_pos(int face, int vertex) {
  for (int i = 0; i < 3; ++i)
    if (kFaceVerts[static_cast<std::size_t>(face)][static_cast<std::size_t>(i)] == vertex) return i;
  throw InternalError("vertex not on face");
}

std::array<int, 2> faces_containing_edge(int e) {
  std::array<int, 2> out{};
  int k = 0;
  for (int f = 0; f < 4; ++f) {
    if (f != kEdgeVerts[static_cast<std::size_t>(e)][0] &&
        f != kEdgeVerts[static_cast<std::size_t>(e)][1])
      out[static_cast<std::size_t>(k++)] = f;
  }
  return out;
}

int FaceGluing::image_vertex(int v) const {
  int pos = face_corner_pos(face_a, v);
  return kFaceVerts[static_cast<std::size_t>(face_b)]
                   [static_cast<std::size_t>(map[static_cast<std::size_t>(pos)])];
}

int FaceGluing::preimage_vertex(int v) const {
  int pos = face_corner_pos(face_b, v);
  for (int i = 0; i < 3; ++i)
    if (map[static_cast<std::size_t>(i)] == pos)
      return kFaceVerts[static_cast<std::size_t>(face_a)][static_cast<std::size_t>(i)];
  throw InternalError("gluing map is not a permutation");
}

int Triangulation::edge_degree(int edge_class_id) const {
  if (edge_class_id < 0 || edge_class_id >= static_cast<int>(edge_classes.size()))
    throw InputError(kStage, "unknown edge class id");
  return static_cast<int>(edge_classes[static_cast<std::size_t>(edge_class_id)].wedges.size());
}

const FaceGluing* Triangulation::gluing_at(int tet, int face) const {
  int g = gluing_of_face[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
  return g < 0 ? nullptr : &gluings[static_cast<std::size_t>(g)];
}

Triangulation validate_triangulation(const json& raw) {
  check_fields(raw, kStage, {"tets", "gluings"});
  const json& jtets = get_array(raw, "tets", kStage);
  const json& jgluings = get_array(raw, "gluings", kStage);

  std::vector<GeneralizedTetrahedron> tets;
  for (const json& jt : jtets) {
    check_fields(jt, kStage, {"status"});
    const json& st = get_array(jt, "status", kStage);
    if (st.size() != 4) throw InputError(kStage, "tet status must list 4 entries");
    GeneralizedTetrahedron tet;
    tet.id = static_cast<int>(tets.size());
    for (int v = 0; v < 4; ++v) {
      if (!st[static_cast<std::size_t>(v)].is_string())
        throw InputError(kStage, "vertex status must be a string");
      tet.vertex_status[static_cast<std::size_t>(v)] =
          vertex_status_from_string(st[static_cast<std::size_t>(v)].get<std::string>(), kStage);
    }
    tets.push_back(tet);
  }

  std::vector<FaceGluing> gluings;
  for (const json& jg : jgluings) {
    check_fields(jg, kStage, {"a", "b", "map"});
    const json& a = get_array(jg, "a", kStage);
    const json& b = get_array(jg, "b", kStage);
    const json& m = get_array(jg, "map", kStage);
    if (a.size() != 2 || b.size() != 2 || m.size() != 3)
      throw InputError(kStage, "gluing must have a:[tet,face], b:[tet,face], map:[3]");
    for (const json& x : a)
      if (!x.is_number_integer()) throw InputError(kStage, "gluing side must be integers");
    for (const json& x : b)
      if (!x.is_number_integer()) throw InputError(kStage, "gluing side must be integers");
    FaceGluing g;
    g.tet_a = a[0].get<int>();
    g.face_a = a[1].get<int>();
    g.tet_b = b[0].get<int>();
    g.face_b = b[1].get<int>();
    for (int i = 0; i < 3; ++i) {
      if (!m[static_cast<std::size_t>(i)].is_number_integer())
        throw InputError(kStage, "gluing map must be integers");
      g.map[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)].get<int>();
    }
    gluings.push_back(g);
  }
  return validate_triangulation(std::move(tets), std::move(gluings));
}

Triangulation validate_triangulation(std::vector<GeneralizedTetrahedron> tets,
                                     std::vector<FaceGluing> gluings) {
  Triangulation tri;
  tri.tets = std::move(tets);
  tri.gluings = std::move(gluings);
  const int t = tri.t();
  if (t < 1) throw InputError(kStage, "a triangulation needs at least one tetrahedron");
  for (int i = 0; i < t; ++i) tri.tets[static_cast<std::size_t>(i)].id = i;

  tri.gluing_of_face.assign(static_cast<std::size_t>(t), {-1, -1, -1, -1});
  for (int gi = 0; gi < static_cast<int>(tri.gluings.size()); ++gi) {
    const FaceGluing& g = tri.gluings[static_cast<std::size_t>(gi)];
    for (int side = 0; side < 2; ++side) {
      int tet = side == 0 ? g.tet_a : g.tet_b;
      int face = side == 0 ? g.face_a : g.face_b;
      if (tet < 0 || tet >= t) throw InputError(kStage, "gluing references a dangling tet id");
      if (face < 0 || face > 3) throw InputError(kStage, "face index out of range");
    }
    if (g.tet_a == g.tet_b && g.face_a == g.face_b)
      throw InputError(kStage, "face glued to itself");
    std::array<bool, 3> seen{false, false, false};
    for (int i = 0; i < 3; ++i) {
      int v = g.map[static_cast<std::size_t>(i)];
      if (v < 0 || v > 2 || seen[static_cast<std::size_t>(v)])
        throw InputError(kStage, "gluing map is not a permutation of {0,1,2}");
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (int side = 0; side < 2; ++side) {
      int tet = side == 0 ? g.tet_a : g.tet_b;
      int face = side == 0 ? g.face_a : g.face_b;
      int& slot = tri.gluing_of_face[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
      if (slot != -1) throw InputError(kStage, "face doubly glued");
      slot = gi;
    }
  }

  // Vertex classes.
  UnionFind vuf(4 * t);
  for (const FaceGluing& g : tri.gluings) {
    for (int i = 0; i < 3; ++i) {
      int va = kFaceVerts[static_cast<std::size_t>(g.face_a)][static_cast<std::size_t>(i)];
      int vb = g.image_vertex(va);
      vuf.unite(g.tet_a * 4 + va, g.tet_b * 4 + vb);
    }
  }
  tri.vertex_class_of.assign(static_cast<std::size_t>(t), {-1, -1, -1, -1});
  for (int tet = 0; tet < t; ++tet) {
    for (int v = 0; v < 4; ++v) {
      if (tri.vertex_class_of[static_cast<std::size_t>(tet)][static_cast<std::size_t>(v)] != -1)
        continue;
      int root = vuf.find(tet * 4 + v);
      VertexClass vc;
      vc.id = static_cast<int>(tri.vertex_classes.size());
      vc.status = tri.tets[static_cast<std::size_t>(tet)].vertex_status[static_cast<std::size_t>(v)];
      for (int tet2 = tet; tet2 < t; ++tet2) {
        for (int v2 = 0; v2 < 4; ++v2) {
          if (vuf.find(tet2 * 4 + v2) != root) continue;
          VertexStatus s =
              tri.tets[static_cast<std::size_t>(tet2)].vertex_status[static_cast<std::size_t>(v2)];
          if (s != vc.status)
            throw InputError(kStage, "inconsistent vertex statuses within a vertex class");
          vc.members.emplace_back(tet2, v2);
          tri.vertex_class_of[static_cast<std::size_t>(tet2)][static_cast<std::size_t>(v2)] = vc.id;
        }
      }
      tri.vertex_classes.push_back(std::move(vc));
    }
  }

  // Edge classes via directed tet-edges; a class identified with its own
  // reversal is a non-manifold edge and rejected.
  UnionFind euf(12 * t);
  for (const FaceGluing& g : tri.gluings) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        int u = kFaceVerts[static_cast<std::size_t>(g.face_a)][static_cast<std::size_t>(i)];
        int w = kFaceVerts[static_cast<std::size_t>(g.face_a)][static_cast<std::size_t>(j)];
        euf.unite(directed_id(g.tet_a, u, w), directed_id(g.tet_b, g.image_vertex(u), g.image_vertex(w)));
      }
    }
  }
  for (int tet = 0; tet < t; ++tet) {
    for (int e = 0; e < 6; ++e) {
      if (euf.find((tet * 6 + e) * 2) == euf.find((tet * 6 + e) * 2 + 1))
        throw InputError(kStage, "edge identified with itself reversed");
    }
  }

  tri.edge_class_of.assign(static_cast<std::size_t>(t), {-1, -1, -1, -1, -1, -1});
  tri.edge_dir_matches.assign(static_cast<std::size_t>(t), {false, false, false, false, false, false});
  tri.wedge_index_of.assign(static_cast<std::size_t>(t), {-1, -1, -1, -1, -1, -1});

  auto walk_step = [&tri](int tet, int u, int w, int leave_face)
      -> std::array<int, 4> {  // returns {tet', u', w', entered_face'} or {-1,...}
    const FaceGluing* g = tri.gluing_at(tet, leave_face);
    if (g == nullptr) return {-1, -1, -1, -1};
    if (g->tet_a == tet && g->face_a == leave_face)
      return {g->tet_b, g->image_vertex(u), g->image_vertex(w), g->face_b};
    return {g->tet_a, g->preimage_vertex(u), g->preimage_vertex(w), g->face_a};
  };

  for (int tet = 0; tet < t; ++tet) {
    for (int e = 0; e < 6; ++e) {
      if (tri.edge_class_of[static_cast<std::size_t>(tet)][static_cast<std::size_t>(e)] != -1)
        continue;
      int root = euf.find((tet * 6 + e) * 2);
      int degree = 0;
      for (int k = 0; k < 12 * t; k += 2)
        if (euf.find(k) == root || euf.find(k + 1) == root) ++degree;

      EdgeClass ec;
      ec.id = static_cast<int>(tri.edge_classes.size());

      int u0 = kEdgeVerts[static_cast<std::size_t>(e)][0];
      int w0 = kEdgeVerts[static_cast<std::size_t>(e)][1];
      std::array<int, 2> fpair = faces_containing_edge(e);

      // Forward walk leaving through the smaller face.
      std::vector<EdgeWedge> forward;
      forward.push_back({tet, u0, w0, -1, fpair[0]});
      bool closed = false;
      while (true) {
        EdgeWedge& cur = forward.back();
        std::array<int, 4> nxt = walk_step(cur.tet, cur.u, cur.w, cur.face_out);
        if (nxt[0] < 0) break;  // unglued: boundary end
        if (nxt[0] == tet && edge_index(nxt[1], nxt[2]) == e && static_cast<int>(forward.size()) == degree) {
          closed = true;
          forward.front().face_in = nxt[3];
          break;
        }
        EdgeWedge w;
        w.tet = nxt[0];
        w.u = nxt[1];
        w.w = nxt[2];
        w.face_in = nxt[3];
        std::array<int, 2> fp = faces_containing_edge(w.edge());
        w.face_out = (fp[0] == w.face_in) ? fp[1] : fp[0];
        forward.push_back(w);
        if (static_cast<int>(forward.size()) > degree)
          throw InternalError("edge walk exceeded class degree");
      }

      if (closed) {
        ec.boundary = false;
        ec.wedges = std::move(forward);
      } else {
        // Boundary edge: walk backward from the start through the other face.
        forward.back().face_out = -1;
        std::vector<EdgeWedge> backward;
        EdgeWedge start = forward.front();
        int leave = fpair[1];
        int curTet = start.tet, curU = start.u, curW = start.w;
        while (true) {
          std::array<int, 4> nxt = walk_step(curTet, curU, curW, leave);
          if (nxt[0] < 0) break;
          EdgeWedge w;
          w.tet = nxt[0];
          w.u = nxt[1];
          w.w = nxt[2];
          w.face_out = nxt[3];  // leaving toward the start when read forward
          std::array<int, 2> fp = faces_containing_edge(w.edge());
          w.face_in = (fp[0] == w.face_out) ? fp[1] : fp[0];
          backward.push_back(w);
          curTet = w.tet;
          curU = w.u;
          curW = w.w;
          leave = w.face_in;
          if (static_cast<int>(backward.size()) + static_cast<int>(forward.size()) > degree)
            throw InternalError("edge walk exceeded class degree");
        }
        ec.boundary = true;
        std::reverse(backward.begin(), backward.end());
        if (!backward.empty()) forward.front().face_in = fpair[1];
        ec.wedges = std::move(backward);
        for (EdgeWedge& w : forward) ec.wedges.push_back(w);
        ec.wedges.front().face_in = -1;
        ec.wedges.back().face_out = -1;
      }

      if (static_cast<int>(ec.wedges.size()) != degree)
        throw InternalError("edge walk did not visit the whole class");

      for (int wi = 0; wi < static_cast<int>(ec.wedges.size()); ++wi) {
        const EdgeWedge& w = ec.wedges[static_cast<std::size_t>(wi)];
        int we = w.edge();
        tri.edge_class_of[static_cast<std::size_t>(w.tet)][static_cast<std::size_t>(we)] = ec.id;
        tri.edge_dir_matches[static_cast<std::size_t>(w.tet)][static_cast<std::size_t>(we)] =
            (w.u < w.w);
        tri.wedge_index_of[static_cast<std::size_t>(w.tet)][static_cast<std::size_t>(we)] = wi;
      }
      tri.edge_classes.push_back(std::move(ec));
    }
  }

  int degree_sum = 0;
  for (const EdgeClass& ec : tri.edge_classes) degree_sum += static_cast<int>(ec.wedges.size());
  if (degree_sum != 6 * t) throw InternalError("edge degrees do not sum to 6t");

  for (int tet = 0; tet < t; ++tet)
    for (int f = 0; f < 4; ++f)
      if (tri.gluing_of_face[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)] < 0)
        tri.boundary_faces.emplace_back(tet, f);

  return tri;
}

json triangulation_to_json(const Triangulation& tri) {
  json out;
  out["tets"] = json::array();
  for (const GeneralizedTetrahedron& tet : tri.tets) {
    json jt;
    jt["status"] = json::array();
    for (int v = 0; v < 4; ++v)
      jt["status"].push_back(to_string(tet.vertex_status[static_cast<std::size_t>(v)]));
    out["tets"].push_back(jt);
  }
  out["gluings"] = json::array();
  for (const FaceGluing& g : tri.gluings) {
    json jg;
    jg["a"] = json::array({g.tet_a, g.face_a});
    jg["b"] = json::array({g.tet_b, g.face_b});
    jg["map"] = json::array({g.map[0], g.map[1], g.map[2]});
    out["gluings"].push_back(jg);
  }
  return out;
}

}  // namespace pcert
