#include "pcert/coloring.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pcert/error.hpp"

namespace pcert {

namespace {
constexpr const char* kStage = "coloring";
}

const char* face_color_name(FaceColor c) {
  switch (c) {
    case FaceColor::dark_red:
      return "dark_red";
    case FaceColor::light_red:
      return "light_red";
    case FaceColor::blue:
      return "blue";
    case FaceColor::yellow:
      return "yellow";
  }
  return "?";
}

const char* light_red_label_name(LightRedLabel l) {
  switch (l) {
    case LightRedLabel::lr_b:
      return "lr_b";
    case LightRedLabel::lr_y:
      return "lr_y";
    case LightRedLabel::lr_r:
      return "lr_r";
  }
  return "?";
}

std::vector<std::vector<int>> compute_families(const SurfaceComplex& sc) {
  std::vector<int> seen(sc.face_count(), 0);
  for (const auto& fam : sc.families) {
    if (fam.empty()) throw InputError(kStage, "families must be nonempty");
    for (int f : fam) {
      if (f < 0 || f >= sc.face_count() || seen[f]++) {
        throw InputError(kStage, "families must partition the faces");
      }
    }
    if (fam.size() > 1 && fam.back() < fam.front()) {
      throw InputError(kStage, "family direction is not canonical");
    }
    if (sc.synthetic) continue;
    const FaceProvenance& head = sc.provenance[fam[0]];
    for (int j = 0; j < static_cast<int>(fam.size()); ++j) {
      const FaceProvenance& p = sc.provenance[fam[j]];
      if (p.is_vertex_disk() != head.is_vertex_disk()) {
        throw InputError(kStage, "family mixes vertex disks with normal faces");
      }
      if (p.is_vertex_disk()) {
        if (p.edge_class != head.edge_class || p.position != head.position + j) {
          throw InputError(kStage, "family members are not consecutive along their edge class");
        }
      } else {
        const bool parallel = p.tet == head.tet && p.disk == head.disk && p.type == head.type &&
                              p.tube_half == head.tube_half && p.stack == head.stack + j;
        if (!parallel || (p.tube_half != 0 && fam.size() != 1)) {
          throw InputError(kStage, "family members are not consecutive parallel pieces");
        }
      }
    }
  }
  for (int f = 0; f < sc.face_count(); ++f) {
    if (!seen[f]) throw InputError(kStage, "families must partition the faces");
  }
  return sc.families;
}

Coloring color_families(const std::vector<std::vector<int>>& families, int face_count) {
  Coloring col;
  col.color.assign(face_count, FaceColor::dark_red);
  col.light_label.assign(face_count, LightRedLabel::lr_r);
  for (const auto& fam : families) {
    const int n = static_cast<int>(fam.size());
    for (int j = 0; j < n; ++j) {
      const int pos = j + 1;
      if (pos == 1 || pos == n) {
        col.color[fam[j]] = FaceColor::dark_red;
      } else if (pos == 2 || pos == n - 1) {
        col.color[fam[j]] = FaceColor::light_red;
      } else {
        col.color[fam[j]] = (pos - 3) % 2 == 0 ? FaceColor::blue : FaceColor::yellow;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (col.color[fam[j]] != FaceColor::light_red) continue;
      // The label records the color away from the nearest family end.
      const int inner = j == 1 ? j + 1 : j - 1;
      switch (col.color[fam[inner]]) {
        case FaceColor::blue:
          col.light_label[fam[j]] = LightRedLabel::lr_b;
          break;
        case FaceColor::yellow:
          col.light_label[fam[j]] = LightRedLabel::lr_y;
          break;
        default:
          col.light_label[fam[j]] = LightRedLabel::lr_r;
          break;
      }
    }
  }
  return col;
}

FiberNeighbors fiber_neighbors(const SurfaceComplex& sc, int face) {
  const auto& fam = sc.families[sc.family_of[face]];
  const int n = static_cast<int>(fam.size());
  if (n < 2) throw InputError(kStage, "face f" + std::to_string(face) + " has no family neighbors");
  const int j = sc.position_in_family[face];
  const int prev = j > 0 ? fam[j - 1] : -1;
  const int next = j < n - 1 ? fam[j + 1] : -1;
  if (sc.side_parity[face] == 0) return {prev, next};
  return {next, prev};
}

VertexPartition classify_vertices(const SurfaceComplex& sc, const Coloring& col) {
  const Complex& c = sc.complex;
  std::vector<std::vector<int>> corner_faces(c.vertex_count);
  for (int f = 0; f < static_cast<int>(c.faces.size()); ++f) {
    for (int cy = 0; cy < static_cast<int>(c.faces[f].cycles.size()); ++cy) {
      for (int p = 0; p < static_cast<int>(c.faces[f].cycles[cy].size()); ++p) {
        corner_faces[c.corner_vertex(f, cy, p)].push_back(f);
      }
    }
  }
  VertexPartition part;
  for (int v = 0; v < c.vertex_count; ++v) {
    if (c.vertex_on_boundary[v]) continue;
    bool in_v = false;
    for (int f : corner_faces[v]) {
      if (col.is_red(f) && c.faces[f].kind != FaceKind::vertex_disk) in_v = true;
    }
    if (!in_v) continue;
    if (corner_faces[v].size() != 3) {
      throw InternalError("interior vertex without exactly three corners");
    }
    int reds = 0, blues = 0, yellows = 0;
    for (int f : corner_faces[v]) {
      if (col.is_red(f)) {
        ++reds;
      } else if (col.color[f] == FaceColor::blue) {
        ++blues;
      } else {
        ++yellows;
      }
    }
    part.v_all.push_back(v);
    if (reds >= 2) {
      part.v0.push_back(v);
    } else if (reds == 1 && blues == 1 && yellows == 1) {
      part.v_plus.push_back(v);
    } else if (reds == 1 && (blues == 2 || yellows == 2)) {
      part.v_minus.push_back(v);
    } else {
      throw InternalError("vertex of the red graph cannot be classified");
    }
  }
  return part;
}

Coloring choose_swap(const SurfaceComplex& sc, const Coloring& col) {
  Coloring swapped = col;
  swapped.swap_applied = true;
  for (int f = 0; f < sc.face_count(); ++f) {
    if (sc.complex.faces[f].kind != FaceKind::vertex_disk) continue;
    if (col.color[f] == FaceColor::blue) {
      swapped.color[f] = FaceColor::yellow;
    } else if (col.color[f] == FaceColor::yellow) {
      swapped.color[f] = FaceColor::blue;
    }
  }
  const size_t before = classify_vertices(sc, col).v_plus.size();
  const size_t after = classify_vertices(sc, swapped).v_plus.size();
  return after < before ? swapped : col;
}

Gamma compute_gamma(const SurfaceComplex& sc, const Coloring& col) {
  const Complex& c = sc.complex;
  std::vector<char> in_gamma(c.edge_count, 0);
  for (int e = 0; e < c.edge_count; ++e) {
    if (c.uses[e].size() != 2) continue;
    const FaceColor a = col.color[c.uses[e][0].face];
    const FaceColor b = col.color[c.uses[e][1].face];
    if ((a == FaceColor::blue && b == FaceColor::yellow) ||
        (a == FaceColor::yellow && b == FaceColor::blue)) {
      in_gamma[e] = 1;
    }
  }
  std::vector<std::vector<int>> at(c.vertex_count);
  for (int e = 0; e < c.edge_count; ++e) {
    if (!in_gamma[e]) continue;
    at[c.vertex_of_slot[2 * e]].push_back(e);
    at[c.vertex_of_slot[2 * e + 1]].push_back(e);
  }
  Gamma out;
  for (int v = 0; v < c.vertex_count; ++v) {
    if (at[v].size() > 2) throw InternalError("three blue-yellow edges at a vertex");
    if (at[v].size() == 1) out.endpoints.push_back(v);
  }
  std::vector<char> visited(c.edge_count, 0);
  const auto other_end = [&](int e, int v) {
    const int tail = c.vertex_of_slot[2 * e];
    const int head = c.vertex_of_slot[2 * e + 1];
    return v == tail ? head : tail;
  };
  const auto next_unvisited = [&](int v) {
    for (int e : at[v]) {
      if (!visited[e]) return e;
    }
    return -1;
  };
  for (int v : out.endpoints) {
    if (visited[at[v][0]]) continue;  // the far end of an already-walked arc
    std::vector<int> arc;
    int cur = v;
    for (int e = next_unvisited(cur); e >= 0; e = next_unvisited(cur)) {
      visited[e] = 1;
      arc.push_back(e);
      cur = other_end(e, cur);
    }
    out.arcs.push_back(std::move(arc));
  }
  for (int e0 = 0; e0 < c.edge_count; ++e0) {
    if (!in_gamma[e0] || visited[e0]) continue;
    std::vector<int> circle;
    int cur = c.vertex_of_slot[2 * e0];
    for (int e = next_unvisited(cur); e >= 0; e = next_unvisited(cur)) {
      visited[e] = 1;
      circle.push_back(e);
      cur = other_end(e, cur);
    }
    out.circles.push_back(std::move(circle));
  }
  return out;
}

json coloring_to_json(const Coloring& col, const Gamma& gamma) {
  json faces = json::object();
  for (int f = 0; f < static_cast<int>(col.color.size()); ++f) {
    const std::string key = "f" + std::to_string(f);
    if (col.color[f] == FaceColor::light_red) {
      faces[key] = json{{"light_red", light_red_label_name(col.light_label[f])}};
    } else {
      faces[key] = face_color_name(col.color[f]);
    }
  }
  json out = json::object();
  out["faces"] = std::move(faces);
  out["swap_applied"] = col.swap_applied;
  out["gamma_arcs"] = gamma.arcs.size();
  out["gamma_circles"] = gamma.circles.size();
  return out;
}

ColoringChecks check_coloring_invariants(const SurfaceComplex& sc, const Coloring& col,
                                         const VertexPartition& part, const Gamma& gamma) {
  ColoringChecks out;
  const auto demoted = [&](const std::string& msg) {
    if (sc.synthetic) {
      out.warnings.push_back(msg);
    } else {
      out.failures.push_back(msg);
    }
  };

  for (int f = 0; f < sc.face_count(); ++f) {
    const FaceColor cf = col.color[f];
    if (cf == FaceColor::dark_red) continue;
    const FiberNeighbors nb = fiber_neighbors(sc, f);
    const auto ok_for = [&](int g) {
      if (g < 0) return true;
      const FaceColor cg = col.color[g];
      if (cf == FaceColor::blue) return cg == FaceColor::yellow || cg == FaceColor::light_red;
      if (cf == FaceColor::yellow) return cg == FaceColor::blue || cg == FaceColor::light_red;
      return true;
    };
    if (!ok_for(nb.side1) || !ok_for(nb.side2)) {
      out.failures.push_back("face f" + std::to_string(f) + " (" + face_color_name(cf) +
                             ") has a fiber neighbor of a forbidden color");
    }
    if (cf == FaceColor::light_red) {
      const bool dark1 = nb.side1 >= 0 && col.color[nb.side1] == FaceColor::dark_red;
      const bool dark2 = nb.side2 >= 0 && col.color[nb.side2] == FaceColor::dark_red;
      if (!dark1 && !dark2) {
        out.failures.push_back("light red face f" + std::to_string(f) +
                               " has no dark red fiber neighbor");
      }
    }
  }

  for (int f = 0; f < sc.face_count(); ++f) {
    if (sc.complex.faces[f].kind != FaceKind::vertex_disk || !col.is_red(f)) continue;
    const int n = static_cast<int>(sc.families[sc.family_of[f]].size());
    const int pos = sc.position_in_family[f] + 1;
    if (pos != 1 && pos != 2 && pos != n - 1 && pos != n) {
      out.failures.push_back("red vertex disk f" + std::to_string(f) +
                             " sits away from the ends of its family");
    }
  }
  for (int e = 0; e < sc.complex.edge_count; ++e) {
    if (sc.complex.uses[e].size() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      const int f = sc.complex.uses[e][side].face;
      const int g = sc.complex.uses[e][1 - side].face;
      if (sc.complex.faces[f].kind == FaceKind::vertex_disk && col.is_red(f) &&
          sc.complex.faces[g].kind != FaceKind::vertex_disk && !col.is_red(g)) {
        demoted("red vertex disk f" + std::to_string(f) + " meets non-red face f" +
                std::to_string(g));
      }
    }
  }

  if (gamma.endpoints != part.v_plus) {
    demoted("arc endpoints differ from the tri-colored vertices (" +
            std::to_string(gamma.endpoints.size()) + " endpoints, " +
            std::to_string(part.v_plus.size()) + " tri-colored)");
  }
  if (2 * gamma.arcs.size() != gamma.endpoints.size()) {
    out.failures.push_back("arc count does not match endpoint count");
  }
  if (part.v_plus.size() > part.v_all.size() / 2) {
    demoted("more than half of the classified vertices are tri-colored after the swap");
  }
  return out;
}

}  // namespace pcert
