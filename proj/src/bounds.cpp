#include "pcert/bounds.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pcert/complex.hpp"
#include "pcert/error.hpp"

namespace pcert {

namespace {

constexpr const char* kStage = "bounds";

}  // namespace

RedCounts count_red(const SurfaceComplex& sc, const Coloring& col) {
  RedCounts out;
  for (int f = 0; f < sc.face_count(); ++f) {
    if (!col.is_red(f)) continue;
    switch (sc.complex.faces[f].kind) {
      case FaceKind::truncated_triangle: ++out.triangles; break;
      case FaceKind::truncated_quad: ++out.quads; break;
      case FaceKind::truncated_octagon:
      case FaceKind::tubed_piece: ++out.exceptional; break;
      case FaceKind::vertex_disk: break;
    }
  }
  return out;
}

long long chi_of(const SurfaceComplex& sc, const std::vector<int>& faces) {
  std::set<int> seen;
  for (int f : faces) {
    if (f < 0 || f >= sc.face_count()) throw InputError(kStage, "face id out of range");
    if (!seen.insert(f).second) throw InputError(kStage, "duplicate face in subset");
  }
  if (faces.empty()) return 0;
  return subcomplex(sc.complex, faces).complex.chi();
}

std::pair<bool, bool> red_branches(long long r_t, long long r_q, long long t) {
  const bool first = r_t <= 16 * t && r_q <= 4 * t + 4;
  const bool second = r_t <= 16 * t + 4 && r_q <= 4 * t;
  return {first, second};
}

bool BoundsReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const BoundCheck& c) { return c.verdict == "fail"; });
}

const BoundCheck* BoundsReport::find(const std::string& name) const {
  for (const BoundCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

BoundsReport check_lemmas(const SurfaceComplex& sc, const Coloring& col,
                          const VertexPartition& part, const Gamma& gamma) {
  const Complex& cx = sc.complex;
  BoundsReport rpt;
  rpt.t = sc.declared_t;
  const long long t = rpt.t;

  rpt.connected = cx.component_count == 1;
  for (int c = 0; c < cx.component_count; ++c) {
    rpt.genus_per_component.push_back(cx.orientable(c) ? cx.genus(c) : -1);
  }
  rpt.orientable = std::all_of(cx.component_orientable.begin(), cx.component_orientable.end(),
                               [](bool b) { return b; });
  if (rpt.connected && rpt.orientable) rpt.genus = rpt.genus_per_component[0];

  rpt.red = count_red(sc, col);
  std::tie(rpt.red_branch_1, rpt.red_branch_2) =
      red_branches(rpt.red.triangles, rpt.red.quads, t);

  std::vector<int> red_faces, by_faces;
  for (int f = 0; f < sc.face_count(); ++f) {
    if (col.is_red(f)) {
      red_faces.push_back(f);
    } else {
      by_faces.push_back(f);
    }
  }

  rpt.chi_sigma = cx.chi();
  rpt.chi_red = chi_of(sc, red_faces);
  rpt.chi_blue_yellow = chi_of(sc, by_faces);
  rpt.vertex_set = static_cast<long long>(part.v_all.size());
  rpt.gamma_arcs = static_cast<long long>(gamma.arcs.size());

  // Boundary edges of a colored part: edges with exactly one use in the part.
  const auto boundary_edges = [&cx, &col](bool red_side) {
    std::set<int> out;
    for (int e = 0; e < cx.edge_count; ++e) {
      int inside = 0;
      for (const EdgeUse& u : cx.uses[e]) {
        if (col.is_red(u.face) == red_side) ++inside;
      }
      if (inside == 1) out.insert(e);
    }
    return out;
  };
  const std::set<int> del_red = boundary_edges(true);
  const std::set<int> del_by = boundary_edges(false);
  std::vector<int> sym_diff;
  std::set_symmetric_difference(del_red.begin(), del_red.end(), del_by.begin(), del_by.end(),
                                std::back_inserter(sym_diff));

  // The blue/yellow part cut open along the gamma arcs.
  if (by_faces.empty()) {
    rpt.boundary_blue_yellow = 0;
    rpt.cut_chi_sum = 0;
    rpt.cut_boundary_sum = 0;
  } else {
    const SubcomplexResult sub = subcomplex(cx, by_faces);
    rpt.boundary_blue_yellow = static_cast<long long>(sub.complex.boundary_circles.size());
    std::vector<int> arc_edges;
    for (const auto& arc : gamma.arcs) {
      for (int e : arc) {
        const int mapped = sub.new_edge_id[e];
        if (mapped < 0) throw InternalError("gamma arc leaves the blue/yellow part");
        arc_edges.push_back(mapped);
      }
    }
    const CutResult opened = cut(sub.complex, arc_edges);
    rpt.cut_chi_sum = opened.complex.chi();
    rpt.cut_boundary_sum = static_cast<long long>(opened.complex.boundary_circles.size());
  }

  const long long genus_gate = 76 * t + 26;
  rpt.gate_applies = rpt.connected && rpt.orientable && rpt.genus >= genus_gate;

  const auto push = [&rpt](std::string name, long long lhs, long long rhs, bool pass) {
    rpt.checks.push_back({std::move(name), lhs, rhs, pass ? "pass" : "fail"});
  };
  const auto push_gated = [&rpt](std::string name, long long lhs, long long rhs, bool applies,
                                 bool pass) {
    rpt.checks.push_back({std::move(name), lhs, rhs, applies ? (pass ? "pass" : "fail") : "n/a"});
  };

  push("number_of_red", (rpt.red_branch_1 ? 1 : 0) + (rpt.red_branch_2 ? 1 : 0), 1,
       rpt.red_branch_1 || rpt.red_branch_2);

  long long worst_family = 0;
  for (const auto& fam : sc.families) {
    long long reds = 0;
    for (int f : fam) {
      if (col.is_red(f)) ++reds;
    }
    worst_family = std::max(worst_family, reds);
  }
  push("per_family_red", worst_family, 4, worst_family <= 4);

  push("boundary_bound", rpt.boundary_blue_yellow, 44 * t + 14,
       rpt.boundary_blue_yellow <= 44 * t + 14);
  push("vertex_bound", rpt.vertex_set, 128 * t + 48, rpt.vertex_set <= 128 * t + 48);
  push("gamma_bound", rpt.gamma_arcs, 32 * t + 12, rpt.gamma_arcs <= 32 * t + 12);

  // The red and blue/yellow parts meet in circles only when the surface is
  // closed; with boundary they may share arcs and neither identity is a
  // theorem.
  const bool closed = cx.boundary_circles.empty();
  push_gated("boundary_sets_match", static_cast<long long>(sym_diff.size()), 0, closed,
             sym_diff.empty());
  push_gated("chi_additive", rpt.chi_red + rpt.chi_blue_yellow, rpt.chi_sigma, closed,
             rpt.chi_red + rpt.chi_blue_yellow == rpt.chi_sigma);

  rpt.checks.push_back({"genus_gate", rpt.genus, genus_gate,
                        rpt.gate_applies ? "pass" : "n/a"});
  push_gated("chi_bound", rpt.chi_blue_yellow, -(108 * t + 38), rpt.gate_applies,
             rpt.chi_blue_yellow <= -(108 * t + 38));
  push_gated("inequality_1", rpt.cut_chi_sum, -rpt.cut_boundary_sum, rpt.gate_applies,
             rpt.cut_chi_sum <= -rpt.cut_boundary_sum);

  return rpt;
}

json bounds_report_to_json(const BoundsReport& rpt) {
  json out = json::object();
  out["t"] = rpt.t;
  out["connected"] = rpt.connected;
  out["orientable"] = rpt.orientable;
  out["genus"] = rpt.genus;
  out["genus_per_component"] = rpt.genus_per_component;
  out["red_triangles"] = rpt.red.triangles;
  out["red_quads"] = rpt.red.quads;
  out["red_exceptional"] = rpt.red.exceptional;
  out["red_branches"] = json::array({rpt.red_branch_1, rpt.red_branch_2});
  out["chi_sigma"] = rpt.chi_sigma;
  out["chi_red"] = rpt.chi_red;
  out["chi_blue_yellow"] = rpt.chi_blue_yellow;
  out["boundary_blue_yellow"] = rpt.boundary_blue_yellow;
  out["vertex_set"] = rpt.vertex_set;
  out["gamma_arcs"] = rpt.gamma_arcs;
  out["gate_applies"] = rpt.gate_applies;
  out["cut_chi_sum"] = rpt.cut_chi_sum;
  out["cut_boundary_sum"] = rpt.cut_boundary_sum;
  json checks = json::array();
  for (const BoundCheck& c : rpt.checks) {
    json row = json::object();
    row["name"] = c.name;
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    row["verdict"] = c.verdict;
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace pcert
