#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pcert/coloring.hpp"
#include "pcert/error.hpp"
#include "pcert/normal_surface.hpp"
#include "pcert/surface_complex.hpp"
#include "pcert/triangulation.hpp"

using namespace pcert;
using pcert::testing::brick_ring_json;
using pcert::testing::s3_2tet;
using pcert::testing::single_tet;

namespace {

SurfaceComplex build(const Triangulation& tri, const std::string& text) {
  const NormalCoordinates coords = parse_coordinates(parse_json_text(text, "test"));
  return build_from_coordinates(tri, validate_coordinates(tri, coords));
}

std::vector<FaceColor> colors_of(const Coloring& col, const std::vector<int>& faces) {
  std::vector<FaceColor> out;
  for (int f : faces) out.push_back(col.color[f]);
  return out;
}

}  // namespace

TEST_CASE("coloring rules by family size") {
  using enum FaceColor;
  const auto pattern = [](int n) {
    std::vector<int> fam(n);
    for (int i = 0; i < n; ++i) fam[i] = i;
    const Coloring col = color_families({fam}, n);
    return colors_of(col, fam);
  };
  CHECK(pattern(1) == std::vector<FaceColor>{dark_red});
  CHECK(pattern(2) == std::vector<FaceColor>{dark_red, dark_red});
  CHECK(pattern(3) == std::vector<FaceColor>{dark_red, light_red, dark_red});
  CHECK(pattern(4) == std::vector<FaceColor>{dark_red, light_red, light_red, dark_red});
  CHECK(pattern(5) == std::vector<FaceColor>{dark_red, light_red, blue, light_red, dark_red});
  CHECK(pattern(6) ==
        std::vector<FaceColor>{dark_red, light_red, blue, yellow, light_red, dark_red});
  CHECK(pattern(7) ==
        std::vector<FaceColor>{dark_red, light_red, blue, yellow, blue, light_red, dark_red});
}

TEST_CASE("light red labels name the color away from the family end") {
  const auto labels = [](int n) {
    std::vector<int> fam(n);
    for (int i = 0; i < n; ++i) fam[i] = i;
    const Coloring col = color_families({fam}, n);
    std::vector<LightRedLabel> out;
    for (int f : fam) {
      if (col.color[f] == FaceColor::light_red) out.push_back(col.light_label[f]);
    }
    return out;
  };
  using enum LightRedLabel;
  CHECK(labels(3) == std::vector<LightRedLabel>{lr_r});
  CHECK(labels(4) == std::vector<LightRedLabel>{lr_r, lr_r});
  CHECK(labels(5) == std::vector<LightRedLabel>{lr_b, lr_b});
  CHECK(labels(6) == std::vector<LightRedLabel>{lr_b, lr_y});
  CHECK(labels(7) == std::vector<LightRedLabel>{lr_b, lr_b});
}

TEST_CASE("fiber neighbors follow the family order") {
  const Triangulation tri = single_tet();
  const SurfaceComplex sc = build(tri, R"({"tets":[{"tri":[7,0,0,0],"quad":[0,0,0]}]})");

  // Faces 0..6 are the triangle stack in order.
  const FiberNeighbors mid = fiber_neighbors(sc, 2);
  CHECK(std::set<int>{mid.side1, mid.side2} == std::set<int>{1, 3});
  const FiberNeighbors end = fiber_neighbors(sc, 0);
  CHECK(std::set<int>{end.side1, end.side2} == std::set<int>{-1, 1});

  const SurfaceComplex oct =
      build(tri, R"({"tets":[{"tri":[0,0,0,0],"quad":[0,0,0]}],)"
                 R"("exceptional":{"tet":0,"kind":"octagon","type":1}})");
  CHECK_THROWS_WITH_AS(static_cast<void>(fiber_neighbors(oct, 0)),
                       "coloring: face f0 has no family neighbors", InputError);
}

TEST_CASE("gamma decomposes blue-yellow edges into arcs and circles") {
  const json file = parse_json_text(R"({
    "faces": [
      {"kind": "vertex_disk", "boundary": [1, -2]},
      {"kind": "vertex_disk", "boundary": [2, -3]},
      {"kind": "vertex_disk", "boundary": [3, -1]}
    ],
    "edges": 3,
    "vertices": 2,
    "families": [[0], [1], [2]],
    "sides": {"f0": [1, 2], "f1": [1, 2], "f2": [1, 2]}
  })",
                                    "test");
  const SurfaceComplex sc = build_from_interchange(file);

  Coloring col;
  col.color = {FaceColor::blue, FaceColor::yellow, FaceColor::dark_red};
  col.light_label.assign(3, LightRedLabel::lr_r);
  const Gamma arc = compute_gamma(sc, col);
  REQUIRE(arc.arcs.size() == 1);
  CHECK(arc.arcs[0] == std::vector<int>{1});
  CHECK(arc.endpoints.size() == 2);
  CHECK(arc.circles.empty());

  col.color = {FaceColor::blue, FaceColor::yellow, FaceColor::yellow};
  const Gamma circle = compute_gamma(sc, col);
  CHECK(circle.arcs.empty());
  CHECK(circle.endpoints.empty());
  REQUIRE(circle.circles.size() == 1);
  CHECK(circle.circles[0].size() == 2);
}

TEST_CASE("short families color everything dark red") {
  const Triangulation tri = s3_2tet();
  const SurfaceComplex sc =
      build(tri, R"({"tets":[{"tri":[1,1,1,1],"quad":[0,0,0]},{"tri":[1,1,1,1],"quad":[0,0,0]}]})");
  const Coloring col = color_families(compute_families(sc), sc.face_count());
  for (int f = 0; f < sc.face_count(); ++f) CHECK(col.color[f] == FaceColor::dark_red);

  const Coloring chosen = choose_swap(sc, col);
  CHECK_FALSE(chosen.swap_applied);
  const VertexPartition part = classify_vertices(sc, chosen);
  CHECK(part.v_all == part.v0);
  CHECK(part.v_plus.empty());
  CHECK(part.v_minus.empty());
  CHECK_FALSE(part.v_all.empty());

  const Gamma gamma = compute_gamma(sc, chosen);
  CHECK(gamma.arcs.empty());
  CHECK(gamma.circles.empty());
  const ColoringChecks checks = check_coloring_invariants(sc, chosen, part, gamma);
  CHECK(checks.failures.empty());
  CHECK(checks.warnings.empty());
}

TEST_CASE("deep vertex links produce pure gamma circles") {
  const Triangulation tri = s3_2tet();
  const SurfaceComplex sc =
      build(tri, R"({"tets":[{"tri":[7,7,7,7],"quad":[0,0,0]},{"tri":[7,7,7,7],"quad":[0,0,0]}]})");
  CHECK(sc.complex.component_count == 28);
  CHECK(sc.complex.chi() == 56);

  const Coloring col = color_families(compute_families(sc), sc.face_count());
  const Coloring chosen = choose_swap(sc, col);
  CHECK_FALSE(chosen.swap_applied);
  const VertexPartition part = classify_vertices(sc, chosen);
  CHECK(part.v_plus.empty());
  CHECK(part.v_minus.empty());
  CHECK(part.v_all == part.v0);

  // Each edge class misaligns the vertex-disk alternation with the piece
  // alternation at three intersection points, giving 6 * 3 short circles.
  const Gamma gamma = compute_gamma(sc, chosen);
  CHECK(gamma.arcs.empty());
  CHECK(gamma.endpoints.empty());
  CHECK(gamma.circles.size() == 18);
  for (const auto& c : gamma.circles) CHECK(c.size() == 2);

  const ColoringChecks checks = check_coloring_invariants(sc, chosen, part, gamma);
  CHECK(checks.failures.empty());
  CHECK(checks.warnings.empty());

  // Swapping blue and yellow everywhere changes nothing structural.
  Coloring flipped = chosen;
  for (int f = 0; f < sc.face_count(); ++f) {
    if (flipped.color[f] == FaceColor::blue) {
      flipped.color[f] = FaceColor::yellow;
    } else if (flipped.color[f] == FaceColor::yellow) {
      flipped.color[f] = FaceColor::blue;
    }
  }
  const VertexPartition fpart = classify_vertices(sc, flipped);
  CHECK(fpart.v_all == part.v_all);
  CHECK(fpart.v_plus == part.v_plus);
  const Gamma fgamma = compute_gamma(sc, flipped);
  CHECK(fgamma.circles.size() == gamma.circles.size());
  CHECK(fgamma.arcs.size() == gamma.arcs.size());
}

TEST_CASE("a brick-ring torus colors into blue and yellow rings") {
  const SurfaceComplex sc = build_from_interchange(brick_ring_json(8, "vertex_disk"));
  CHECK(sc.complex.chi() == 0);
  CHECK(sc.complex.orientable(0));
  CHECK(sc.complex.genus(0) == 1);

  const Coloring col = color_families(compute_families(sc), sc.face_count());
  CHECK(colors_of(col, {0, 1, 2, 3, 4, 5, 6, 7}) ==
        std::vector<FaceColor>{FaceColor::dark_red, FaceColor::light_red, FaceColor::blue,
                               FaceColor::yellow, FaceColor::blue, FaceColor::yellow,
                               FaceColor::light_red, FaceColor::dark_red});
  CHECK(col.light_label[1] == LightRedLabel::lr_b);
  CHECK(col.light_label[6] == LightRedLabel::lr_y);

  const Coloring chosen = choose_swap(sc, col);
  const VertexPartition part = classify_vertices(sc, chosen);
  CHECK(part.v_all.empty());  // every face is a vertex disk
  const Gamma gamma = compute_gamma(sc, chosen);
  CHECK(gamma.arcs.empty());
  CHECK(gamma.circles.size() == 3);
  for (const auto& c : gamma.circles) CHECK(c.size() == 2);

  const ColoringChecks checks = check_coloring_invariants(sc, chosen, part, gamma);
  CHECK(checks.failures.empty());
  CHECK(checks.warnings.empty());

  const json report = coloring_to_json(chosen, gamma);
  CHECK(report["faces"]["f0"] == "dark_red");
  CHECK(report["faces"]["f1"] == json{{"light_red", "lr_b"}});
  CHECK(report["faces"]["f2"] == "blue");
  CHECK(report["swap_applied"] == false);
  CHECK(report["gamma_arcs"] == 0);
  CHECK(report["gamma_circles"] == 3);
}

TEST_CASE("family validation rejects tampered partitions") {
  const Triangulation tri = single_tet();
  SurfaceComplex sc = build(tri, R"({"tets":[{"tri":[3,0,0,0],"quad":[0,0,0]}]})");
  REQUIRE(sc.families[0].size() == 3);

  SurfaceComplex reversed = sc;
  std::reverse(reversed.families[0].begin(), reversed.families[0].end());
  CHECK_THROWS_WITH_AS(static_cast<void>(compute_families(reversed)),
                       "coloring: family direction is not canonical", InputError);

  SurfaceComplex merged = sc;
  REQUIRE(merged.families.size() >= 2);
  std::vector<int> joined = merged.families[0];
  for (int f : merged.families[1]) joined.push_back(f);
  merged.families[1] = joined;
  merged.families.erase(merged.families.begin());
  CHECK_THROWS_AS(static_cast<void>(compute_families(merged)), InputError);

  SurfaceComplex dropped = sc;
  dropped.families.pop_back();
  CHECK_THROWS_WITH_AS(static_cast<void>(compute_families(dropped)),
                       "coloring: families must partition the faces", InputError);
}
