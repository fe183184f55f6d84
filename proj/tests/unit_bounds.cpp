#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pcert/bounds.hpp"
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

struct Pipeline {
  SurfaceComplex sc;
  Coloring col;
  VertexPartition part;
  Gamma gamma;
  BoundsReport report;
};

Pipeline run(SurfaceComplex sc) {
  Pipeline p{std::move(sc), {}, {}, {}, {}};
  p.col = choose_swap(p.sc, color_families(compute_families(p.sc), p.sc.face_count()));
  p.part = classify_vertices(p.sc, p.col);
  p.gamma = compute_gamma(p.sc, p.col);
  p.report = check_lemmas(p.sc, p.col, p.part, p.gamma);
  return p;
}

}  // namespace

TEST_CASE("red faces are counted by cell kind") {
  const Pipeline thin = run(build(
      s3_2tet(), R"({"tets":[{"tri":[1,1,1,1],"quad":[0,0,0]},{"tri":[1,1,1,1],"quad":[0,0,0]}]})"));
  CHECK(thin.report.red.triangles == 8);  // every truncated face is red
  CHECK(thin.report.red.quads == 0);
  CHECK(thin.report.red.exceptional == 0);

  const Pipeline stack = run(build(single_tet(), R"({"tets":[{"tri":[9,0,0,0],"quad":[0,0,0]}]})"));
  CHECK(stack.report.red.triangles == 4);  // two dark and two light red in a family of nine

  const Pipeline tubed = run(build(
      single_tet(), R"({"tets":[{"tri":[0,0,0,0],"quad":[4,0,0]}],)"
                    R"("exceptional":{"tet":0,"kind":"tube","piece":{"quad_type":0},"position":2}})"));
  CHECK(tubed.report.red.triangles == 0);
  CHECK(tubed.report.red.quads == 4);
  CHECK(tubed.report.red.exceptional == 1);

  const Pipeline oct = run(build(
      single_tet(), R"({"tets":[{"tri":[0,0,0,0],"quad":[0,0,0]}],)"
                    R"("exceptional":{"tet":0,"kind":"octagon","type":1}})"));
  CHECK(oct.report.red.triangles == 0);
  CHECK(oct.report.red.quads == 0);
  CHECK(oct.report.red.exceptional == 1);
}

TEST_CASE("chi of face subsets") {
  const SurfaceComplex sc = build(
      s3_2tet(), R"({"tets":[{"tri":[1,1,1,1],"quad":[0,0,0]},{"tri":[1,1,1,1],"quad":[0,0,0]}]})");
  CHECK(chi_of(sc, {0}) == 1);  // one hexagon is a disk
  CHECK(chi_of(sc, {}) == 0);
  std::vector<int> all;
  for (int f = 0; f < sc.face_count(); ++f) all.push_back(f);
  CHECK(chi_of(sc, all) == sc.complex.chi());
  CHECK_THROWS_WITH_AS(static_cast<void>(chi_of(sc, {0, 0})), "bounds: duplicate face in subset",
                       InputError);
  CHECK_THROWS_WITH_AS(static_cast<void>(chi_of(sc, {999})), "bounds: face id out of range",
                       InputError);
}

TEST_CASE("chi splits additively on closed surfaces") {
  const Pipeline deep = run(build(
      s3_2tet(), R"({"tets":[{"tri":[7,7,7,7],"quad":[0,0,0]},{"tri":[7,7,7,7],"quad":[0,0,0]}]})"));
  CHECK(deep.report.chi_sigma == 56);
  CHECK(deep.report.chi_red + deep.report.chi_blue_yellow == 56);
  REQUIRE(deep.report.find("chi_additive") != nullptr);
  CHECK(deep.report.find("chi_additive")->verdict == "pass");
  REQUIRE(deep.report.find("boundary_sets_match") != nullptr);
  CHECK(deep.report.find("boundary_sets_match")->verdict == "pass");
}

TEST_CASE("thresholds instantiate at t equal one") {
  const Pipeline p = run(build(single_tet(), R"({"tets":[{"tri":[9,0,0,0],"quad":[0,0,0]}]})"));
  const BoundsReport& r = p.report;
  CHECK(r.t == 1);
  CHECK_FALSE(r.connected);
  CHECK(r.find("boundary_bound")->rhs == 58);
  CHECK(r.find("gamma_bound")->rhs == 44);
  CHECK(r.find("vertex_bound")->rhs == 176);
  CHECK(r.find("genus_gate")->rhs == 102);
  CHECK(r.find("genus_gate")->verdict == "n/a");
  CHECK(r.find("chi_bound")->rhs == -146);
  CHECK(r.find("chi_bound")->verdict == "n/a");
  CHECK(r.find("inequality_1")->verdict == "n/a");
  CHECK(r.find("boundary_sets_match")->verdict == "n/a");  // the surface has boundary
  CHECK(r.find("number_of_red")->verdict == "pass");
  CHECK(r.find("per_family_red")->verdict == "pass");
  CHECK(r.find("per_family_red")->lhs <= 4);
}

TEST_CASE("thresholds instantiate at t equal four") {
  json file = brick_ring_json(8, "vertex_disk");
  file["t"] = 4;
  const Pipeline p = run(build_from_interchange(file));
  CHECK(p.report.t == 4);
  CHECK(p.report.connected);
  CHECK(p.report.orientable);
  CHECK(p.report.genus == 1);
  CHECK(p.report.find("genus_gate")->rhs == 330);
  CHECK(p.report.find("chi_bound")->rhs == -470);
  CHECK(p.report.find("chi_bound")->verdict == "n/a");
}

TEST_CASE("red branch bookkeeping matches the disjunction") {
  CHECK(red_branches(17, 5, 1) == std::pair{false, false});
  CHECK(red_branches(16, 8, 1) == std::pair{true, false});
  CHECK(red_branches(20, 4, 1) == std::pair{false, true});
  CHECK(red_branches(4, 2, 1) == std::pair{true, true});
  CHECK(red_branches(0, 0, 1) == std::pair{true, true});
}

TEST_CASE("a flood of singleton families fails the red lemma") {
  json file = brick_ring_json(22, "truncated_triangle");
  json fams = json::array();
  for (int f = 0; f < 22; ++f) fams.push_back(json::array({f}));
  file["families"] = fams;
  const Pipeline p = run(build_from_interchange(file));
  CHECK(p.report.red.triangles == 22);
  CHECK_FALSE(p.report.red_branch_1);
  CHECK_FALSE(p.report.red_branch_2);
  CHECK(p.report.find("number_of_red")->verdict == "fail");
  CHECK_FALSE(p.report.all_passed());
}

TEST_CASE("counting lemmas hold on sampled surfaces") {
  std::vector<Pipeline> runs;
  runs.push_back(run(build(
      s3_2tet(), R"({"tets":[{"tri":[1,1,1,1],"quad":[0,0,0]},{"tri":[1,1,1,1],"quad":[0,0,0]}]})")));
  runs.push_back(run(build(
      s3_2tet(), R"({"tets":[{"tri":[7,7,7,7],"quad":[0,0,0]},{"tri":[7,7,7,7],"quad":[0,0,0]}]})")));
  runs.push_back(run(build(
      s3_2tet(), R"({"tets":[{"tri":[2,2,2,2],"quad":[1,0,0]},{"tri":[2,2,2,2],"quad":[1,0,0]}]})")));
  runs.push_back(run(build(single_tet(), R"({"tets":[{"tri":[9,0,0,0],"quad":[0,0,0]}]})")));
  runs.push_back(run(build(
      single_tet(), R"({"tets":[{"tri":[0,0,0,0],"quad":[4,0,0]}],)"
                    R"("exceptional":{"tet":0,"kind":"tube","piece":{"quad_type":0},"position":2}})")));
  runs.push_back(run(build_from_interchange(brick_ring_json(8, "vertex_disk"))));
  for (const Pipeline& p : runs) {
    CAPTURE(p.report.red.triangles);
    CHECK(p.report.all_passed());
    CHECK(p.report.find("gamma_bound")->verdict == "pass");
    CHECK(p.report.find("vertex_bound")->verdict == "pass");
    CHECK(p.report.find("boundary_bound")->verdict == "pass");
  }
}

TEST_CASE("bounds report serializes every field") {
  const Pipeline p = run(build(
      s3_2tet(), R"({"tets":[{"tri":[7,7,7,7],"quad":[0,0,0]},{"tri":[7,7,7,7],"quad":[0,0,0]}]})"));
  const json j = bounds_report_to_json(p.report);
  CHECK(j["t"] == 2);
  CHECK(j["chi_sigma"] == 56);
  CHECK(j["red_branches"].size() == 2);
  CHECK(j["checks"].is_array());
  for (const json& row : j["checks"]) {
    CHECK(row.contains("name"));
    CHECK(row.contains("lhs"));
    CHECK(row.contains("rhs"));
    const std::string v = row["verdict"];
    CHECK((v == "pass" || v == "fail" || v == "n/a"));
  }
}
