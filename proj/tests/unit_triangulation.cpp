#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "pcert/error.hpp"
#include "pcert/triangulation.hpp"

using namespace pcert;
using pcert::testing::tri_json;

namespace {

// Independent union-find over the 12t directed tet-edges, used to cross-check
// the orbit counts computed by validate_triangulation.
struct TinyUf {
  std::vector<int> p;
  explicit TinyUf(int n) : p(static_cast<std::size_t>(n)) {
    std::iota(p.begin(), p.end(), 0);
  }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

int oracle_edge_orbits(const Triangulation& tri) {
  int t = tri.t();
  TinyUf uf(12 * t);
  auto did = [](int tet, int u, int w) {
    int dir = u < w ? 0 : 1;
    return (tet * 6 + edge_index(u, w)) * 2 + dir;
  };
  for (const FaceGluing& g : tri.gluings) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        int u = kFaceVerts[static_cast<std::size_t>(g.face_a)][static_cast<std::size_t>(i)];
        int w = kFaceVerts[static_cast<std::size_t>(g.face_a)][static_cast<std::size_t>(j)];
        uf.unite(did(g.tet_a, u, w), did(g.tet_b, g.image_vertex(u), g.image_vertex(w)));
      }
    }
  }
  // Undirected orbits: pair each directed orbit with its reverse.
  std::set<std::set<int>> orbits;
  for (int k = 0; k < 12 * t; k += 2) {
    orbits.insert({uf.find(k), uf.find(k + 1)});
  }
  return static_cast<int>(orbits.size());
}

}  // namespace

TEST_SUITE("triangulation") {
  TEST_CASE("single unglued tetrahedron") {
    Triangulation tri = pcert::testing::single_tet();
    CHECK(tri.t() == 1);
    CHECK(tri.boundary_faces.size() == 4);
    CHECK(tri.edge_classes.size() == 6);
    CHECK(tri.vertex_classes.size() == 4);
    for (const EdgeClass& ec : tri.edge_classes) {
      CHECK(ec.boundary);
      CHECK(tri.edge_degree(ec.id) == 1);
    }
  }

  TEST_CASE("2-tet S3 is closed with oracle-checked orbits") {
    Triangulation tri = pcert::testing::s3_2tet();
    CHECK(tri.t() == 2);
    CHECK(tri.boundary_faces.empty());
    CHECK(static_cast<int>(tri.edge_classes.size()) == oracle_edge_orbits(tri));
    CHECK(tri.edge_classes.size() == 6);
    CHECK(tri.vertex_classes.size() == 4);
    int degree_sum = 0;
    for (const EdgeClass& ec : tri.edge_classes) {
      CHECK_FALSE(ec.boundary);
      CHECK(tri.edge_degree(ec.id) == 2);
      degree_sum += tri.edge_degree(ec.id);
      // Walk consistency: consecutive wedges share the gluing between them.
      for (std::size_t i = 0; i < ec.wedges.size(); ++i) {
        const EdgeWedge& cur = ec.wedges[i];
        const EdgeWedge& nxt = ec.wedges[(i + 1) % ec.wedges.size()];
        const FaceGluing* g = tri.gluing_at(cur.tet, cur.face_out);
        REQUIRE(g != nullptr);
        int img_u = (g->tet_a == cur.tet && g->face_a == cur.face_out) ? g->image_vertex(cur.u)
                                                                       : g->preimage_vertex(cur.u);
        CHECK(img_u == nxt.u);
      }
    }
    CHECK(degree_sum == 6 * tri.t());
  }

  TEST_CASE("partial gluing yields linear boundary edge walks") {
    Triangulation tri = pcert::testing::two_tet_one_gluing();
    CHECK(tri.boundary_faces.size() == 6);
    CHECK(tri.edge_classes.size() == 9);
    int deg_sum = 0;
    for (const EdgeClass& ec : tri.edge_classes) {
      CHECK(ec.boundary);
      deg_sum += tri.edge_degree(ec.id);
      CHECK(ec.wedges.front().face_in == -1);
      CHECK(ec.wedges.back().face_out == -1);
    }
    CHECK(deg_sum == 12);
  }

  TEST_CASE("degrees always sum to 6t") {
    for (const Triangulation& tri :
         {pcert::testing::single_tet(), pcert::testing::s3_2tet(), pcert::testing::two_tet_one_gluing()}) {
      int sum = 0;
      for (const EdgeClass& ec : tri.edge_classes) sum += static_cast<int>(ec.wedges.size());
      CHECK(sum == 6 * tri.t());
    }
  }

  TEST_CASE("round trip determinism") {
    Triangulation tri = pcert::testing::s3_2tet();
    json serialized = triangulation_to_json(tri);
    Triangulation again = validate_triangulation(serialized);
    CHECK(serialized.dump() == triangulation_to_json(again).dump());
    CHECK(tri.edge_class_of == again.edge_class_of);
    CHECK(tri.edge_dir_matches == again.edge_dir_matches);
    CHECK(tri.vertex_class_of == again.vertex_class_of);
    CHECK(tri.boundary_faces == again.boundary_faces);
  }

  TEST_CASE("rejects a doubly glued face") {
    CHECK_THROWS_WITH_AS(
        validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]},
                  {"status":["material","material","material","material"]}],
          "gluings":[{"a":[0,1],"b":[1,0],"map":[0,1,2]},
                     {"a":[0,1],"b":[1,2],"map":[0,1,2]}]})")),
        "triangulation: face doubly glued", InputError);
  }

  TEST_CASE("rejects a face glued to itself") {
    CHECK_THROWS_WITH_AS(
        validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]}],
          "gluings":[{"a":[0,1],"b":[0,1],"map":[0,1,2]}]})")),
        "triangulation: face glued to itself", InputError);
  }

  TEST_CASE("rejects a non-permutation map") {
    CHECK_THROWS_AS(validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]},
                  {"status":["material","material","material","material"]}],
          "gluings":[{"a":[0,0],"b":[1,0],"map":[0,0,2]}]})")),
                    InputError);
  }

  TEST_CASE("rejects a dangling tet id") {
    CHECK_THROWS_WITH_AS(
        validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]}],
          "gluings":[{"a":[0,0],"b":[2,0],"map":[0,1,2]}]})")),
        "triangulation: gluing references a dangling tet id", InputError);
  }

  TEST_CASE("rejects inconsistent vertex statuses in a class") {
    CHECK_THROWS_WITH_AS(
        validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]},
                  {"status":["removed","material","material","material"]}],
          "gluings":[{"a":[0,1],"b":[1,1],"map":[0,1,2]}]})")),
        "triangulation: inconsistent vertex statuses within a vertex class", InputError);
  }

  TEST_CASE("rejects an edge identified with its own reversal") {
    // Gluing face 2 to face 3 of one tet sending vertices 0,1,3 to 1,0,2
    // identifies edge (0,1) with itself reversed.
    CHECK_THROWS_WITH_AS(
        validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]}],
          "gluings":[{"a":[0,2],"b":[0,3],"map":[1,0,2]}]})")),
        "triangulation: edge identified with itself reversed", InputError);
  }

  TEST_CASE("rejects unknown fields") {
    CHECK_THROWS_AS(validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]}],
          "gluings":[], "extra":1})")),
                    InputError);
  }

  TEST_CASE("edge_degree rejects an unknown class id") {
    Triangulation tri = pcert::testing::single_tet();
    CHECK_THROWS_AS(static_cast<void>(tri.edge_degree(99)), InputError);
    CHECK_THROWS_AS(static_cast<void>(tri.edge_degree(-1)), InputError);
  }

  TEST_CASE("self gluing of one tet across distinct faces is permitted") {
    Triangulation tri = validate_triangulation(tri_json(R"({
          "tets":[{"status":["material","material","material","material"]}],
          "gluings":[{"a":[0,0],"b":[0,1],"map":[0,1,2]}]})"));
    CHECK(tri.t() == 1);
    CHECK(tri.boundary_faces.size() == 2);
    int sum = 0;
    for (const EdgeClass& ec : tri.edge_classes) sum += static_cast<int>(ec.wedges.size());
    CHECK(sum == 6);
  }
}
