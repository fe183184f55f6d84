#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pcert/coloring.hpp"
#include "pcert/error.hpp"
#include "pcert/generator.hpp"
#include "pcert/pants.hpp"
#include "pcert/surface_complex.hpp"

using namespace pcert;

namespace {

struct Colored {
  SurfaceComplex sc;
  Coloring col;
  Gamma gamma;
};

Colored color_up(json file) {
  Colored out{build_from_interchange(file), {}, {}};
  out.col = choose_swap(out.sc, color_families(compute_families(out.sc), out.sc.face_count()));
  out.gamma = compute_gamma(out.sc, out.col);
  return out;
}

Colored synthetic(int genus, const std::string& flavor, std::uint64_t seed) {
  return color_up(synthetic_interchange(genus, 1, flavor, seed));
}

}  // namespace

TEST_CASE("signed walks strip to zero-based edge ids") {
  CHECK(walk_edge_ids({1, -3, 2}) == std::vector<int>{0, 2, 1});
  CHECK(walk_edge_ids({}) == std::vector<int>{});
}

TEST_CASE("the candidate is the blue and yellow part when it is negative enough") {
  const Colored c = synthetic(2, "banded", 11);
  const CandidateResult cand = find_candidate(c.sc, c.col, c.gamma);
  CHECK(cand.chi == -2);
  CHECK(cand.boundary_circles == 2);
  CHECK(cand.chi <= -cand.boundary_circles);
  std::vector<int> by;
  for (int f = 0; f < c.sc.face_count(); ++f) {
    if (!c.col.is_red(f)) by.push_back(f);
  }
  CHECK(cand.faces == by);
}

TEST_CASE("all-red complexes are outside the gate") {
  const Colored c = color_up(brick_torus(4, 3));
  CHECK_THROWS_WITH_AS(static_cast<void>(find_candidate(c.sc, c.col, c.gamma)),
                       "pants: theorem gate not met: no blue or yellow faces", GateNotMet);
}

TEST_CASE("a flat blue and yellow annulus fails the cut inequality") {
  const Colored c = color_up(brick_torus(6, 3));
  CHECK_THROWS_WITH_AS(static_cast<void>(find_candidate(c.sc, c.col, c.gamma)),
                       "pants: theorem gate not met: no component satisfies the cut inequality",
                       GateNotMet);
}

TEST_CASE("surfaces with boundary are refused before extraction") {
  const Colored c = color_up(brick_tube(8, 3));
  CHECK_THROWS_WITH_AS(static_cast<void>(extract_pants_certificate(c.sc, c.col, c.gamma)),
                       "pants: the surface is not closed", GateNotMet);
}

TEST_CASE("reduction on a banded complex splits along the color interface") {
  const Colored c = synthetic(3, "banded", 11);
  const ReduceOutcome out = reduce_candidate(c.sc, c.col, c.gamma);
  CHECK_FALSE(out.closed_case);
  CHECK(out.complement_disks == 0);  // the red band is an annulus, not a disk
  CHECK(out.removed.empty());
  CHECK(out.essential_circles.size() == 1);
  CHECK(out.inessential_circles.empty());
  CHECK(out.separating_curve.empty());
  CHECK(out.chi == -2);
  CHECK(out.boundary_circles == 2);
  for (int f : out.faces) {
    CHECK(c.col.color[f] == out.color);
  }
}

TEST_CASE("reduction on an island complex caps the red disks and closes up") {
  const Colored c = synthetic(2, "island", 7);
  const ReduceOutcome out = reduce_candidate(c.sc, c.col, c.gamma);
  CHECK(out.closed_case);
  CHECK(out.complement_disks == 16);
  CHECK(out.essential_circles.empty());
  CHECK(out.inessential_circles.size() == 1);  // the strip rim bounds a disk
  CHECK_FALSE(out.separating_curve.empty());
  CHECK(out.removed.size() > 16);  // the islands plus the strip behind the rim
  CHECK(out.chi == -1);
  CHECK(out.boundary_circles == 1);
  for (int f : out.faces) {
    CHECK(c.col.color[f] == out.color);
  }
}

TEST_CASE("certificates come out verified on both flavors") {
  for (const auto& [genus, flavor, seed] :
       {std::tuple{2, "banded", 11ull}, {3, "banded", 12ull}, {4, "banded", 13ull},
        {5, "banded", 14ull}, {2, "island", 7ull}, {3, "island", 8ull}}) {
    CAPTURE(genus);
    CAPTURE(flavor);
    const Colored c = synthetic(genus, flavor, seed);
    const PantsCertificate cert = extract_pants_certificate(c.sc, c.col, c.gamma);
    CHECK(cert.verified);
    CHECK((cert.color == FaceColor::blue || cert.color == FaceColor::yellow));
    CHECK_FALSE(cert.alpha.empty());
    CHECK_FALSE(cert.beta.empty());
    CHECK_FALSE(cert.gamma.empty());
    CHECK_FALSE(cert.trail.descent_cuts.empty());
    CHECK(cert.trail.final_chi < 0);
    std::string why;
    CHECK(verify_certificate(c.sc, c.col, cert, &why));
    CHECK(why.empty());
  }
}

TEST_CASE("the three curves are pairwise disjoint in edges and vertices") {
  const Colored c = synthetic(3, "banded", 11);
  const PantsCertificate cert = extract_pants_certificate(c.sc, c.col, c.gamma);
  const std::vector<std::vector<int>> sets{walk_edge_ids(cert.alpha), walk_edge_ids(cert.beta),
                                           walk_edge_ids(cert.gamma)};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::set<int> ei(sets[i].begin(), sets[i].end());
      for (int e : sets[j]) {
        CHECK(ei.count(e) == 0);
      }
    }
  }
}

TEST_CASE("tampered certificates are rejected with a reason") {
  const Colored c = synthetic(2, "island", 7);
  const PantsCertificate cert = extract_pants_certificate(c.sc, c.col, c.gamma);

  PantsCertificate recolored = cert;
  recolored.color =
      cert.color == FaceColor::blue ? FaceColor::yellow : FaceColor::blue;
  std::string why;
  CHECK_FALSE(verify_certificate(c.sc, c.col, recolored, &why));
  CHECK_FALSE(why.empty());

  PantsCertificate doubled = cert;
  doubled.beta = cert.alpha;
  CHECK_FALSE(verify_certificate(c.sc, c.col, doubled, &why));
  CHECK(why == "two certificate curves share an edge");

  PantsCertificate empty = cert;
  empty.gamma.clear();
  CHECK_FALSE(verify_certificate(c.sc, c.col, empty, &why));
  CHECK(why == "a certificate curve is empty");

  PantsCertificate clipped = cert;
  clipped.alpha.pop_back();
  CHECK_FALSE(verify_certificate(c.sc, c.col, clipped, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("extraction is deterministic") {
  const Colored c = synthetic(4, "banded", 21);
  const PantsCertificate a = extract_pants_certificate(c.sc, c.col, c.gamma);
  const PantsCertificate b = extract_pants_certificate(c.sc, c.col, c.gamma);
  CHECK(pants_certificate_to_json(a).dump() == pants_certificate_to_json(b).dump());
}
