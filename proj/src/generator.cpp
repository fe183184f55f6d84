#include "pcert/generator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcert/error.hpp"
#include "pcert/normal_surface.hpp"
#include "pcert/rng.hpp"
#include "pcert/surface_complex.hpp"
#include "pcert/triangulation.hpp"

namespace pcert {

namespace {

constexpr const char* kStage = "generator";

json material_tets(int n) {
  json tets = json::array();
  for (int i = 0; i < n; ++i) {
    json t;
    t["status"] = json::array({"material", "material", "material", "material"});
    tets.push_back(t);
  }
  return tets;
}

json identity_gluing(int ta, int fa, int tb, int fb) {
  json g;
  g["a"] = json::array({ta, fa});
  g["b"] = json::array({tb, fb});
  g["map"] = json::array({0, 1, 2});
  return g;
}

// ---------------------------------------------------------------------------
// Running-bond brick walls.
//
// A wall is a grid of hexagonal bricks, `rows` high and `cols` wide, with
// every row shifted half a brick against its neighbours. Lane r is the line
// of horizontal edges below brick row r; it is divided into 2*cols segments.
// Brick (r, c) spans segments seam_x(r,c), seam_x(r,c)+1 on its bottom and
// top lanes and is closed off by the vertical seams at both ends. Every
// lattice point meets two horizontal segments and exactly one seam, so all
// interior vertices of the resulting complex are trivalent.
// ---------------------------------------------------------------------------

int fwd(int e) { return e + 1; }
int rev(int e) { return -(e + 1); }

struct Wall {
  int rows = 0;
  int cols = 0;
  bool wrap = true;  // rows wrap (torus) or not (tube with two boundaries)
  int edge_base = 0;

  [[nodiscard]] int width() const { return 2 * cols; }
  [[nodiscard]] int lane_count() const { return wrap ? rows : rows + 1; }
  [[nodiscard]] int horizontal_count() const { return lane_count() * width(); }
  [[nodiscard]] int edge_count() const { return horizontal_count() + rows * cols; }
  [[nodiscard]] int vertex_count() const { return lane_count() * width(); }

  [[nodiscard]] int h(int lane, int x) const {
    const int w = width();
    return edge_base + lane * w + ((x % w) + w) % w;
  }
  [[nodiscard]] int v(int r, int c) const {
    return edge_base + horizontal_count() + r * cols + ((c % cols) + cols) % cols;
  }
  [[nodiscard]] int seam_x(int r, int c) const { return (2 * c + (r & 1)) % width(); }
  [[nodiscard]] int top_lane(int r) const { return wrap ? (r + 1) % rows : r + 1; }

  // Boundary of brick (r, c), counterclockwise from its bottom-left corner.
  [[nodiscard]] std::vector<int> brick(int r, int c) const {
    const int x0 = seam_x(r, c);
    const int x1 = (x0 + 1) % width();
    const int rt = top_lane(r);
    return {fwd(h(r, x0)),  fwd(h(r, x1)),  fwd(v(r, (c + 1) % cols)),
            rev(h(rt, x1)), rev(h(rt, x0)), rev(v(r, c))};
  }
};

struct FacePlan {
  std::string kind;
  std::vector<std::vector<int>> cycles;  // signed 1-based edges; 1 or 2 cycles
};

// Assembles the interchange file: faces in id order, then a side labeling
// found by 2-coloring the face adjacency graph so that every interior edge
// is traversed coherently.
json emit_plan(const std::vector<FacePlan>& faces, const std::vector<std::vector<int>>& families,
               int edge_count, int vertex_count, int declared_t) {
  struct Use {
    int face;
    int dir;
  };
  std::vector<std::vector<Use>> uses(edge_count);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    for (const std::vector<int>& cyc : faces[f].cycles) {
      for (const int s : cyc) {
        const int e = (s > 0 ? s : -s) - 1;
        if (e < 0 || e >= edge_count) {
          throw InternalError("generator: face references an edge outside the wall");
        }
        uses[e].push_back({f, s > 0 ? 0 : 1});
      }
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adj(faces.size());
  for (int e = 0; e < edge_count; ++e) {
    if (uses[e].empty() || uses[e].size() > 2) {
      throw InternalError("generator: edge " + std::to_string(e) + " has " +
                          std::to_string(uses[e].size()) + " uses");
    }
    if (uses[e].size() == 2) {
      const int rel = uses[e][0].dir == uses[e][1].dir ? 1 : 0;
      adj[uses[e][0].face].push_back({uses[e][1].face, rel});
      adj[uses[e][1].face].push_back({uses[e][0].face, rel});
    }
  }
  std::vector<int> parity(faces.size(), -1);
  std::vector<int> queue;
  for (int f0 = 0; f0 < static_cast<int>(faces.size()); ++f0) {
    if (parity[f0] >= 0) continue;
    parity[f0] = 0;
    queue.assign(1, f0);
    while (!queue.empty()) {
      const int f = queue.back();
      queue.pop_back();
      for (const auto& [g, rel] : adj[f]) {
        const int want = parity[f] ^ rel;
        if (parity[g] < 0) {
          parity[g] = want;
          queue.push_back(g);
        } else if (parity[g] != want) {
          throw InternalError("generator: wall is not orientable");
        }
      }
    }
  }

  json out;
  out["faces"] = json::array();
  for (const FacePlan& fp : faces) {
    json fj;
    fj["kind"] = fp.kind;
    if (fp.cycles.size() == 1) {
      fj["boundary"] = fp.cycles[0];
    } else {
      json cycles = json::array();
      for (const std::vector<int>& cyc : fp.cycles) cycles.push_back(cyc);
      fj["boundary"] = cycles;
    }
    out["faces"].push_back(std::move(fj));
  }
  out["edges"] = edge_count;
  out["vertices"] = vertex_count;
  out["families"] = families;
  json sides;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    sides["f" + std::to_string(f)] =
        parity[f] == 0 ? json::array({1, 2}) : json::array({2, 1});
  }
  out["sides"] = std::move(sides);
  out["t"] = declared_t;
  return out;
}

// A handle: two removed bricks replaced by one annulus face whose cycles
// copy the removed boundaries verbatim. No edge or vertex changes hands, so
// valence stays three everywhere and the Euler characteristic drops by two.
struct Annulus {
  const Wall* wall_a;
  int ra, ca;
  const Wall* wall_b;
  int rb, cb;
};

// What occupies one family slot: a surviving brick or a handle annulus.
struct Slot {
  bool is_annulus = false;
  const Wall* wall = nullptr;
  int r = 0, c = 0;  // brick
  int annulus = -1;
};

class FaceBuilder {
 public:
  int add_brick(const Wall& w, int r, int c) {
    faces_.push_back({"truncated_triangle", {w.brick(r, c)}});
    return static_cast<int>(faces_.size()) - 1;
  }
  int add_annulus(const Annulus& a) {
    faces_.push_back(
        {"tubed_piece", {a.wall_a->brick(a.ra, a.ca), a.wall_b->brick(a.rb, a.cb)}});
    return static_cast<int>(faces_.size()) - 1;
  }
  int add_slot(const Slot& s, const std::vector<Annulus>& anns) {
    return s.is_annulus ? add_annulus(anns[s.annulus]) : add_brick(*s.wall, s.r, s.c);
  }
  [[nodiscard]] const std::vector<FacePlan>& faces() const { return faces_; }

 private:
  std::vector<FacePlan> faces_;
};

// Interleaves blue and yellow slots so the family alternates blue, yellow,
// blue, ... through its interior positions.
std::vector<Slot> interleave(const std::vector<Slot>& blues, const std::vector<Slot>& yellows) {
  if (blues.size() != yellows.size() && blues.size() != yellows.size() + 1) {
    throw InternalError("generator: family interior is not color-balanced");
  }
  std::vector<Slot> out;
  out.reserve(blues.size() + yellows.size());
  for (std::size_t i = 0; i < blues.size(); ++i) {
    out.push_back(blues[i]);
    if (i < yellows.size()) out.push_back(yellows[i]);
  }
  return out;
}

// Hole bookkeeping: first hole of a handle carries the annulus (>= 0), the
// second hole is skipped (-1).
using HoleMap = std::map<std::pair<int, int>, int>;

void add_handle(std::vector<Annulus>& anns, HoleMap& holes, const Wall& w, int ra, int ca, int rb,
                int cb) {
  const int id = static_cast<int>(anns.size());
  anns.push_back({&w, ra, ca, &w, rb, cb});
  if (!holes.emplace(std::make_pair(ra, ca), id).second ||
      !holes.emplace(std::make_pair(rb, cb), -1).second) {
    throw InternalError("generator: two handles claim the same brick");
  }
}

// ---------------------------------------------------------------------------
// "banded" flavor: red rows top and bottom (one wrapping band), a blue block
// and a yellow block filling the interior, and the handles split between the
// two blocks. The blue/yellow interface is a single essential circle. Every
// handle gets its own eight-row band, rows +1 and +5 of the band holding the
// two holes, so full fiber circles survive between and around any pair of
// holes; that is what lets a later cut isolate one hole at a time.
// ---------------------------------------------------------------------------
json banded_interchange(int genus, int declared_t, Rng& rng) {
  const int total = genus - 1;  // handles
  const int cols = 4;
  const int hb_total = total / 2;
  const int hy_total = total - hb_total;
  const int block = 8 * std::max(hy_total, 1) + 2 + 2 * static_cast<int>(rng.below(2));
  const int rows = 2 * block + 4;
  const int blue0 = 2;
  const int yellow0 = 2 + block;

  Wall wall{rows, cols, true, 0};
  std::vector<Annulus> anns;
  HoleMap holes;
  for (int j = 0; j < hb_total; ++j) {
    const int ra = blue0 + 8 * j + 1;
    add_handle(anns, holes, wall, ra, j % cols, ra + 4, j % cols);
  }
  for (int j = 0; j < hy_total; ++j) {
    const int ra = yellow0 + 8 * j + 1;
    add_handle(anns, holes, wall, ra, j % cols, ra + 4, j % cols);
  }

  auto block_slots = [&](int c, int first) {
    std::vector<Slot> out;
    for (int r = first; r < first + block; ++r) {
      const auto it = holes.find({r, c});
      if (it == holes.end()) {
        out.push_back({false, &wall, r, c, -1});
      } else if (it->second >= 0) {
        out.push_back({true, &wall, r, c, it->second});
      }
    }
    return out;
  };

  FaceBuilder fb;
  std::vector<std::vector<int>> families;
  for (int c = 0; c < cols; ++c) {
    std::vector<int> fam;
    fam.push_back(fb.add_brick(wall, 0, c));
    fam.push_back(fb.add_brick(wall, 1, c));
    for (const Slot& s : interleave(block_slots(c, blue0), block_slots(c, yellow0))) {
      fam.push_back(fb.add_slot(s, anns));
    }
    fam.push_back(fb.add_brick(wall, rows - 2, c));
    fam.push_back(fb.add_brick(wall, rows - 1, c));
    families.push_back(std::move(fam));
  }
  return emit_plan(fb.faces(), families, wall.edge_count(), wall.vertex_count(), declared_t);
}

// ---------------------------------------------------------------------------
// "island" flavor: a main wall that stays entirely blue and carries most of
// the handles, plus a pocket wall holding every red face (isolated disk
// islands) and one big yellow disk, joined to the main wall by a single neck
// annulus. Cutting along either neck circle separates the removable disks
// from a negative blue piece, which is what the closed reduction needs.
// ---------------------------------------------------------------------------
json island_interchange(int genus, int declared_t, Rng& rng) {
  const int extra = genus - 2;  // handles on the main wall, besides the neck
  const int mcols = 4;
  const int pcols = 4;
  const int red_count = 16;  // four families, four red faces each
  const int mrows = 8 + 8 * extra + 2 * static_cast<int>(rng.below(2));

  Wall main_wall{mrows, mcols, true, 0};
  // Pocket sizing: interior faces split near-evenly between blue and yellow,
  // and the yellow ones must fit as one contiguous strip inside the pocket.
  int prows = 0, yellow_total = 0, strip_rows = 0, odd = 0;
  for (int try_rows = 24;; try_rows += 2) {
    if (try_rows > 1 << 20) throw InternalError("generator: pocket sizing diverged");
    const int total_faces = mrows * mcols + try_rows * pcols - (genus - 1);
    const int interior = total_faces - red_count;
    odd = interior & 1;
    yellow_total = (interior - odd) / 2;
    strip_rows = (yellow_total + pcols - 2) / (pcols - 1);
    if (20 + strip_rows + 2 <= try_rows) {
      prows = try_rows;
      break;
    }
  }
  Wall pocket{prows, pcols, true, 3 * mrows * mcols};

  std::vector<Annulus> anns;
  HoleMap main_holes, pocket_holes;
  // Neck: one annulus joining the two walls.
  anns.push_back({&main_wall, 2, 0, &pocket, 2, 0});
  main_holes[{2, 0}] = 0;
  pocket_holes[{2, 0}] = -1;
  for (int j = 0; j < extra; ++j) {
    const int ra = 6 + 8 * j + 1;
    add_handle(anns, main_holes, main_wall, ra, j % mcols, ra + 4, j % mcols);
  }

  // Pocket contents: red islands in rows 4..18, yellow strip from row 20.
  std::vector<std::pair<int, int>> reds;
  for (int r = 4; r <= 18 && static_cast<int>(reds.size()) < red_count; r += 2) {
    reds.push_back({r, 0});
    if (static_cast<int>(reds.size()) < red_count) reds.push_back({r, 2});
  }
  std::vector<std::pair<int, int>> strip;
  for (int i = 0; i < yellow_total; ++i) {
    strip.push_back({20 + i / (pcols - 1), i % (pcols - 1)});
  }
  std::map<std::pair<int, int>, char> pocket_role;  // 'r'ed, 'y'ellow
  for (const auto& rc : reds) pocket_role[rc] = 'r';
  for (const auto& rc : strip) pocket_role[rc] = 'y';

  std::vector<Slot> blues, yellows;
  for (int r = 0; r < mrows; ++r) {
    for (int c = 0; c < mcols; ++c) {
      const auto it = main_holes.find({r, c});
      if (it == main_holes.end()) {
        blues.push_back({false, &main_wall, r, c, -1});
      } else if (it->second >= 0) {
        blues.push_back({true, &main_wall, r, c, it->second});
      }
    }
  }
  for (int r = 0; r < prows; ++r) {
    for (int c = 0; c < pcols; ++c) {
      if (pocket_holes.count({r, c}) != 0) continue;
      const auto role = pocket_role.find({r, c});
      if (role == pocket_role.end()) {
        blues.push_back({false, &pocket, r, c, -1});
      } else if (role->second == 'y') {
        yellows.push_back({false, &pocket, r, c, -1});
      }
    }
  }
  if (static_cast<int>(yellows.size()) != yellow_total ||
      static_cast<int>(blues.size()) != yellow_total + odd) {
    throw InternalError("generator: pocket bookkeeping is off");
  }

  const int fam_count = 4;
  FaceBuilder fb;
  std::vector<std::vector<int>> families;
  std::size_t bi = 0, yi = 0;
  for (int f = 0; f < fam_count; ++f) {
    const int yc = yellow_total / fam_count + (f < yellow_total % fam_count ? 1 : 0);
    const int bc = yc + (f == 0 ? odd : 0);
    std::vector<Slot> fam_blue(blues.begin() + bi, blues.begin() + bi + bc);
    std::vector<Slot> fam_yellow(yellows.begin() + yi, yellows.begin() + yi + yc);
    bi += bc;
    yi += yc;
    std::vector<int> fam;
    fam.push_back(fb.add_brick(pocket, reds[4 * f].first, reds[4 * f].second));
    fam.push_back(fb.add_brick(pocket, reds[4 * f + 1].first, reds[4 * f + 1].second));
    for (const Slot& s : interleave(fam_blue, fam_yellow)) fam.push_back(fb.add_slot(s, anns));
    fam.push_back(fb.add_brick(pocket, reds[4 * f + 2].first, reds[4 * f + 2].second));
    fam.push_back(fb.add_brick(pocket, reds[4 * f + 3].first, reds[4 * f + 3].second));
    families.push_back(std::move(fam));
  }
  if (bi != blues.size() || yi != yellows.size()) {
    throw InternalError("generator: family assignment left faces behind");
  }
  return emit_plan(fb.faces(), families, main_wall.edge_count() + pocket.edge_count(),
                   main_wall.vertex_count() + pocket.vertex_count(), declared_t);
}

}  // namespace

std::vector<std::string> bundled_triangulation_names() {
  return {"single_tet", "s3_two_tet", "pair_one_face", "chain_three", "ring_four"};
}

json bundled_triangulation(const std::string& name) {
  json out;
  out["gluings"] = json::array();
  if (name == "single_tet") {
    out["tets"] = material_tets(1);
  } else if (name == "s3_two_tet") {
    out["tets"] = material_tets(2);
    for (int f = 0; f < 4; ++f) out["gluings"].push_back(identity_gluing(0, f, 1, f));
  } else if (name == "pair_one_face") {
    out["tets"] = material_tets(2);
    out["gluings"].push_back(identity_gluing(0, 0, 1, 0));
  } else if (name == "chain_three") {
    out["tets"] = material_tets(3);
    out["gluings"].push_back(identity_gluing(0, 0, 1, 0));
    out["gluings"].push_back(identity_gluing(1, 1, 2, 1));
  } else if (name == "ring_four") {
    out["tets"] = material_tets(4);
    out["gluings"].push_back(identity_gluing(0, 0, 1, 0));
    out["gluings"].push_back(identity_gluing(1, 1, 2, 1));
    out["gluings"].push_back(identity_gluing(2, 2, 3, 2));
    out["gluings"].push_back(identity_gluing(3, 3, 0, 3));
  } else {
    throw InputError(kStage, "unknown bundled triangulation '" + name + "'");
  }
  return out;
}

std::vector<CoordinateSample> sample_coordinates(std::uint64_t seed, int count) {
  if (count < 0) throw InputError(kStage, "sample count must be nonnegative");
  std::vector<CoordinateSample> out;
  Rng rng(seed);
  const std::vector<std::string> names = bundled_triangulation_names();
  std::vector<json> tris;
  std::vector<Triangulation> validated;
  for (const std::string& n : names) {
    tris.push_back(bundled_triangulation(n));
    validated.push_back(validate_triangulation(tris.back()));
  }
  for (int i = 0; i < count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      const std::size_t pick = rng.below(names.size());
      const int tet_count = static_cast<int>(validated[pick].tets.size());
      std::array<long long, 4> tri_counts{};
      for (long long& t : tri_counts) t = rng.range(0, 3);
      std::array<long long, 3> quad_counts{};
      quad_counts[rng.below(3)] = rng.range(0, 2);
      if (tri_counts[0] + tri_counts[1] + tri_counts[2] + tri_counts[3] +
              quad_counts[0] + quad_counts[1] + quad_counts[2] ==
          0) {
        tri_counts[rng.below(4)] = 1;
      }
      json coords;
      coords["tets"] = json::array();
      for (int t = 0; t < tet_count; ++t) {
        json tc;
        tc["tri"] = tri_counts;
        tc["quad"] = quad_counts;
        coords["tets"].push_back(tc);
      }
      // The single tetrahedron has no matching constraints, so it can carry
      // an exceptional piece.
      if (names[pick] == "single_tet" && rng.chance(1, 2)) {
        json exc;
        exc["tet"] = 0;
        if (rng.chance(1, 2)) {
          exc["kind"] = "octagon";
          exc["type"] = rng.range(1, 3);
        } else {
          exc["kind"] = "tube";
          json piece;
          long long stack = 0;
          if (rng.chance(1, 2)) {
            const int v = static_cast<int>(rng.below(4));
            piece["tri_vertex"] = v;
            stack = tri_counts[v];
          } else {
            const int q = static_cast<int>(rng.below(3));
            piece["quad_type"] = q;
            stack = quad_counts[q];
          }
          if (stack == 0) continue;  // no parallel stack to tube into
          exc["piece"] = piece;
          exc["position"] = rng.range(0, stack - 1);
        }
        coords["exceptional"] = exc;
      }
      try {
        const NormalCoordinates nc = parse_coordinates(coords);
        (void)validate_coordinates(validated[pick], nc);
      } catch (const InputError&) {
        continue;
      }
      out.push_back({names[pick], tris[pick], coords});
      placed = true;
    }
    if (!placed) throw InternalError("generator: coordinate sampling failed to converge");
  }
  return out;
}

json brick_torus(int rows, int cols) {
  if (rows < 4 || rows % 2 != 0) throw InputError(kStage, "torus rows must be even and at least 4");
  if (cols < 3) throw InputError(kStage, "torus cols must be at least 3");
  Wall wall{rows, cols, true, 0};
  FaceBuilder fb;
  std::vector<std::vector<int>> families;
  for (int c = 0; c < cols; ++c) {
    std::vector<int> fam;
    for (int r = 0; r < rows; ++r) fam.push_back(fb.add_brick(wall, r, c));
    families.push_back(std::move(fam));
  }
  return emit_plan(fb.faces(), families, wall.edge_count(), wall.vertex_count(), 1);
}

json brick_tube(int rows, int cols) {
  if (rows < 2) throw InputError(kStage, "tube rows must be at least 2");
  if (cols < 3) throw InputError(kStage, "tube cols must be at least 3");
  Wall wall{rows, cols, false, 0};
  FaceBuilder fb;
  std::vector<std::vector<int>> families;
  for (int c = 0; c < cols; ++c) {
    std::vector<int> fam;
    for (int r = 0; r < rows; ++r) fam.push_back(fb.add_brick(wall, r, c));
    families.push_back(std::move(fam));
  }
  return emit_plan(fb.faces(), families, wall.edge_count(), wall.vertex_count(), 1);
}

json synthetic_interchange(int genus, int t, const std::string& flavor, std::uint64_t seed) {
  if (genus < 2) throw InputError(kStage, "synthetic genus must be at least 2");
  if (t < 1) throw InputError(kStage, "t must be at least 1");
  Rng rng(seed);
  json out;
  if (flavor == "banded") {
    out = banded_interchange(genus, t, rng);
  } else if (flavor == "island") {
    out = island_interchange(genus, t, rng);
  } else {
    throw InputError(kStage, "unknown synthetic flavor '" + flavor + "'");
  }
  // The construction is re-imported through the same validator as user input
  // and its topology re-checked before the file is handed out.
  const SurfaceComplex sc = build_from_interchange(out);
  if (sc.complex.component_count != 1) {
    throw InternalError("generator: synthetic complex is not connected");
  }
  if (!sc.complex.boundary_circles.empty()) {
    throw InternalError("generator: synthetic complex is not closed");
  }
  if (!sc.complex.orientable(0)) {
    throw InternalError("generator: synthetic complex is not orientable");
  }
  if (sc.complex.genus(0) != genus) {
    throw InternalError("generator: synthetic complex has genus " +
                        std::to_string(sc.complex.genus(0)) + ", expected " +
                        std::to_string(genus));
  }
  return out;
}

}  // namespace pcert
