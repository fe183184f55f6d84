// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds. Each criterion carries its own wall-clock budget; going
// over budget fails the line just like a broken assertion would.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcert/bounds.hpp"
#include "pcert/coloring.hpp"
#include "pcert/complex.hpp"
#include "pcert/generator.hpp"
#include "pcert/json_util.hpp"
#include "pcert/normal_surface.hpp"
#include "pcert/oracle.hpp"
#include "pcert/pants.hpp"
#include "pcert/pipeline.hpp"
#include "pcert/rng.hpp"
#include "pcert/surface_complex.hpp"
#include "pcert/triangulation.hpp"

namespace {

using pcert::Complex;
using pcert::json;

struct Failure {
  std::string message;
};

// Always-on requirement; never compiled out.
#define REQUIRE(cond, msg)                                 \
  do {                                                     \
    if (!(cond)) {                                         \
      std::ostringstream os_;                              \
      os_ << __FILE__ << ":" << __LINE__ << "  " << msg;   \
      throw Failure{os_.str()};                            \
    }                                                      \
  } while (0)

constexpr std::uint64_t kCorpusSeed = 20250815;
constexpr int kCorpusSize = 208;

struct CorpusEntry {
  json tri;
  json coords;
  pcert::PipelineResult res;
  std::string report_bytes;  // serialized report, for the determinism rerun
};

std::vector<CorpusEntry> g_corpus;

template <typename T>
void shuffle(std::vector<T>& v, pcert::Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(i))]);
  }
}

// ---------------------------------------------------------------------------
// 1. Euler characteristic agreement across the sampled coordinate corpus.
// ---------------------------------------------------------------------------

void chi_agreement() {
  const auto samples = pcert::sample_coordinates(kCorpusSeed, kCorpusSize);
  REQUIRE(static_cast<int>(samples.size()) == kCorpusSize, "short sample run");
  pcert::PipelineOptions opt;
  opt.attempt_pants = false;
  for (const auto& s : samples) {
    pcert::PipelineResult res = pcert::run_pipeline_coordinates(s.tri, s.coords, opt);
    const long long chi = res.surface.complex.chi();
    const long long cell_count = pcert::oracle_chi(res.surface.complex);
    REQUIRE(chi == cell_count, s.triangulation << ": complex chi " << chi
                                               << " but the cell count gives " << cell_count);
    const pcert::Triangulation tri = pcert::validate_triangulation(s.tri);
    const pcert::NormalCoordinates coords = pcert::parse_coordinates(s.coords);
    const long long from_coords = pcert::euler_characteristic(tri, coords);
    REQUIRE(chi == from_coords, s.triangulation << ": complex chi " << chi
                                                << " but the coordinate formula gives "
                                                << from_coords);
    REQUIRE(res.status != pcert::PipelineStatus::checks_failed,
            s.triangulation << ": " << res.status_detail);
    CorpusEntry entry;
    entry.tri = s.tri;
    entry.coords = s.coords;
    entry.report_bytes = pcert::pipeline_report_to_json(res).dump(2);
    entry.res = std::move(res);
    g_corpus.push_back(std::move(entry));
  }
}

// ---------------------------------------------------------------------------
// 2. Family color patterns for every size from 1 to 12.
// ---------------------------------------------------------------------------

void color_patterns() {
  const char* dr = "dark_red";
  const char* lr = "light_red";
  const char* b = "blue";
  const char* y = "yellow";
  const std::vector<std::vector<const char*>> expected = {
      {dr},
      {dr, dr},
      {dr, lr, dr},
      {dr, lr, lr, dr},
      {dr, lr, b, lr, dr},
      {dr, lr, b, y, lr, dr},
      {dr, lr, b, y, b, lr, dr},
      {dr, lr, b, y, b, y, lr, dr},
      {dr, lr, b, y, b, y, b, lr, dr},
      {dr, lr, b, y, b, y, b, y, lr, dr},
      {dr, lr, b, y, b, y, b, y, b, lr, dr},
      {dr, lr, b, y, b, y, b, y, b, y, lr, dr},
  };
  for (int n = 1; n <= 12; ++n) {
    std::vector<int> family(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) family[static_cast<std::size_t>(i)] = i;
    const pcert::Coloring col = pcert::color_families({family}, n);
    for (int i = 0; i < n; ++i) {
      const std::string got = pcert::face_color_name(col.color[static_cast<std::size_t>(i)]);
      const std::string want = expected[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
      REQUIRE(got == want, "family of " << n << ", position " << (i + 1) << ": got " << got
                                        << ", expected " << want);
    }
  }
}

// ---------------------------------------------------------------------------
// 3. Red-face counts: the two-branch bound and at most four per family.
// ---------------------------------------------------------------------------

void red_counts() {
  REQUIRE(!g_corpus.empty(), "corpus unavailable (first criterion did not run)");
  for (const auto& e : g_corpus) {
    const auto* total = e.res.bounds.find("number_of_red");
    REQUIRE(total != nullptr && total->verdict == "pass",
            "number_of_red did not pass (t=" << e.res.surface.declared_t << ")");
    const auto* per_family = e.res.bounds.find("per_family_red");
    REQUIRE(per_family != nullptr && per_family->verdict == "pass" && per_family->lhs <= 4,
            "a family holds " << (per_family ? per_family->lhs : -1) << " red faces");
    // Independent recount straight from the coloring.
    const pcert::RedCounts red = pcert::count_red(e.res.surface, e.res.coloring);
    const long long t = e.res.surface.declared_t;
    const auto [first, second] = pcert::red_branches(red.triangles, red.quads, t);
    REQUIRE(first || second, "red recount " << red.triangles << " triangles, " << red.quads
                                            << " quads violates both branches at t=" << t);
  }
}

// ---------------------------------------------------------------------------
// 4. Boundary, vertex, and interface bounds across the corpus.
// ---------------------------------------------------------------------------

void counting_bounds() {
  REQUIRE(!g_corpus.empty(), "corpus unavailable (first criterion did not run)");
  for (const auto& e : g_corpus) {
    const long long t = e.res.surface.declared_t;
    const struct {
      const char* name;
      long long rhs;
    } wanted[] = {
        {"boundary_bound", 44 * t + 14},
        {"vertex_bound", 128 * t + 48},
        {"gamma_bound", 32 * t + 12},
    };
    for (const auto& w : wanted) {
      const auto* check = e.res.bounds.find(w.name);
      REQUIRE(check != nullptr, "missing check " << w.name);
      REQUIRE(check->rhs == w.rhs,
              w.name << " threshold " << check->rhs << ", expected " << w.rhs << " at t=" << t);
      REQUIRE(check->verdict == "pass",
              w.name << ": " << check->lhs << " vs " << check->rhs << " -> " << check->verdict);
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Face-level coloring invariants on every coordinate-derived instance.
// ---------------------------------------------------------------------------

void coloring_invariants() {
  REQUIRE(!g_corpus.empty(), "corpus unavailable (first criterion did not run)");
  for (const auto& e : g_corpus) {
    const pcert::ColoringChecks checks =
        pcert::check_coloring_invariants(e.res.surface, e.res.coloring, e.res.partition, e.res.gamma);
    REQUIRE(checks.failures.empty(),
            "invariant failure: " << checks.failures.front());
    REQUIRE(checks.warnings.empty(),
            "coordinate-derived instance raised a warning: " << checks.warnings.front());
    REQUIRE(e.res.failures.empty(), "pipeline failure: " << e.res.failures.front());
  }
}

// ---------------------------------------------------------------------------
// 6. Swap guarantee: interface endpoints within half the classified vertices
//    and exactly the tri-colored set of the chosen coloring.
// ---------------------------------------------------------------------------

void swap_guarantee() {
  REQUIRE(!g_corpus.empty(), "corpus unavailable (first criterion did not run)");
  for (const auto& e : g_corpus) {
    const std::size_t endpoints = e.res.gamma.endpoints.size();
    const std::size_t classified = e.res.partition.v_all.size();
    REQUIRE(endpoints <= classified / 2,
            endpoints << " arc endpoints against " << classified << " classified vertices");
    REQUIRE(e.res.gamma.endpoints == e.res.partition.v_plus,
            "arc endpoints differ from the tri-colored vertex set ("
                << endpoints << " against " << e.res.partition.v_plus.size() << ")");
  }
}

// ---------------------------------------------------------------------------
// 7. Cut arithmetic on randomized batches: arcs raise chi by one each,
//    circles leave it unchanged.
// ---------------------------------------------------------------------------

// Vertices along one boundary circle of the complex.
std::vector<int> circle_vertices(const Complex& cx, int circle) {
  std::vector<int> out;
  for (int d : cx.boundary_circles[static_cast<std::size_t>(circle)]) {
    out.push_back(cx.vertex_of_slot[static_cast<std::size_t>(pcert::dart_start_slot(d))]);
  }
  return out;
}

struct PathHit {
  std::vector<int> edges;
  std::vector<int> vertices;
};

// Shortest path from `start` to any goal vertex through interior edges whose
// intermediate vertices are interior and unused. Empty edges when none exists.
PathHit interior_path(const Complex& cx, const std::vector<std::vector<std::pair<int, int>>>& adj,
                      const std::vector<char>& used, const std::vector<char>& is_goal, int start) {
  std::vector<int> parent_edge(static_cast<std::size_t>(cx.vertex_count), -1);
  std::vector<int> parent_vertex(static_cast<std::size_t>(cx.vertex_count), -1);
  std::vector<char> seen(static_cast<std::size_t>(cx.vertex_count), 0);
  std::deque<int> queue;
  seen[static_cast<std::size_t>(start)] = 1;
  queue.push_back(start);
  int goal = -1;
  while (!queue.empty() && goal < 0) {
    const int at = queue.front();
    queue.pop_front();
    for (const auto& [edge, other] : adj[static_cast<std::size_t>(at)]) {
      if (seen[static_cast<std::size_t>(other)] || used[static_cast<std::size_t>(other)]) continue;
      if (!is_goal[static_cast<std::size_t>(other)] &&
          cx.vertex_on_boundary[static_cast<std::size_t>(other)]) {
        continue;
      }
      seen[static_cast<std::size_t>(other)] = 1;
      parent_edge[static_cast<std::size_t>(other)] = edge;
      parent_vertex[static_cast<std::size_t>(other)] = at;
      if (is_goal[static_cast<std::size_t>(other)]) {
        goal = other;
        break;
      }
      queue.push_back(other);
    }
  }
  PathHit hit;
  if (goal < 0) return hit;
  for (int v = goal; v != start; v = parent_vertex[static_cast<std::size_t>(v)]) {
    hit.edges.push_back(parent_edge[static_cast<std::size_t>(v)]);
    hit.vertices.push_back(v);
  }
  hit.vertices.push_back(start);
  return hit;
}

void cut_arithmetic() {
  int arc_batches = 0;
  int circle_batches = 0;

  // Arc batches: disjoint paths joining the two boundary circles of a tube
  // wall. Cutting along k of them must raise chi by exactly k.
  for (int batch = 0; batch < 60; ++batch) {
    pcert::Rng rng(7000 + static_cast<std::uint64_t>(batch));
    const int rows = 4 + 2 * static_cast<int>(rng.below(3));
    const int cols = 3 + static_cast<int>(rng.below(3));
    const pcert::SurfaceComplex sc = pcert::build_from_interchange(pcert::brick_tube(rows, cols));
    const Complex& cx = sc.complex;
    REQUIRE(cx.boundary_circles.size() == 2, "tube wall without two boundary circles");

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(cx.vertex_count));
    for (int e = 0; e < cx.edge_count; ++e) {
      if (cx.uses[static_cast<std::size_t>(e)].size() != 2) continue;
      const int u = cx.vertex_of_slot[static_cast<std::size_t>(2 * e)];
      const int v = cx.vertex_of_slot[static_cast<std::size_t>(2 * e + 1)];
      if (u == v) continue;
      adj[static_cast<std::size_t>(u)].push_back({e, v});
      adj[static_cast<std::size_t>(v)].push_back({e, u});
    }

    std::vector<char> used(static_cast<std::size_t>(cx.vertex_count), 0);
    std::vector<char> is_goal(static_cast<std::size_t>(cx.vertex_count), 0);
    for (int v : circle_vertices(cx, 1)) is_goal[static_cast<std::size_t>(v)] = 1;
    std::vector<int> starts = circle_vertices(cx, 0);
    shuffle(starts, rng);

    const int want = 1 + static_cast<int>(rng.below(3));
    std::vector<int> edges;
    int made = 0;
    for (int start : starts) {
      if (made == want) break;
      if (used[static_cast<std::size_t>(start)]) continue;
      const PathHit hit = interior_path(cx, adj, used, is_goal, start);
      if (hit.edges.empty()) continue;
      edges.insert(edges.end(), hit.edges.begin(), hit.edges.end());
      for (int v : hit.vertices) used[static_cast<std::size_t>(v)] = 1;
      ++made;
    }
    REQUIRE(made >= 1, "no arc found across a " << rows << "x" << cols << " tube wall");
    const Complex after = pcert::cut(cx, edges).complex;
    REQUIRE(after.chi() == cx.chi() + made,
            "cutting " << made << " arcs moved chi from " << cx.chi() << " to " << after.chi());
    ++arc_batches;
  }

  // Circle batches: disjoint embedded interior circles. Cutting must leave
  // chi unchanged.
  for (int batch = 0; batch < 60; ++batch) {
    pcert::Rng rng(8000 + static_cast<std::uint64_t>(batch));
    const int rows = 4 + 2 * static_cast<int>(rng.below(3));
    const int cols = 3 + static_cast<int>(rng.below(2));
    const pcert::SurfaceComplex sc = pcert::build_from_interchange(pcert::brick_tube(rows, cols));
    const Complex& cx = sc.complex;

    std::vector<std::vector<int>> interior;
    for (const auto& curve : pcert::exhaustive_curves(cx, 8).curves) {
      bool ok = true;
      for (int e : curve.edges) {
        if (cx.uses[static_cast<std::size_t>(e)].size() != 2 ||
            cx.vertex_on_boundary[static_cast<std::size_t>(cx.vertex_of_slot[static_cast<std::size_t>(2 * e)])] ||
            cx.vertex_on_boundary[static_cast<std::size_t>(cx.vertex_of_slot[static_cast<std::size_t>(2 * e + 1)])]) {
          ok = false;
          break;
        }
      }
      if (ok) interior.push_back(curve.edges);
    }
    REQUIRE(!interior.empty(), "no interior circle in a " << rows << "x" << cols << " tube wall");
    shuffle(interior, rng);

    const int want = 1 + static_cast<int>(rng.below(3));
    std::set<int> used_vertices;
    std::vector<int> edges;
    int made = 0;
    for (const auto& circle : interior) {
      if (made == want) break;
      std::set<int> verts;
      for (int e : circle) {
        verts.insert(cx.vertex_of_slot[static_cast<std::size_t>(2 * e)]);
        verts.insert(cx.vertex_of_slot[static_cast<std::size_t>(2 * e + 1)]);
      }
      bool clash = false;
      for (int v : verts) {
        if (used_vertices.count(v)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      used_vertices.insert(verts.begin(), verts.end());
      edges.insert(edges.end(), circle.begin(), circle.end());
      ++made;
    }
    REQUIRE(made >= 1, "no disjoint circle selection in a " << rows << "x" << cols << " tube wall");
    const Complex after = pcert::cut(cx, edges).complex;
    REQUIRE(after.chi() == cx.chi(),
            "cutting " << made << " circles moved chi from " << cx.chi() << " to " << after.chi());
    ++circle_batches;
  }

  REQUIRE(arc_batches + circle_batches >= 100,
          "only " << (arc_batches + circle_batches) << " batches ran");
}

// ---------------------------------------------------------------------------
// 8. Certificates above the genus gate on synthetic complexes.
// ---------------------------------------------------------------------------

void gate_scale_certificates() {
  struct Scale {
    int genus;
    int t;
    const char* flavor;
    std::uint64_t seed;
  };
  const Scale scales[] = {
      {102, 1, "banded", 901}, {103, 1, "banded", 902}, {104, 1, "banded", 903},
      {105, 1, "banded", 904}, {106, 1, "banded", 905}, {107, 1, "banded", 906},
      {108, 1, "banded", 907}, {109, 1, "banded", 908}, {110, 1, "banded", 909},
      {111, 1, "banded", 910}, {112, 1, "banded", 911}, {102, 1, "island", 921},
      {103, 1, "island", 922}, {178, 2, "banded", 931}, {179, 2, "banded", 932},
      {180, 2, "banded", 933}, {181, 2, "banded", 934}, {182, 2, "banded", 935},
      {183, 2, "banded", 936}, {179, 2, "island", 941},
  };
  static_assert(std::size(scales) >= 20);

  for (const Scale& s : scales) {
    const std::string label = std::string(s.flavor) + " genus " + std::to_string(s.genus) +
                              " t=" + std::to_string(s.t);
    const json doc = pcert::synthetic_interchange(s.genus, s.t, s.flavor, s.seed);
    const pcert::PipelineResult res = pcert::run_pipeline_interchange(doc);

    const Complex& cx = res.surface.complex;
    REQUIRE(res.surface.synthetic && res.surface.declared_t == s.t, label << ": wrong provenance");
    REQUIRE(cx.component_count == 1, label << ": not connected");
    REQUIRE(cx.boundary_circles.empty(), label << ": not closed");
    REQUIRE(cx.orientable(0), label << ": not orientable");
    REQUIRE(cx.genus(0) == s.genus, label << ": genus came out " << cx.genus(0));
    REQUIRE(s.genus >= 76 * s.t + 26, label << ": below the genus gate");

    REQUIRE(res.failures.empty(), label << ": " << res.failures.front());
    for (const char* name : {"genus_gate", "chi_bound", "inequality_1"}) {
      const auto* check = res.bounds.find(name);
      REQUIRE(check != nullptr && check->verdict == "pass",
              label << ": check " << name << " is "
                    << (check ? check->verdict : std::string("missing")));
    }

    REQUIRE(res.status == pcert::PipelineStatus::certificate_produced,
            label << ": status " << pcert::pipeline_status_name(res.status) << " ("
                  << res.status_detail << ")");
    REQUIRE(res.certificate.has_value() && res.certificate->verified,
            label << ": no verified certificate");

    // Re-run the verifier from scratch, then recheck the core claims with
    // the brute-force oracle: pairwise disjoint, each curve essential.
    std::string why;
    REQUIRE(pcert::verify_certificate(res.surface, res.coloring, *res.certificate, &why),
            label << ": " << why);
    const std::vector<int> a = pcert::walk_edge_ids(res.certificate->alpha);
    const std::vector<int> b = pcert::walk_edge_ids(res.certificate->beta);
    const std::vector<int> c = pcert::walk_edge_ids(res.certificate->gamma);
    REQUIRE(!a.empty() && !b.empty() && !c.empty(), label << ": empty certificate curve");
    std::set<int> seen(a.begin(), a.end());
    for (int e : b) REQUIRE(!seen.count(e), label << ": curves share edge " << e);
    seen.insert(b.begin(), b.end());
    for (int e : c) REQUIRE(!seen.count(e), label << ": curves share edge " << e);
    for (const auto& curve : {a, b, c}) {
      REQUIRE(pcert::oracle_essential(cx, curve), label << ": certificate curve bounds a disk");
    }
  }
}

// ---------------------------------------------------------------------------
// 9. Determinism: identical seeds give byte-identical reports and
//    certificates.
// ---------------------------------------------------------------------------

void determinism() {
  REQUIRE(!g_corpus.empty(), "corpus unavailable (first criterion did not run)");

  // The coordinate sampler replays exactly.
  const auto again = pcert::sample_coordinates(kCorpusSeed, kCorpusSize);
  REQUIRE(static_cast<int>(again.size()) == kCorpusSize, "short sample rerun");
  for (std::size_t i = 0; i < again.size(); ++i) {
    REQUIRE(again[i].tri.dump() == g_corpus[i].tri.dump() &&
                again[i].coords.dump() == g_corpus[i].coords.dump(),
            "sample " << i << " differs between runs");
  }

  // Coordinate reports replay byte for byte.
  for (std::size_t i = 0; i < 3 && i < g_corpus.size(); ++i) {
    pcert::PipelineOptions opt;
    opt.attempt_pants = false;
    const pcert::PipelineResult rerun =
        pcert::run_pipeline_coordinates(g_corpus[i].tri, g_corpus[i].coords, opt);
    const std::string bytes = pcert::pipeline_report_to_json(rerun).dump(2);
    REQUIRE(bytes == g_corpus[i].report_bytes, "coordinate report " << i << " differs");
  }

  // Synthetic generation, the full run, and the certificate all replay.
  const json doc1 = pcert::synthetic_interchange(102, 1, "banded", 901);
  const json doc2 = pcert::synthetic_interchange(102, 1, "banded", 901);
  REQUIRE(doc1.dump() == doc2.dump(), "synthetic generation differs between runs");
  const pcert::PipelineResult run1 = pcert::run_pipeline_interchange(doc1);
  const pcert::PipelineResult run2 = pcert::run_pipeline_interchange(doc2);
  REQUIRE(pcert::pipeline_report_to_json(run1).dump(2) == pcert::pipeline_report_to_json(run2).dump(2),
          "synthetic reports differ between runs");
  REQUIRE(run1.certificate.has_value() && run2.certificate.has_value(),
          "synthetic rerun lost its certificate");
  REQUIRE(pcert::pants_certificate_to_json(*run1.certificate).dump() ==
              pcert::pants_certificate_to_json(*run2.certificate).dump(),
          "certificates differ between runs");

  // A gate-missing run replays too.
  const pcert::PipelineResult below1 =
      pcert::run_pipeline_interchange(pcert::synthetic_interchange(30, 1, "island", 955));
  const pcert::PipelineResult below2 =
      pcert::run_pipeline_interchange(pcert::synthetic_interchange(30, 1, "island", 955));
  REQUIRE(below1.status == pcert::PipelineStatus::gate_not_met, "low-genus run reached the gate");
  REQUIRE(pcert::pipeline_report_to_json(below1).dump(2) ==
              pcert::pipeline_report_to_json(below2).dump(2),
          "gate-missing reports differ between runs");
}

// ---------------------------------------------------------------------------
// 10. Instantiated thresholds at t = 1 appear verbatim in the report.
// ---------------------------------------------------------------------------

void known_thresholds() {
  REQUIRE(!g_corpus.empty(), "corpus unavailable (first criterion did not run)");
  const CorpusEntry* pick = nullptr;
  for (const auto& e : g_corpus) {
    if (e.res.surface.declared_t == 1) {
      pick = &e;
      break;
    }
  }
  REQUIRE(pick != nullptr, "no single-tetrahedron instance in the corpus");

  const struct {
    const char* name;
    long long rhs;
  } wanted[] = {
      {"boundary_bound", 58}, {"gamma_bound", 44},  {"vertex_bound", 176},
      {"genus_gate", 102},    {"chi_bound", -146},
  };
  for (const auto& w : wanted) {
    const auto* check = pick->res.bounds.find(w.name);
    REQUIRE(check != nullptr, "missing check " << w.name);
    REQUIRE(check->rhs == w.rhs,
            w.name << " threshold " << check->rhs << ", expected " << w.rhs);
  }

  const std::string text = pcert::pipeline_report_to_text(pcert::pipeline_report_to_json(pick->res));
  for (const char* needle : {"vs 58 ->", "vs 44 ->", "vs 176 ->", "vs 102 ->", "vs -146 ->"}) {
    REQUIRE(text.find(needle) != std::string::npos,
            "report text misses threshold line \"" << needle << "\"");
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"chi agreement with the cell-count oracle on sampled coordinates", 60.0, chi_agreement},
      {"family color patterns for sizes 1 through 12", 1.0, color_patterns},
      {"red-face count bounds across the corpus", 60.0, red_counts},
      {"boundary, vertex, and interface bounds across the corpus", 60.0, counting_bounds},
      {"face-level coloring invariants across the corpus", 60.0, coloring_invariants},
      {"swap guarantee on interface endpoints", 30.0, swap_guarantee},
      {"cut arithmetic over randomized arc and circle batches", 30.0, cut_arithmetic},
      {"verified certificates above the genus gate", 300.0, gate_scale_certificates},
      {"byte-identical reruns from identical seeds", 120.0, determinism},
      {"instantiated thresholds at t=1 in the printed report", 30.0, known_thresholds},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > c.budget_seconds) {
      std::ostringstream os;
      os << "took " << elapsed << "s, budget " << c.budget_seconds << "s";
      error = os.str();
    }
    if (error.empty()) {
      std::printf("[PASS] %2zu %s (%.2fs)\n", i + 1, c.name, elapsed);
    } else {
      std::printf("[FAIL] %2zu %s (%.2fs)\n          %s\n", i + 1, c.name, elapsed, error.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }

  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria failed\n", failed, criteria.size());
  return 1;
}
