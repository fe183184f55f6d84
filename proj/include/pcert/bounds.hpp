#pragma once

#include <string>
#include <vector>

#include "pcert/coloring.hpp"
#include "pcert/json_util.hpp"
#include "pcert/surface_complex.hpp"

namespace pcert {

// Red faces broken down by cell kind; the exceptional piece (octagon or tubed
// piece) is kept apart from the plain triangle/quad counts.
struct RedCounts {
  long long triangles = 0;
  long long quads = 0;
  long long exceptional = 0;
};

[[nodiscard]] RedCounts count_red(const SurfaceComplex& sc, const Coloring& col);

// Euler characteristic of the subsurface spanned by the given faces.
[[nodiscard]] long long chi_of(const SurfaceComplex& sc, const std::vector<int>& faces);

// Which halves of the red-count disjunction hold at the given size.
[[nodiscard]] std::pair<bool, bool> red_branches(long long r_t, long long r_q, long long t);

struct BoundCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  std::string verdict;  // "pass", "fail", or "n/a"
};

struct BoundsReport {
  long long t = 1;
  bool connected = false;
  bool orientable = false;
  long long genus = -1;  // genus of the whole surface; -1 when undefined
  std::vector<long long> genus_per_component;
  RedCounts red;
  bool red_branch_1 = false;
  bool red_branch_2 = false;
  long long chi_sigma = 0;
  long long chi_red = 0;
  long long chi_blue_yellow = 0;
  long long boundary_blue_yellow = 0;  // boundary circles of the blue/yellow part
  long long vertex_set = 0;            // classified vertices on red normal faces
  long long gamma_arcs = 0;
  bool gate_applies = false;       // connected, orientable, genus at least 76t+26
  long long cut_chi_sum = 0;       // summed chi of the blue/yellow part cut along the arcs
  long long cut_boundary_sum = 0;  // summed boundary circles of the cut pieces
  std::vector<BoundCheck> checks;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const BoundCheck* find(const std::string& name) const;
};

[[nodiscard]] BoundsReport check_lemmas(const SurfaceComplex& sc, const Coloring& col,
                                        const VertexPartition& part, const Gamma& gamma);

[[nodiscard]] json bounds_report_to_json(const BoundsReport& report);

}  // namespace pcert
