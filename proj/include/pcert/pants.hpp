#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pcert/coloring.hpp"
#include "pcert/json_util.hpp"
#include "pcert/surface_complex.hpp"

namespace pcert {

// The extraction only succeeds on surfaces inside the certified regime; when
// the entry conditions fail this is reported as a gate condition, distinct
// from bad input (InputError) and from broken invariants (InternalError).
class GateNotMet : public std::runtime_error {
 public:
  explicit GateNotMet(const std::string& message) : std::runtime_error("pants: " + message) {}
};

// Closed curves on the surface are walks in the 1-skeleton, serialized as
// signed 1-based edge ids: +k is edge k-1 run tail to head, -k the reverse.
using SignedWalk = std::vector<int>;
[[nodiscard]] std::vector<int> walk_edge_ids(const SignedWalk& walk);

// The blue/yellow part cut along the interchange arcs, restricted to the
// first component (by face id) whose Euler characteristic is at most minus
// its number of boundary circles (and negative). Throws GateNotMet when no
// component qualifies.
struct CandidateResult {
  int component = -1;  // id within the cut blue/yellow part
  long long chi = 0;
  int boundary_circles = 0;
  std::vector<int> faces;  // face ids in the full surface, ascending
};
CandidateResult find_candidate(const SurfaceComplex& sc, const Coloring& col, const Gamma& gamma);

// Caps the candidate's boundary with the disk components of its complement,
// splits along the essential interchange circles, discards the inessential
// ones into removable disks, and (when the result is closed) finds a
// separating curve with the removable disks on one side. The outcome is the
// monochromatic piece the pants are extracted from.
struct ReduceOutcome {
  FaceColor color = FaceColor::blue;
  long long chi = 0;        // of the final piece
  int boundary_circles = 0;  // of the final piece
  bool closed_case = false;
  std::vector<int> faces;    // surface face ids of the final piece, ascending
  std::vector<int> removed;  // surface face ids of the removable disks
  std::vector<SignedWalk> essential_circles;
  std::vector<SignedWalk> inessential_circles;
  SignedWalk separating_curve;  // closed case only
  int complement_disks = 0;
};
ReduceOutcome reduce_candidate(const SurfaceComplex& sc, const Coloring& col, const Gamma& gamma);

struct PantsTrail {
  long long candidate_chi = 0;
  int candidate_boundary = 0;
  int candidate_faces = 0;
  std::vector<SignedWalk> essential_circles;
  std::vector<SignedWalk> inessential_circles;
  int complement_disks = 0;
  int removed_disks = 0;
  long long reduced_chi = 0;
  int reduced_boundary = 0;
  bool closed_case = false;
  SignedWalk separating_curve;
  long long final_chi = 0;
  std::vector<SignedWalk> descent_cuts;
};

// Three disjoint curves, each essential in the surface, that cobound a
// monochromatic pair of pants: a genus-zero component with Euler
// characteristic -1 and one boundary circle along each curve.
struct PantsCertificate {
  FaceColor color = FaceColor::blue;
  SignedWalk alpha;
  SignedWalk beta;
  SignedWalk gamma;
  PantsTrail trail;
  bool verified = false;
};

// Runs the full extraction and verifies the result before returning it.
// Throws GateNotMet outside the certified regime and InternalError when the
// certified structure fails to materialize.
PantsCertificate extract_pants_certificate(const SurfaceComplex& sc, const Coloring& col,
                                           const Gamma& gamma);

// Independent check of a certificate against the surface and coloring. Only
// the cut primitive is shared with the extraction.
bool verify_certificate(const SurfaceComplex& sc, const Coloring& col,
                        const PantsCertificate& cert, std::string* why = nullptr);

json pants_certificate_to_json(const PantsCertificate& cert);

}  // namespace pcert
