#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcert/bounds.hpp"
#include "pcert/coloring.hpp"
#include "pcert/json_util.hpp"
#include "pcert/pants.hpp"
#include "pcert/surface_complex.hpp"

namespace pcert {

enum class PipelineStatus { checks_passed, checks_failed, gate_not_met, certificate_produced };

const char* pipeline_status_name(PipelineStatus s);

struct PipelineOptions {
  // When set, a passing run inside the genus gate attempts the pants
  // extraction; otherwise the run stops after the counting checks.
  bool attempt_pants = true;
};

struct PipelineResult {
  SurfaceComplex surface;
  Coloring coloring;
  VertexPartition partition;
  Gamma gamma;
  BoundsReport bounds;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  PipelineStatus status = PipelineStatus::checks_passed;
  std::string status_detail;
  std::optional<PantsCertificate> certificate;
};

// Full analysis of a built complex: family partition, coloring with the
// vertex-count swap, interchange arcs, the counting checks, and (inside the
// genus gate) the pants extraction re-checked by the independent verifier.
// Counting checks that are theorems only for surfaces carved out of normal
// coordinates are demoted to warnings on synthetic complexes.
[[nodiscard]] PipelineResult run_pipeline(SurfaceComplex sc, const PipelineOptions& opt = {});

[[nodiscard]] PipelineResult run_pipeline_coordinates(const json& tri_doc, const json& coords_doc,
                                                      const PipelineOptions& opt = {});
[[nodiscard]] PipelineResult run_pipeline_interchange(const json& doc,
                                                      const PipelineOptions& opt = {});

// The aggregated report. `inputs` is embedded verbatim when non-null (the
// caller records file names and digests there).
[[nodiscard]] json pipeline_report_to_json(const PipelineResult& result,
                                           const json& inputs = nullptr);

// Plain-text rendering of the JSON report; both formats come from the same
// report value.
[[nodiscard]] std::string pipeline_report_to_text(const json& report);

}  // namespace pcert
