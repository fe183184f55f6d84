#include "pcert/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "pcert/error.hpp"
#include "pcert/normal_surface.hpp"
#include "pcert/triangulation.hpp"
#include "pcert/version.hpp"

namespace pcert {

namespace {

// Checks whose bounds lean on the normal-coordinate structure; on synthetic
// complexes a violation is reported but does not fail the run.
bool coordinate_only_check(const std::string& name) {
  static const std::set<std::string> names{"number_of_red", "boundary_bound", "vertex_bound",
                                           "gamma_bound"};
  return names.count(name) > 0;
}

}  // namespace

const char* pipeline_status_name(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::checks_passed: return "checks passed";
    case PipelineStatus::checks_failed: return "checks failed";
    case PipelineStatus::gate_not_met: return "gate not met";
    case PipelineStatus::certificate_produced: return "certificate produced";
  }
  return "unknown";
}

PipelineResult run_pipeline(SurfaceComplex sc, const PipelineOptions& opt) {
  PipelineResult out;
  out.surface = std::move(sc);

  const auto families = compute_families(out.surface);
  Coloring base = color_families(families, out.surface.face_count());
  out.coloring = choose_swap(out.surface, base);
  out.partition = classify_vertices(out.surface, out.coloring);
  out.gamma = compute_gamma(out.surface, out.coloring);

  const ColoringChecks checks =
      check_coloring_invariants(out.surface, out.coloring, out.partition, out.gamma);
  out.failures = checks.failures;
  out.warnings = checks.warnings;

  out.bounds = check_lemmas(out.surface, out.coloring, out.partition, out.gamma);
  for (const BoundCheck& check : out.bounds.checks) {
    if (check.verdict != "fail") continue;
    std::ostringstream note;
    note << "bound " << check.name << " violated: " << check.lhs
         << " against " << check.rhs;
    if (out.surface.synthetic && coordinate_only_check(check.name)) {
      out.warnings.push_back(note.str());
    } else {
      out.failures.push_back(note.str());
    }
  }

  if (!out.failures.empty()) {
    out.status = PipelineStatus::checks_failed;
    out.status_detail = out.failures.front();
    return out;
  }
  if (!opt.attempt_pants) {
    out.status = PipelineStatus::checks_passed;
    return out;
  }

  if (!out.bounds.gate_applies) {
    out.status = PipelineStatus::gate_not_met;
    if (!out.bounds.connected) {
      out.status_detail = "the surface is not connected";
    } else if (!out.bounds.orientable) {
      out.status_detail = "the surface is not orientable";
    } else {
      std::ostringstream note;
      note << "genus " << out.bounds.genus << " is below the gate "
           << 76 * out.bounds.t + 26;
      out.status_detail = note.str();
    }
    return out;
  }
  if (!out.surface.complex.boundary_circles.empty()) {
    out.status = PipelineStatus::gate_not_met;
    out.status_detail = "the surface is not closed";
    return out;
  }

  try {
    PantsCertificate cert = extract_pants_certificate(out.surface, out.coloring, out.gamma);
    std::string why;
    if (!verify_certificate(out.surface, out.coloring, cert, &why)) {
      throw InternalError("pipeline: certificate failed independent verification: " + why);
    }
    out.certificate = std::move(cert);
    out.status = PipelineStatus::certificate_produced;
  } catch (const GateNotMet& gate) {
    out.status = PipelineStatus::gate_not_met;
    out.status_detail = gate.what();
  }
  return out;
}

PipelineResult run_pipeline_coordinates(const json& tri_doc, const json& coords_doc,
                                        const PipelineOptions& opt) {
  const Triangulation tri = validate_triangulation(tri_doc);
  const NormalCoordinates coords = parse_coordinates(coords_doc);
  const ValidatedSurface surf = validate_coordinates(tri, coords);
  return run_pipeline(build_from_coordinates(tri, surf), opt);
}

PipelineResult run_pipeline_interchange(const json& doc, const PipelineOptions& opt) {
  return run_pipeline(build_from_interchange(doc), opt);
}

json pipeline_report_to_json(const PipelineResult& result, const json& inputs) {
  const Complex& cx = result.surface.complex;
  json out = json::object();
  out["version"] = kVersion;
  if (!inputs.is_null()) out["inputs"] = inputs;

  json surface = json::object();
  surface["faces"] = result.surface.face_count();
  surface["edges"] = cx.edge_count;
  surface["vertices"] = cx.vertex_count;
  surface["components"] = cx.component_count;
  surface["connected"] = cx.component_count == 1;
  surface["closed"] = cx.boundary_circles.empty();
  surface["orientable"] = result.bounds.orientable;
  surface["chi"] = cx.chi();
  surface["families"] = static_cast<long long>(result.surface.families.size());
  surface["synthetic"] = result.surface.synthetic;
  surface["t"] = result.surface.declared_t;
  out["surface"] = std::move(surface);

  out["coloring"] = coloring_to_json(result.coloring, result.gamma);
  out["bounds"] = bounds_report_to_json(result.bounds);
  out["failures"] = result.failures;
  out["warnings"] = result.warnings;
  out["status"] = pipeline_status_name(result.status);
  out["status_detail"] = result.status_detail;
  if (result.certificate) {
    out["certificate"] = pants_certificate_to_json(*result.certificate);
  }
  return out;
}

std::string pipeline_report_to_text(const json& report) {
  std::ostringstream os;
  os << "pcert " << report.at("version").get<std::string>() << "\n";
  if (report.contains("inputs")) {
    for (const auto& [role, info] : report.at("inputs").items()) {
      os << "input " << role << ": " << info.at("path").get<std::string>()
         << " (digest " << info.at("digest").get<std::string>() << ")\n";
    }
  }
  const json& surface = report.at("surface");
  os << "surface: " << surface.at("faces") << " faces, " << surface.at("edges")
     << " edges, " << surface.at("vertices") << " vertices, chi " << surface.at("chi")
     << ", t " << surface.at("t") << "\n";
  os << "surface flags: connected " << surface.at("connected") << ", closed "
     << surface.at("closed") << ", orientable " << surface.at("orientable")
     << ", synthetic " << surface.at("synthetic") << ", families "
     << surface.at("families") << "\n";

  const json& coloring = report.at("coloring");
  os << "coloring: swap_applied " << coloring.at("swap_applied") << ", gamma arcs "
     << coloring.at("gamma_arcs") << ", gamma circles " << coloring.at("gamma_circles")
     << "\n";

  const json& bounds = report.at("bounds");
  os << "bounds: genus " << bounds.at("genus") << ", chi(B u Y) "
     << bounds.at("chi_blue_yellow") << ", |del(B u Y)| "
     << bounds.at("boundary_blue_yellow") << ", |V| " << bounds.at("vertex_set")
     << ", |Gamma| " << bounds.at("gamma_arcs") << "\n";
  for (const json& check : bounds.at("checks")) {
    os << "  check " << check.at("name").get<std::string>() << ": "
       << check.at("lhs") << " vs " << check.at("rhs") << " -> "
       << check.at("verdict").get<std::string>() << "\n";
  }

  for (const json& line : report.at("failures")) {
    os << "failure: " << line.get<std::string>() << "\n";
  }
  for (const json& line : report.at("warnings")) {
    os << "warning: " << line.get<std::string>() << "\n";
  }

  os << "status: " << report.at("status").get<std::string>();
  const std::string detail = report.at("status_detail").get<std::string>();
  if (!detail.empty()) os << " (" << detail << ")";
  os << "\n";

  if (report.contains("certificate")) {
    const json& cert = report.at("certificate");
    os << "certificate: color " << cert.at("color").get<std::string>() << ", verified "
       << cert.at("verified") << ", walk lengths " << cert.at("alpha").size() << " "
       << cert.at("beta").size() << " " << cert.at("gamma").size() << "\n";
  }
  return os.str();
}

}  // namespace pcert
