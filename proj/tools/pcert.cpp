#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "pcert/error.hpp"
#include "pcert/generator.hpp"
#include "pcert/json_util.hpp"
#include "pcert/pipeline.hpp"
#include "pcert/version.hpp"

namespace {

using pcert::json;

constexpr int kExitOk = 0;
constexpr int kExitChecks = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct LoadedFile {
  std::string path;
  std::string bytes;
  json doc;
};

LoadedFile load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pcert::InputError("cli", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedFile out{path, buf.str(), nullptr};
  out.doc = pcert::parse_json_text(out.bytes, "cli");
  return out;
}

json file_stamp(const LoadedFile& f) {
  json out = json::object();
  out["path"] = f.path;
  out["digest"] = pcert::fnv1a_hex(f.bytes);
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw pcert::InputError("cli", "cannot write '" + out_path + "'");
  out << text;
}

// Terminal styling for the text format; controlled by PANTS_CERT_COLOR
// (never|auto) and only active on a terminal.
bool use_color() {
  const char* env = std::getenv("PANTS_CERT_COLOR");
  if (env != nullptr && std::string(env) == "never") return false;
  return isatty(fileno(stdout)) != 0;
}

std::string stylize(std::string text) {
  if (!use_color()) return text;
  const auto paint = [&text](const std::string& word, const char* code) {
    std::size_t at = 0;
    const std::string painted = std::string("\033[") + code + "m" + word + "\033[0m";
    while ((at = text.find(word, at)) != std::string::npos) {
      text.replace(at, word.size(), painted);
      at += painted.size();
    }
  };
  paint("-> pass", "32");
  paint("-> fail", "31");
  paint("status: certificate produced", "32");
  paint("status: checks passed", "32");
  paint("status: checks failed", "31");
  paint("status: gate not met", "33");
  return text;
}

struct TaskResult {
  json report;
  int exit_code = kExitOk;
};

int status_exit(pcert::PipelineStatus status) {
  switch (status) {
    case pcert::PipelineStatus::checks_passed:
    case pcert::PipelineStatus::certificate_produced:
      return kExitOk;
    case pcert::PipelineStatus::checks_failed:
    case pcert::PipelineStatus::gate_not_met:
      return kExitChecks;
  }
  return kExitInternal;
}

struct AnalysisConfig {
  std::string tri_path;
  std::vector<std::string> coords_paths;
  std::vector<std::string> interchange_paths;
  std::string format = "json";
  std::string out_path;
  bool verbose = false;
  bool attempt_pants = false;
};

TaskResult run_coordinate_task(const LoadedFile& tri, const LoadedFile& coords,
                               const AnalysisConfig& cfg) {
  json inputs = json::object();
  inputs["tri"] = file_stamp(tri);
  inputs["coords"] = file_stamp(coords);
  const pcert::PipelineResult result =
      pcert::run_pipeline_coordinates(tri.doc, coords.doc, {cfg.attempt_pants});
  return {pcert::pipeline_report_to_json(result, inputs), status_exit(result.status)};
}

TaskResult run_interchange_task(const LoadedFile& file, const AnalysisConfig& cfg) {
  json inputs = json::object();
  inputs["interchange"] = file_stamp(file);
  const pcert::PipelineResult result =
      pcert::run_pipeline_interchange(file.doc, {cfg.attempt_pants});
  return {pcert::pipeline_report_to_json(result, inputs), status_exit(result.status)};
}

int run_analysis(const AnalysisConfig& cfg) {
  const bool coordinate_mode = !cfg.tri_path.empty() || !cfg.coords_paths.empty();
  const bool interchange_mode = !cfg.interchange_paths.empty();
  if (coordinate_mode == interchange_mode) {
    throw pcert::InputError("cli", "give either --tri with --coords, or --interchange");
  }
  if (coordinate_mode && (cfg.tri_path.empty() || cfg.coords_paths.empty())) {
    throw pcert::InputError("cli", "coordinate input needs both --tri and --coords");
  }

  // Every file is read up front so malformed input fails before any analysis;
  // the per-file work then runs concurrently.
  std::vector<std::future<TaskResult>> tasks;
  if (coordinate_mode) {
    const LoadedFile tri = load_file(cfg.tri_path);
    for (const std::string& path : cfg.coords_paths) {
      if (cfg.verbose) std::cerr << "pcert: queuing " << path << "\n";
      LoadedFile coords = load_file(path);
      tasks.push_back(std::async(std::launch::async,
                                 [tri, coords = std::move(coords), &cfg]() {
                                   return run_coordinate_task(tri, coords, cfg);
                                 }));
    }
  } else {
    for (const std::string& path : cfg.interchange_paths) {
      if (cfg.verbose) std::cerr << "pcert: queuing " << path << "\n";
      LoadedFile file = load_file(path);
      tasks.push_back(std::async(std::launch::async, [file = std::move(file), &cfg]() {
        return run_interchange_task(file, cfg);
      }));
    }
  }

  std::vector<TaskResult> results;
  results.reserve(tasks.size());
  for (auto& task : tasks) results.push_back(task.get());

  int exit_code = kExitOk;
  for (const TaskResult& r : results) exit_code = std::max(exit_code, r.exit_code);

  std::string rendered;
  if (cfg.format == "json") {
    if (results.size() == 1) {
      rendered = results[0].report.dump(2) + "\n";
    } else {
      json all = json::array();
      for (TaskResult& r : results) all.push_back(std::move(r.report));
      rendered = all.dump(2) + "\n";
    }
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i > 0) os << "\n";
      os << pcert::pipeline_report_to_text(results[i].report);
    }
    rendered = cfg.out_path.empty() ? stylize(os.str()) : os.str();
  }
  write_output(rendered, cfg.out_path);
  if (cfg.verbose) std::cerr << "pcert: " << results.size() << " report(s) done\n";
  return exit_code;
}

struct GenConfig {
  std::uint64_t seed = 0;
  std::string out_path;
  std::string flavor = "banded";
  long long t = 1;
  long long genus = 0;      // single synthetic complex when set
  long long max_genus = 0;  // synthetic corpus when set
  long long samples = 0;    // coordinate corpus when set
  std::string triangulation;
  std::vector<long long> tri_counts;
  std::vector<long long> quad_counts;
  bool verbose = false;
};

void write_named(const json& doc, const std::string& path, json& manifest) {
  const std::string text = doc.dump(2) + "\n";
  write_output(text, path);
  if (!path.empty()) {
    json entry = json::object();
    entry["path"] = path;
    entry["digest"] = pcert::fnv1a_hex(text);
    manifest.push_back(std::move(entry));
  }
}

int run_gen(const GenConfig& cfg) {
  json manifest = json::array();
  const bool coordinate_request = !cfg.tri_counts.empty() || !cfg.quad_counts.empty();

  if (!cfg.triangulation.empty() && !coordinate_request) {
    write_named(pcert::bundled_triangulation(cfg.triangulation), cfg.out_path, manifest);
  } else if (coordinate_request) {
    if (cfg.triangulation.empty()) {
      throw pcert::InputError("cli", "--tri-counts needs --triangulation");
    }
    if (cfg.tri_counts.size() != 4 || cfg.quad_counts.size() != 3) {
      throw pcert::InputError("cli", "--tri-counts takes 4 values and --quad-counts takes 3");
    }
    const json tri_doc = pcert::bundled_triangulation(cfg.triangulation);
    const pcert::Triangulation tri = pcert::validate_triangulation(tri_doc);
    json coords = json::object();
    coords["tets"] = json::array();
    for (std::size_t i = 0; i < tri.tets.size(); ++i) {
      json tc = json::object();
      tc["tri"] = cfg.tri_counts;
      tc["quad"] = cfg.quad_counts;
      coords["tets"].push_back(std::move(tc));
    }
    // Reject inadmissible requests (for example several quad types in one
    // tetrahedron) through the same validator the check command uses.
    (void)pcert::validate_coordinates(tri, pcert::parse_coordinates(coords));
    write_named(coords, cfg.out_path, manifest);
  } else if (cfg.genus > 0) {
    const json file = pcert::synthetic_interchange(static_cast<int>(cfg.genus),
                                                   static_cast<int>(cfg.t), cfg.flavor, cfg.seed);
    write_named(file, cfg.out_path, manifest);
  } else if (cfg.max_genus > 0 || cfg.samples > 0) {
    if (cfg.out_path.empty()) {
      throw pcert::InputError("cli", "corpus generation needs -o as a file prefix");
    }
    for (long long g = 2; g <= cfg.max_genus; ++g) {
      const json file = pcert::synthetic_interchange(static_cast<int>(g),
                                                     static_cast<int>(cfg.t), cfg.flavor,
                                                     cfg.seed + static_cast<std::uint64_t>(g));
      write_named(file, cfg.out_path + "interchange_g" + std::to_string(g) + ".json", manifest);
    }
    const auto samples =
        pcert::sample_coordinates(cfg.seed, static_cast<int>(cfg.samples));
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const std::string base = cfg.out_path + "sample" + std::to_string(i);
      write_named(samples[i].tri, base + "_tri.json", manifest);
      write_named(samples[i].coords, base + "_coords.json", manifest);
    }
    std::cout << manifest.dump(2) << "\n";
  } else {
    throw pcert::InputError(
        "cli", "gen needs one of --genus, --max-genus/--samples, or --triangulation");
  }
  if (cfg.verbose) std::cerr << "pcert: generation done\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surface-complex checker: coloring, counting checks, and pants certificates"};
  app.set_version_flag("--version", std::string("pcert ") + pcert::kVersion);
  app.require_subcommand(1);

  AnalysisConfig analysis;
  GenConfig gen;

  const auto add_analysis = [&app, &analysis](const std::string& name, const std::string& help,
                                              bool attempt_pants) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--tri", analysis.tri_path, "triangulation file");
    cmd->add_option("--coords", analysis.coords_paths, "normal coordinate files");
    cmd->add_option("--interchange", analysis.interchange_paths, "interchange complex files");
    cmd->add_option("--format", analysis.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("-o,--output", analysis.out_path, "output file (default stdout)");
    cmd->add_flag("--verbose", analysis.verbose, "progress notes on stderr");
    cmd->callback([&analysis, attempt_pants]() { analysis.attempt_pants = attempt_pants; });
    return cmd;
  };

  add_analysis("check", "validate inputs and run the structural checks", false);
  add_analysis("color", "compute the family coloring and its invariants", false);
  add_analysis("bounds", "evaluate the counting checks", false);
  add_analysis("pants", "run the full pipeline and extract a certificate", true);

  CLI::App* gen_cmd = app.add_subcommand("gen", "emit deterministic test inputs");
  gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
  gen_cmd->add_option("-o,--output", gen.out_path, "output file, or prefix for corpus modes");
  gen_cmd->add_option("--genus", gen.genus, "emit one synthetic complex of this genus");
  gen_cmd->add_option("--max-genus", gen.max_genus, "emit synthetic complexes for genus 2..N");
  gen_cmd->add_option("--samples", gen.samples, "emit sampled coordinate files");
  gen_cmd->add_option("--flavor", gen.flavor, "synthetic flavor")
      ->check(CLI::IsMember({"banded", "island"}));
  gen_cmd->add_option("--t", gen.t, "declared t for synthetic complexes");
  gen_cmd->add_option("--triangulation", gen.triangulation, "emit a bundled triangulation");
  gen_cmd->add_option("--tri-counts", gen.tri_counts, "triangle coordinates (4 values)")
      ->delimiter(',');
  gen_cmd->add_option("--quad-counts", gen.quad_counts, "quad coordinates (3 values)")
      ->delimiter(',');
  gen_cmd->add_flag("--verbose", gen.verbose, "progress notes on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    std::cout << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage: pcert {check|color|bounds|pants|gen} [options]\n"
              << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    return run_analysis(analysis);
  } catch (const pcert::InputError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const pcert::InternalError& e) {
    std::cerr << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kExitInternal;
  }
}
