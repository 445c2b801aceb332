#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "unlrdf/consistency.hpp"
#include "unlrdf/rdf_unl.hpp"

namespace unlrdf {

enum class ExitCode : int {
    ok = 0,
    syntax = 1,
    validation = 2,
    inconsistency = 3,
    io = 4,
};

struct PipelineConfig {
    ScopeMode scope_mode = ScopeMode::reified;
    Strictness strictness = Strictness::strict;
    std::string base = std::string(ns::example);
    std::filesystem::path vocabulary_path; // empty: default resolution
    std::optional<std::filesystem::path> volume_path;
    std::uint64_t counter_base = 1;
};

// UNLRDF_VOCAB, then the built-in data directory.
std::filesystem::path default_vocabulary_path();

Vocabulary load_config_vocabulary(const PipelineConfig& config);

struct CommandResult {
    ExitCode code = ExitCode::ok;
    std::string output; // primary payload (stdout)
    std::string diagnostics;
};

// parse + validate + canonical text
CommandResult run_parse(const PipelineConfig& config, const std::string& unl_text);

// parse + validate + to_rdf + emit (TriG for named graphs, Turtle for
// reified); volume linking applies when configured
CommandResult run_serialize(const PipelineConfig& config, const std::string& unl_text,
                            ScopeMode mode);

// load + convert_scope_mode + emit
CommandResult run_convert(const PipelineConfig& config, const std::string& rdf_text,
                          ScopeMode target);

struct ExtractOutput {
    ExitCode code = ExitCode::ok;
    std::string turtle;      // constructed axioms as RDF
    std::string report;      // line-format axiom report
    std::string diagnostics; // warnings and errors
    std::vector<ExtractedAxiom> axioms;
};

// Accepts reified stores, named-graph stores (auto-converted) and mixtures
// of RDF-UNL and fact-shaped inputs.
ExtractOutput run_extract(const PipelineConfig& config,
                          const std::vector<std::string>& rdf_texts);

struct CheckOutput {
    ExitCode code = ExitCode::ok;
    std::vector<InconsistencyReport> reports;
    std::string text;  // human-readable report
    std::string lines; // VIOLATION lines
    std::string diagnostics;
};

CheckOutput run_check(const PipelineConfig& config, const std::vector<std::string>& rdf_texts);

struct PipelineOutput {
    ExitCode code = ExitCode::ok;
    std::vector<std::filesystem::path> written;
    std::vector<InconsistencyReport> reports;
    std::string diagnostics;
};

// Full run over UNL files: parse -> per-sentence reified serialization ->
// extraction over the union -> consistency check. Writes <sentence-id>.trig,
// axioms.ttl and report.txt into the output directory.
PipelineOutput run_pipeline(const PipelineConfig& config,
                            const std::vector<std::filesystem::path>& unl_files,
                            const std::filesystem::path& out_dir);

} // namespace unlrdf
