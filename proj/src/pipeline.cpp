#include "unlrdf/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "unlrdf/parser.hpp"
#include "unlrdf/turtle.hpp"

namespace unlrdf {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::ios_base::failure("cannot write " + path.string());
    out << content;
}

RdfOptions rdf_options(const PipelineConfig& config, const Vocabulary& vocab) {
    RdfOptions options;
    options.base = config.base;
    options.vocabulary = &vocab;
    options.strictness = config.strictness;
    return options;
}

// True when the store carries relation triples in the named-graphs encoding
// (direct unl: predicates between nodes, possibly graph-tagged).
bool has_direct_relation_triples(const QuadStore& store) {
    static const char* reserved[] = {
        "has_attribute", "has_source", "has_target", "has_scope", "source", "target",
        "has_lexeme", "is_occurrence_of", "has_occurrence", "is_substructure_of",
        "is_superstructure_of", "has_index", "has_master_definition", "has_id",
    };
    for (const auto& q : store.quads()) {
        if (!q.object.is_iri())
            continue;
        constexpr std::string_view space = ns::unl;
        if (q.predicate.size() <= space.size() ||
            q.predicate.compare(0, space.size(), space) != 0)
            continue;
        std::string local = q.predicate.substr(space.size());
        bool is_reserved = false;
        for (const char* r : reserved)
            if (local == r)
                is_reserved = true;
        if (!is_reserved)
            return true;
    }
    return false;
}

QuadStore normalized_reified(const QuadStore& store) {
    if (store.has_named_graphs() || has_direct_relation_triples(store))
        return convert_scope_mode(store, ScopeMode::reified);
    return store;
}

void dedupe_axioms(std::vector<ExtractedAxiom>& axioms) {
    std::vector<ExtractedAxiom> out;
    for (auto& a : axioms)
        if (std::find(out.begin(), out.end(), a) == out.end())
            out.push_back(std::move(a));
    axioms = std::move(out);
}

} // namespace

std::filesystem::path default_vocabulary_path() {
    if (const char* env = std::getenv("UNLRDF_VOCAB"); env && *env)
        return env;
#ifdef UNLRDF_DATA_DIR
    return std::filesystem::path(UNLRDF_DATA_DIR) / "vocabulary.unlvoc";
#else
    return "data/vocabulary.unlvoc";
#endif
}

Vocabulary load_config_vocabulary(const PipelineConfig& config) {
    std::filesystem::path path =
        config.vocabulary_path.empty() ? default_vocabulary_path() : config.vocabulary_path;
    return load_vocabulary(path);
}

CommandResult run_parse(const PipelineConfig& config, const std::string& unl_text) {
    CommandResult result;
    try {
        Vocabulary vocab = load_config_vocabulary(config);
        ParseOptions options{config.counter_base};
        UnlDocument doc = parse_unl_document(unl_text, options);
        ValidationReport report = validate_document(doc, vocab, config.strictness);
        if (!report.ok()) {
            result.code = ExitCode::validation;
            result.diagnostics = report.to_text();
            return result;
        }
        result.output = format_unl_document(doc);
    } catch (const ParseError& e) {
        result.code = ExitCode::syntax;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const std::ios_base::failure& e) {
        result.code = ExitCode::io;
        result.diagnostics = std::string(e.what()) + "\n";
    }
    return result;
}

CommandResult run_serialize(const PipelineConfig& config, const std::string& unl_text,
                            ScopeMode mode) {
    CommandResult result;
    try {
        Vocabulary vocab = load_config_vocabulary(config);
        ParseOptions options{config.counter_base};
        UnlDocument doc = parse_unl_document(unl_text, options);
        QuadStore store = to_rdf(doc, mode, rdf_options(config, vocab));
        if (config.volume_path) {
            UwVolume volume = load_volume(*config.volume_path);
            link_volume(store, volume, config.base);
        }
        result.output = mode == ScopeMode::named_graphs ? emit_trig(store) : emit_turtle(store);
    } catch (const ParseError& e) {
        result.code = ExitCode::syntax;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const DocumentError& e) {
        result.code = ExitCode::validation;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const std::ios_base::failure& e) {
        result.code = ExitCode::io;
        result.diagnostics = std::string(e.what()) + "\n";
    }
    return result;
}

CommandResult run_convert(const PipelineConfig& config, const std::string& rdf_text,
                          ScopeMode target) {
    (void)config;
    CommandResult result;
    try {
        QuadStore store = load_trig(rdf_text);
        QuadStore converted = convert_scope_mode(store, target);
        result.output =
            target == ScopeMode::named_graphs ? emit_trig(converted) : emit_turtle(converted);
    } catch (const LoadError& e) {
        result.code = ExitCode::syntax;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const SchemaError& e) {
        result.code = ExitCode::validation;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const DocumentError& e) {
        result.code = ExitCode::validation;
        result.diagnostics = std::string(e.what()) + "\n";
    }
    return result;
}

namespace {

std::vector<ExtractedAxiom> extract_axioms(const std::vector<std::string>& rdf_texts,
                                           std::vector<std::string>& warnings,
                                           QuadStore* constructed) {
    QuadStore merged;
    for (const auto& text : rdf_texts)
        merged.merge(load_trig(text));

    std::vector<ExtractedAxiom> axioms = axioms_from_store(merged);
    QuadStore reified = normalized_reified(merged);
    ExtractionResult extraction = run_all(reified);
    axioms.insert(axioms.end(), extraction.axioms.begin(), extraction.axioms.end());
    warnings.insert(warnings.end(), extraction.warnings.begin(), extraction.warnings.end());
    dedupe_axioms(axioms);
    if (constructed)
        *constructed = extraction.constructed;
    return axioms;
}

} // namespace

ExtractOutput run_extract(const PipelineConfig& config,
                          const std::vector<std::string>& rdf_texts) {
    ExtractOutput result;
    try {
        std::vector<std::string> warnings;
        QuadStore merged;
        for (const auto& text : rdf_texts)
            merged.merge(load_trig(text));
        QuadStore reified = normalized_reified(merged);
        ExtractionResult extraction = run_all(reified);
        result.axioms = extraction.axioms;
        result.turtle = emit_turtle(extraction.constructed);
        result.report = axioms_report(extraction.axioms);
        for (const auto& w : extraction.warnings)
            result.diagnostics += w + "\n";
        (void)config;
    } catch (const LoadError& e) {
        result.code = ExitCode::syntax;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const std::runtime_error& e) {
        result.code = ExitCode::validation;
        result.diagnostics = std::string(e.what()) + "\n";
    }
    return result;
}

CheckOutput run_check(const PipelineConfig& config, const std::vector<std::string>& rdf_texts) {
    (void)config;
    CheckOutput result;
    try {
        std::vector<std::string> warnings;
        std::vector<ExtractedAxiom> axioms = extract_axioms(rdf_texts, warnings, nullptr);
        result.reports = check(axioms);
        result.text = reports_to_text(result.reports);
        result.lines = reports_to_lines(result.reports);
        for (const auto& w : warnings)
            result.diagnostics += w + "\n";
        if (!result.reports.empty())
            result.code = ExitCode::inconsistency;
    } catch (const LoadError& e) {
        result.code = ExitCode::syntax;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const std::runtime_error& e) {
        result.code = ExitCode::validation;
        result.diagnostics = std::string(e.what()) + "\n";
    }
    return result;
}

PipelineOutput run_pipeline(const PipelineConfig& config,
                            const std::vector<std::filesystem::path>& unl_files,
                            const std::filesystem::path& out_dir) {
    PipelineOutput result;
    try {
        Vocabulary vocab = load_config_vocabulary(config);
        std::optional<UwVolume> volume;
        if (config.volume_path)
            volume = load_volume(*config.volume_path);

        std::filesystem::create_directories(out_dir);

        std::uint64_t counter = config.counter_base;
        QuadStore merged;
        for (const auto& file : unl_files) {
            std::string text = read_file(file);
            ParseOptions options{counter};
            UnlDocument doc = parse_unl_document(text, options);
            counter = doc.next_counter;

            ValidationReport report = validate_document(doc, vocab, config.strictness);
            if (!report.ok()) {
                result.code = ExitCode::validation;
                result.diagnostics += file.string() + ":\n" + report.to_text();
                return result;
            }

            for (const Sentence* sentence : doc.sentences()) {
                UnlDocument single;
                single.counter_base = doc.counter_base;
                single.next_counter = doc.next_counter;
                single.paragraphs.push_back(Paragraph{{*sentence}});
                QuadStore store =
                    to_rdf(single, ScopeMode::reified, rdf_options(config, vocab));
                if (volume)
                    link_volume(store, *volume, config.base);
                std::filesystem::path out_path = out_dir / (sentence->id + ".trig");
                write_file(out_path, emit_turtle(store));
                result.written.push_back(out_path);
                merged.merge(store);
            }
        }

        ExtractionResult extraction = run_all(merged);
        for (const auto& w : extraction.warnings)
            result.diagnostics += w + "\n";
        std::filesystem::path axioms_path = out_dir / "axioms.ttl";
        write_file(axioms_path, emit_turtle(extraction.constructed));
        result.written.push_back(axioms_path);

        result.reports = check(extraction.axioms);
        std::filesystem::path report_path = out_dir / "report.txt";
        write_file(report_path,
                   reports_to_lines(result.reports) + reports_to_text(result.reports));
        result.written.push_back(report_path);

        if (!result.reports.empty())
            result.code = ExitCode::inconsistency;
    } catch (const ParseError& e) {
        result.code = ExitCode::syntax;
        result.diagnostics += std::string(e.what()) + "\n";
    } catch (const VocabularyError& e) {
        result.code = ExitCode::io;
        result.diagnostics += std::string(e.what()) + "\n";
    } catch (const DocumentError& e) {
        result.code = ExitCode::validation;
        result.diagnostics += std::string(e.what()) + "\n";
    } catch (const std::ios_base::failure& e) {
        result.code = ExitCode::io;
        result.diagnostics += std::string(e.what()) + "\n";
    } catch (const std::filesystem::filesystem_error& e) {
        result.code = ExitCode::io;
        result.diagnostics += std::string(e.what()) + "\n";
    }
    return result;
}

} // namespace unlrdf
