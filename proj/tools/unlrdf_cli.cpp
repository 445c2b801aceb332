// unlrdf: UNL text <-> RDF-UNL conversion, axiom extraction and consistency
// checking, plus the unl2rdf web service.
//
// Exit codes: 0 ok, 1 syntax error, 2 validation failure, 3 inconsistency
// detected, 4 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "unlrdf/pipeline.hpp"
#include "unlrdf/service.hpp"
#include "unlrdf/turtle.hpp"

namespace {

int to_exit(unlrdf::ExitCode code) { return static_cast<int>(code); }

std::optional<std::string> read_file(const std::string& path, std::string& error) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        error = "cannot open " + path;
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CommonFlags {
    std::string vocab;
    std::string volume;
    std::string base;
    std::string strictness = "strict";
    std::uint64_t counter_base = 1;

    void attach(CLI::App* app) {
        app->add_option("--vocab", vocab, "vocabulary file")->envname("UNLRDF_VOCAB");
        app->add_option("--volume", volume, "UW volume file")->envname("UNLRDF_VOLUME");
        app->add_option("--base", base, "instance base IRI")->envname("UNLRDF_BASE");
        app->add_option("--strictness", strictness, "strict|lax")
            ->check(CLI::IsMember({"strict", "lax"}))
            ->envname("UNLRDF_STRICTNESS");
        app->add_flag_callback("--lax", [this] { strictness = "lax"; },
                               "shorthand for --strictness lax");
        app->add_option("--counter-base", counter_base, "first occurrence counter")
            ->envname("UNLRDF_COUNTER_BASE");
    }

    unlrdf::PipelineConfig config() const {
        unlrdf::PipelineConfig cfg;
        if (!vocab.empty())
            cfg.vocabulary_path = vocab;
        if (!volume.empty())
            cfg.volume_path = volume;
        if (!base.empty())
            cfg.base = base;
        cfg.strictness =
            strictness == "lax" ? unlrdf::Strictness::lax : unlrdf::Strictness::strict;
        cfg.counter_base = counter_base;
        return cfg;
    }
};

unlrdf::ScopeMode parse_mode(const std::string& mode) {
    return mode == "named-graphs" ? unlrdf::ScopeMode::named_graphs
                                  : unlrdf::ScopeMode::reified;
}

int emit_result(const unlrdf::CommandResult& result) {
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return to_exit(result.code);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RDF-UNL toolkit: UNL graphs as RDF, axiom extraction, "
                 "consistency checking"};
    app.require_subcommand(1);
    CommonFlags flags;

    std::string input;
    std::vector<std::string> inputs;
    std::string mode = "reified";
    std::string out_dir = "out";
    std::string listen = "127.0.0.1:8080";
    bool schema_attributes = true;

    auto* parse_cmd = app.add_subcommand("parse", "parse and reprint UNL text");
    parse_cmd->add_option("input", input, "UNL file")->required();
    flags.attach(parse_cmd);

    auto* serialize_cmd = app.add_subcommand("serialize", "UNL text to RDF-UNL");
    serialize_cmd->add_option("input", input, "UNL file")->required();
    serialize_cmd->add_option("--mode", mode, "named-graphs|reified")
        ->check(CLI::IsMember({"named-graphs", "reified"}))
        ->envname("UNLRDF_MODE");
    flags.attach(serialize_cmd);

    auto* convert_cmd = app.add_subcommand("convert", "switch the scope encoding of RDF-UNL");
    convert_cmd->add_option("input", input, "Turtle/TriG file")->required();
    convert_cmd->add_option("--to", mode, "named-graphs|reified")
        ->check(CLI::IsMember({"named-graphs", "reified"}))
        ->required();
    flags.attach(convert_cmd);

    auto* extract_cmd = app.add_subcommand("extract", "extract OWL axioms from RDF-UNL");
    extract_cmd->add_option("inputs", inputs, "Turtle/TriG files")->required();
    flags.attach(extract_cmd);

    auto* check_cmd = app.add_subcommand("check", "check extracted axioms for consistency");
    check_cmd->add_option("inputs", inputs, "Turtle/TriG files (RDF-UNL or axiom facts)")
        ->required();
    flags.attach(check_cmd);

    auto* pipeline_cmd =
        app.add_subcommand("pipeline", "parse, serialize, extract and check UNL files");
    pipeline_cmd->add_option("inputs", inputs, "UNL files")->required();
    pipeline_cmd->add_option("--out", out_dir, "output directory")->envname("UNLRDF_OUT");
    flags.attach(pipeline_cmd);

    auto* schema_cmd = app.add_subcommand("schema", "emit the RDF-UNL schema");
    schema_cmd->add_flag("--attributes,!--no-attributes", schema_attributes,
                         "include the attribute datatype");
    flags.attach(schema_cmd);

    auto* serve_cmd = app.add_subcommand("serve", "run the unl2rdf web service");
    serve_cmd->add_option("--listen", listen, "host:port")->envname("UNLRDF_LISTEN");
    serve_cmd->add_option("--mode", mode, "default scope mode")
        ->check(CLI::IsMember({"named-graphs", "reified"}));
    flags.attach(serve_cmd);

    CLI11_PARSE(app, argc, argv);

    unlrdf::PipelineConfig config = flags.config();
    config.scope_mode = parse_mode(mode);

    std::string io_error;
    try {
        if (parse_cmd->parsed()) {
            auto text = read_file(input, io_error);
            if (!text) {
                std::cerr << io_error << "\n";
                return to_exit(unlrdf::ExitCode::io);
            }
            return emit_result(unlrdf::run_parse(config, *text));
        }
        if (serialize_cmd->parsed()) {
            auto text = read_file(input, io_error);
            if (!text) {
                std::cerr << io_error << "\n";
                return to_exit(unlrdf::ExitCode::io);
            }
            return emit_result(unlrdf::run_serialize(config, *text, parse_mode(mode)));
        }
        if (convert_cmd->parsed()) {
            auto text = read_file(input, io_error);
            if (!text) {
                std::cerr << io_error << "\n";
                return to_exit(unlrdf::ExitCode::io);
            }
            return emit_result(unlrdf::run_convert(config, *text, parse_mode(mode)));
        }
        if (extract_cmd->parsed()) {
            std::vector<std::string> texts;
            for (const auto& path : inputs) {
                auto text = read_file(path, io_error);
                if (!text) {
                    std::cerr << io_error << "\n";
                    return to_exit(unlrdf::ExitCode::io);
                }
                texts.push_back(std::move(*text));
            }
            unlrdf::ExtractOutput result = unlrdf::run_extract(config, texts);
            std::cout << result.turtle;
            std::cerr << result.report << result.diagnostics;
            return to_exit(result.code);
        }
        if (check_cmd->parsed()) {
            std::vector<std::string> texts;
            for (const auto& path : inputs) {
                auto text = read_file(path, io_error);
                if (!text) {
                    std::cerr << io_error << "\n";
                    return to_exit(unlrdf::ExitCode::io);
                }
                texts.push_back(std::move(*text));
            }
            unlrdf::CheckOutput result = unlrdf::run_check(config, texts);
            std::cout << result.lines << result.text;
            std::cerr << result.diagnostics;
            return to_exit(result.code);
        }
        if (pipeline_cmd->parsed()) {
            std::vector<std::filesystem::path> files(inputs.begin(), inputs.end());
            unlrdf::PipelineOutput result = unlrdf::run_pipeline(config, files, out_dir);
            std::cout << unlrdf::reports_to_lines(result.reports);
            std::cerr << result.diagnostics;
            return to_exit(result.code);
        }
        if (schema_cmd->parsed()) {
            unlrdf::Vocabulary vocab = unlrdf::load_config_vocabulary(config);
            std::cout << unlrdf::emit_turtle(unlrdf::emit_schema(vocab, schema_attributes));
            return 0;
        }
        if (serve_cmd->parsed()) {
            std::string host = listen;
            int port = 8080;
            if (auto colon = listen.rfind(':'); colon != std::string::npos) {
                host = listen.substr(0, colon);
                port = std::stoi(listen.substr(colon + 1));
            }
            auto server = unlrdf::make_service(config);
            std::cerr << "listening on " << host << ":" << port << "\n";
            if (!server->listen(host, port)) {
                std::cerr << "cannot bind " << listen << "\n";
                return to_exit(unlrdf::ExitCode::io);
            }
            return 0;
        }
    } catch (const unlrdf::VocabularyError& e) {
        std::cerr << e.what() << "\n";
        return to_exit(unlrdf::ExitCode::io);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return to_exit(unlrdf::ExitCode::io);
    }
    return 0;
}
