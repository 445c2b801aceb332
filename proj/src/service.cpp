#include "unlrdf/service.hpp"

#include <httplib.h>

#include "unlrdf/turtle.hpp"

namespace unlrdf {

namespace {

ScopeMode mode_from_query(const httplib::Request& req, ScopeMode fallback) {
    if (!req.has_param("mode"))
        return fallback;
    std::string mode = req.get_param_value("mode");
    if (mode == "named-graphs")
        return ScopeMode::named_graphs;
    if (mode == "reified")
        return ScopeMode::reified;
    throw std::invalid_argument("unknown mode '" + mode + "' (use named-graphs or reified)");
}

} // namespace

std::unique_ptr<httplib::Server> make_service(const PipelineConfig& config) {
    auto server = std::make_unique<httplib::Server>();
    auto shared_config = std::make_shared<const PipelineConfig>(config);
    auto schema_text = std::make_shared<const std::string>(
        emit_turtle(emit_schema(load_config_vocabulary(config), /*include_attributes=*/true)));

    server->Get("/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("ok\n", "text/plain");
    });

    server->Get("/schema", [schema_text](const httplib::Request&, httplib::Response& res) {
        res.set_content(*schema_text, "text/turtle");
    });

    server->Post("/unl2rdf", [shared_config](const httplib::Request& req,
                                             httplib::Response& res) {
        ScopeMode mode;
        try {
            mode = mode_from_query(req, shared_config->scope_mode);
        } catch (const std::invalid_argument& e) {
            res.status = 400;
            res.set_content(std::string(e.what()) + "\n", "text/plain");
            return;
        }
        CommandResult result = run_serialize(*shared_config, req.body, mode);
        if (result.code != ExitCode::ok) {
            res.status = 400;
            res.set_content(result.diagnostics, "text/plain");
            return;
        }
        res.set_content(result.output,
                        mode == ScopeMode::named_graphs ? "application/trig" : "text/turtle");
    });

    server->Post("/extract", [shared_config](const httplib::Request& req,
                                             httplib::Response& res) {
        ExtractOutput result = run_extract(*shared_config, {req.body});
        if (result.code != ExitCode::ok) {
            res.status = 400;
            res.set_content(result.diagnostics, "text/plain");
            return;
        }
        res.set_content(result.turtle, "text/turtle");
    });

    server->Post("/check", [shared_config](const httplib::Request& req,
                                           httplib::Response& res) {
        CheckOutput result = run_check(*shared_config, {req.body});
        if (result.code == ExitCode::syntax || result.code == ExitCode::validation) {
            res.status = 400;
            res.set_content(result.diagnostics, "text/plain");
            return;
        }
        res.set_content(result.lines + result.text, "text/plain");
    });

    return server;
}

} // namespace unlrdf
