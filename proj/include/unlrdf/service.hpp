#pragma once

#include <memory>

#include "unlrdf/pipeline.hpp"

namespace httplib {
class Server;
}

namespace unlrdf {

// Stateless HTTP front end over the pipeline:
//   POST /unl2rdf?mode=named-graphs|reified   UNL text -> RDF text
//   POST /extract                             RDF -> axiom Turtle
//   POST /check                               RDF -> violation report
//   GET  /schema                              RDF-UNL schema Turtle
//   GET  /health
// Parse failures answer 400 with the diagnostic as the body. The vocabulary
// is loaded once at startup and shared read-only.
std::unique_ptr<httplib::Server> make_service(const PipelineConfig& config);

} // namespace unlrdf
