#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "unlrdf/document.hpp"
#include "unlrdf/source_span.hpp"
#include "unlrdf/uw.hpp"

namespace unlrdf {

struct ParseOptions {
    // First value of the shared occurrence/scope counter sequence. Threading
    // the next_counter of one parse into the next keeps URIs unique across a
    // multi-file run.
    std::uint64_t counter_base = 1;
};

// Parses a single UW expression; the whole input must be consumed.
// Throws ParseError with a SourceSpan on malformed input.
UwExpression parse_uw(const std::string& text);

// One node of a relation line: either a UW expression or a ":NN" scope
// reference.
struct ParsedNode {
    bool is_scope = false;
    UwExpression expression; // when !is_scope
    std::string scope_id;    // when is_scope
};

struct ParsedRelationLine {
    std::string label;
    std::optional<std::string> scope; // the ":NN" qualifier
    ParsedNode source;
    ParsedNode target;
};

// Parses one "rel:NN(a,b)" line in isolation.
ParsedRelationLine parse_relation_line(const std::string& text);

// Parses the UNL interchange format ([D]/[P]/[S] blocks with {org} and {unl}
// sections). Scopes are declared by use; a ":NN" node whose id never
// qualifies a relation line is an error.
UnlDocument parse_unl_document(const std::string& text, const ParseOptions& options = {});

// Canonical text for a document; parse(format(d)) is structurally equal to d
// when reparsed with d's counter base. Relations keep insertion order and an
// occurrence's attributes are printed at its first mention.
std::string format_unl_document(const UnlDocument& doc);

} // namespace unlrdf
