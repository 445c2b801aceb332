#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "unlrdf/document.hpp"
#include "unlrdf/quad_store.hpp"
#include "unlrdf/validate.hpp"
#include "unlrdf/vocabulary.hpp"

namespace unlrdf {

// The two scope encodings: scope membership as RDF named graphs, or every
// relation reified as a resource carrying has_source/has_target/has_scope.
enum class ScopeMode { named_graphs, reified };

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AmbiguityError : public SchemaError {
public:
    using SchemaError::SchemaError;
};

struct RdfOptions {
    std::string base = std::string(ns::example);
    const Vocabulary* vocabulary = nullptr; // enables strict label checking
    Strictness strictness = Strictness::lax;
};

// Serializes a document into RDF-UNL quads. Occurrences carry their lexeme
// link (unl:is_occurrence_of) so extraction rules can resolve lexemes without
// a volume. Throws DocumentError when the document fails validation.
QuadStore to_rdf(const UnlDocument& doc, ScopeMode mode, const RdfOptions& options = {});

// Rebuilds a document from either encoding; accepts the unl:source /
// unl:target predicate spellings as well. Throws SchemaError on malformed
// stores and AmbiguityError when one scope appears in both encodings.
UnlDocument from_rdf(const QuadStore& store);

// from_rdf followed by to_rdf in the target mode, preserving the store's
// instance base.
QuadStore convert_scope_mode(const QuadStore& store, ScopeMode target);

// A volume of UW lexemes keyed by expression text.
struct UwVolume {
    std::string name;
    std::map<std::string, UwLexeme> lexemes;
};

// Loads the "expression | master_definition | id" volume format. The volume
// name is the file stem.
UwVolume load_volume(const std::filesystem::path& path);
UwVolume parse_volume(const std::string& text, const std::string& name);

struct LinkSummary {
    std::vector<std::string> matched;   // occurrence IRIs linked to a lexeme
    std::vector<std::string> unmatched; // occurrence IRIs with no volume entry
};

// Adds lexeme resources (type, labels, master definition, id, restriction
// triples) and has_occurrence links for every occurrence matching a volume
// entry. Unmatched occurrences are reported, never an error.
LinkSummary link_volume(QuadStore& store, const UwVolume& volume, const std::string& base);

// A UNL knowledge base: lexemes and top concepts connected by universal
// relations, the icl/iof/equ skeleton mapping onto RDFS/OWL.
struct Unlkb {
    struct Edge {
        std::string source; // expression text or top concept name
        std::string relation;
        std::string target;
    };
    std::vector<UwLexeme> lexemes;
    std::vector<std::string> top_concepts;
    std::vector<Edge> edges;
};

QuadStore emit_unlkb(const Unlkb& kb, const std::string& base,
                     const Vocabulary* vocab = nullptr,
                     Strictness strictness = Strictness::lax);

// Emits the RDF-UNL schema: the node-class taxonomy, every universal relation
// as paired owl:Class / owl:ObjectProperty with its hierarchy, and (when
// requested) the unl:attribute datatype with its owl:oneOf enumeration.
QuadStore emit_schema(const Vocabulary& vocab, bool include_attributes);

// URI helpers shared with the extraction rules.
std::string sentence_iri(const std::string& base, const std::string& sentence_id);
std::string scope_iri(const std::string& base, std::uint64_t counter);
std::string occurrence_iri(const std::string& base, const UwExpression& expr,
                           std::uint64_t counter);
std::string lexeme_iri(const std::string& base, const UwExpression& expr);

} // namespace unlrdf
