#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unlrdf/quad_store.hpp"

namespace unlrdf {

class RuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One extracted OWL statement. A tagged struct keeps the six shapes of the
// extraction output in one sortable value type.
struct ExtractedAxiom {
    enum class Kind {
        cardinality,        // subject owl:cardinality n
        enumeration,        // subject owl:equivalentClass [ owl:oneOf (...) ]
        datatype_property,  // property a owl:DatatypeProperty ; domain ; range
        class_decl,         // subject a owl:Class
        datatype_decl,      // subject a rdfs:Datatype
        assertion,          // instance a class [ ; property "value" ]
    };

    Kind kind;
    std::string subject;               // lexeme/instance IRI
    std::int64_t cardinality = 0;      // kind == cardinality
    std::vector<std::string> members;  // kind == enumeration, in chain order
    std::string domain_iri;            // kind == datatype_property
    std::string range_iri;             // kind == datatype_property
    std::string class_iri;             // kind == assertion
    std::string property_iri;          // kind == assertion (may be empty)
    std::string value;                 // kind == assertion (may be empty)

    static ExtractedAxiom make_cardinality(std::string subject, std::int64_t n);
    static ExtractedAxiom make_enumeration(std::string subject, std::vector<std::string> members);
    static ExtractedAxiom make_datatype_property(std::string property, std::string domain,
                                                 std::string range);
    static ExtractedAxiom make_class_decl(std::string subject);
    static ExtractedAxiom make_datatype_decl(std::string subject);
    static ExtractedAxiom make_assertion(std::string instance, std::string class_iri,
                                         std::string property = {}, std::string value = {});

    // Line format: CARD / ENUM / DTPROP / CLASS / DATATYPE / ASSERT.
    std::string to_line() const;

    friend bool operator==(const ExtractedAxiom&, const ExtractedAxiom&) = default;
    friend auto operator<=>(const ExtractedAxiom&, const ExtractedAxiom&) = default;
};

struct RuleResult {
    std::vector<ExtractedAxiom> axioms;
    std::vector<std::string> warnings;
};

// Rule 1: a reified unl:qua relation whose target label is a decimal integer
// yields owl:cardinality on the source's lexeme. Non-integer targets are
// skipped with a warning.
RuleResult rule_cardinality(const QuadStore& store);

// Rule 2: a reified unl:cnt whose head lexeme label contains "icl>attribute"
// starts an enumeration; members follow the unl:and chain from the cnt
// target. Chains shorter than two members yield nothing; a cyclic chain is a
// RuleError.
RuleResult rule_enumeration(const QuadStore& store);

// Rule 3: reified unl:aoj and unl:obj sharing a source and a scope, with a
// copular source lexeme (label contains "icl>be"), declare a datatype
// property with its domain/range and type the domain instance.
RuleResult rule_datatype_property(const QuadStore& store);

// Rule 4: each Rule-3 match with a same-scope unl:mod off the range
// occurrence asserts the property value on the domain instance.
RuleResult rule_instantiate_property(const QuadStore& store);

struct ExtractionResult {
    std::vector<ExtractedAxiom> axioms; // deduplicated, rule order
    std::vector<std::string> warnings;
    QuadStore constructed; // the axioms materialized as RDF
};

// Runs all four rules and materializes the returned axioms; idempotent over
// store + constructed output.
ExtractionResult run_all(const QuadStore& store);

// Renders axioms as RDF triples (owl:cardinality, skolemized owl:oneOf
// heads, property declarations, typed assertions).
QuadStore materialize(const std::vector<ExtractedAxiom>& axioms, const std::string& base);

// Reads fact-shaped triples (the materialized forms) back into axioms, so
// consistency checks accept extracted-fact files directly.
std::vector<ExtractedAxiom> axioms_from_store(const QuadStore& store);

std::string axioms_report(const std::vector<ExtractedAxiom>& axioms);

} // namespace unlrdf
