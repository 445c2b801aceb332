#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "unlrdf/document.hpp"
#include "unlrdf/vocabulary.hpp"

namespace unlrdf {

enum class Strictness { strict, lax };

struct Violation {
    enum class Kind {
        missing_entry,
        multiple_entry,
        unknown_relation,
        unknown_attribute,
        dangling_ref,
        scope_cycle,
    };
    Kind kind;
    std::string sentence_id;
    std::string subject; // scope id, relation label, attribute or node key
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::size_t entry_violations(const std::string& scope_id) const;
    std::string to_text() const;
};

// Checks entry uniqueness per scope, vocabulary membership (strict mode),
// dangling node references and scope self-containment cycles. Never throws;
// everything is reported.
ValidationReport validate_document(const UnlDocument& doc, const Vocabulary& vocab,
                                   Strictness mode);

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Occurrence keys belonging to a scope: keys incident to a relation of that
// scope, plus (for the main scope) occurrences incident to no relation at all.
std::set<std::string> scope_members(const Sentence& sentence, const std::string& scope_id);

// The unique .@entry-bearing occurrence of a scope. Throws DocumentError on
// an unknown scope or when the scope has zero or several entries.
NodeRef entry_node(const UnlDocument& doc, const std::string& scope_id);

} // namespace unlrdf
