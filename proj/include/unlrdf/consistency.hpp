#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unlrdf/axioms.hpp"

namespace unlrdf {

// One detected conflict between extracted axioms, citing every participant.
struct InconsistencyReport {
    enum class Kind { enumeration_violation, cardinality_mismatch };

    Kind kind;
    std::string subject;
    std::optional<std::string> conflicting_value;
    std::vector<ExtractedAxiom> cited_axioms;
    std::string message;
};

// Complete over the shapes run_all can produce: an asserted property value
// outside the owl:oneOf enumeration declared for the property's range, and an
// owl:cardinality disagreeing with its subject's enumeration size. Membership
// comparison is exact on the full UW label text.
std::vector<InconsistencyReport> check(const std::vector<ExtractedAxiom>& axioms);

// Human-readable blocks, one per report.
std::string reports_to_text(const std::vector<InconsistencyReport>& reports);

// Machine format: "VIOLATION kind subject value" lines.
std::string reports_to_lines(const std::vector<InconsistencyReport>& reports);

} // namespace unlrdf
