#include "unlrdf/consistency.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace unlrdf {

namespace {

std::string join_members(const std::vector<std::string>& members) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i)
            out += ", ";
        out += "\"" + members[i] + "\"";
    }
    return out;
}

} // namespace

std::vector<InconsistencyReport> check(const std::vector<ExtractedAxiom>& axioms) {
    std::vector<InconsistencyReport> reports;

    std::map<std::string, std::vector<const ExtractedAxiom*>> enums_by_subject;
    std::map<std::string, std::vector<const ExtractedAxiom*>> decls_by_property;
    std::map<std::string, std::vector<const ExtractedAxiom*>> cards_by_subject;
    for (const auto& axiom : axioms) {
        switch (axiom.kind) {
        case ExtractedAxiom::Kind::enumeration:
            enums_by_subject[axiom.subject].push_back(&axiom);
            break;
        case ExtractedAxiom::Kind::datatype_property:
            decls_by_property[axiom.subject].push_back(&axiom);
            break;
        case ExtractedAxiom::Kind::cardinality:
            cards_by_subject[axiom.subject].push_back(&axiom);
            break;
        default:
            break;
        }
    }

    for (const auto& axiom : axioms) {
        if (axiom.kind != ExtractedAxiom::Kind::assertion || axiom.property_iri.empty())
            continue;
        auto decls = decls_by_property.find(axiom.property_iri);
        if (decls == decls_by_property.end())
            continue;
        for (const ExtractedAxiom* decl : decls->second) {
            auto enums = enums_by_subject.find(decl->range_iri);
            if (enums == enums_by_subject.end())
                continue;
            for (const ExtractedAxiom* enumeration : enums->second) {
                if (std::find(enumeration->members.begin(), enumeration->members.end(),
                              axiom.value) != enumeration->members.end())
                    continue;
                InconsistencyReport report;
                report.kind = InconsistencyReport::Kind::enumeration_violation;
                report.subject = axiom.subject;
                report.conflicting_value = axiom.value;
                report.cited_axioms = {*enumeration, *decl, axiom};
                std::ostringstream msg;
                msg << "value \"" << axiom.value << "\" asserted on " << axiom.subject
                    << " via " << axiom.property_iri << " is not a member of owl:oneOf ("
                    << join_members(enumeration->members) << ") declared for the range "
                    << decl->range_iri;
                report.message = msg.str();
                reports.push_back(std::move(report));
            }
        }
    }

    for (const auto& [subject, enums] : enums_by_subject) {
        auto cards = cards_by_subject.find(subject);
        if (cards == cards_by_subject.end())
            continue;
        for (const ExtractedAxiom* enumeration : enums)
            for (const ExtractedAxiom* card : cards->second) {
                if (card->cardinality == static_cast<std::int64_t>(enumeration->members.size()))
                    continue;
                InconsistencyReport report;
                report.kind = InconsistencyReport::Kind::cardinality_mismatch;
                report.subject = subject;
                report.cited_axioms = {*enumeration, *card};
                std::ostringstream msg;
                msg << subject << " declares owl:cardinality " << card->cardinality
                    << " but its enumeration (" << join_members(enumeration->members)
                    << ") has " << enumeration->members.size() << " members";
                report.message = msg.str();
                reports.push_back(std::move(report));
            }
    }
    return reports;
}

std::string reports_to_text(const std::vector<InconsistencyReport>& reports) {
    std::ostringstream out;
    if (reports.empty()) {
        out << "consistent: no violations found\n";
        return out.str();
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& report = reports[i];
        out << "violation " << (i + 1) << ": "
            << (report.kind == InconsistencyReport::Kind::enumeration_violation
                    ? "EnumerationViolation"
                    : "CardinalityMismatch")
            << "\n";
        out << "  " << report.message << "\n";
        out << "  cited axioms:\n";
        for (const auto& axiom : report.cited_axioms)
            out << "    " << axiom.to_line() << "\n";
    }
    return out.str();
}

std::string reports_to_lines(const std::vector<InconsistencyReport>& reports) {
    std::ostringstream out;
    for (const auto& report : reports) {
        out << "VIOLATION "
            << (report.kind == InconsistencyReport::Kind::enumeration_violation
                    ? "EnumerationViolation"
                    : "CardinalityMismatch")
            << " " << report.subject;
        if (report.conflicting_value)
            out << " \"" << *report.conflicting_value << "\"";
        out << "\n";
    }
    return out.str();
}

} // namespace unlrdf
