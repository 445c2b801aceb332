#include "unlrdf/validate.hpp"

#include <map>
#include <regex>
#include <sstream>

namespace unlrdf {

std::size_t ValidationReport::entry_violations(const std::string& scope_id) const {
    std::size_t n = 0;
    for (const auto& v : violations)
        if ((v.kind == Violation::Kind::missing_entry ||
             v.kind == Violation::Kind::multiple_entry) &&
            v.subject == scope_id)
            ++n;
    return n;
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    for (const auto& v : violations)
        out << v.sentence_id << ": " << v.message << "\n";
    return out.str();
}

std::set<std::string> scope_members(const Sentence& sentence, const std::string& scope_id) {
    std::set<std::string> members;
    std::set<std::string> incident_anywhere;
    for (const auto& rel : sentence.relations) {
        for (const NodeRef* node : {&rel.source, &rel.target}) {
            if (node->kind != NodeRef::Kind::occurrence)
                continue;
            incident_anywhere.insert(node->key);
            if (rel.scope == scope_id)
                members.insert(node->key);
        }
    }
    if (scope_id == sentence.id) {
        // Isolated occurrences are top-level nodes of the graph.
        for (const auto& key : sentence.occurrence_order)
            if (incident_anywhere.count(key) == 0)
                members.insert(key);
    }
    return members;
}

namespace {

const std::regex lax_attribute_re("[A-Za-z0-9_-]+");

void check_sentence(const Sentence& sentence, const Vocabulary& vocab, Strictness mode,
                    std::vector<Violation>& out) {
    auto add = [&](Violation::Kind kind, std::string subject, std::string message) {
        out.push_back({kind, sentence.id, std::move(subject), std::move(message)});
    };

    // Relation labels and node references.
    for (const auto& rel : sentence.relations) {
        if (mode == Strictness::strict && !vocab.has_relation(rel.label))
            add(Violation::Kind::unknown_relation, rel.label,
                "unknown relation '" + rel.label + "'");
        for (const NodeRef* node : {&rel.source, &rel.target}) {
            bool ok = node->kind == NodeRef::Kind::occurrence
                          ? sentence.occurrences.count(node->key) > 0
                          : sentence.has_scope(node->key);
            if (!ok)
                add(Violation::Kind::dangling_ref, node->key,
                    "dangling node reference '" + node->key + "'");
        }
        if (!sentence.has_scope(rel.scope))
            add(Violation::Kind::dangling_ref, rel.scope,
                "relation assigned to undeclared scope '" + rel.scope + "'");
    }

    // Occurrence attributes and restriction labels.
    for (const auto& key : sentence.occurrence_order) {
        const Occurrence& occ = *sentence.occurrence(key);
        for (const auto& r : occ.expression.restrictions)
            if (mode == Strictness::strict && !vocab.has_relation(r.relation))
                add(Violation::Kind::unknown_relation, r.relation,
                    "unknown restriction relation '" + r.relation + "' in " + key);
        for (const auto& attr : occ.expression.attributes) {
            bool ok = mode == Strictness::strict
                          ? vocab.has_attribute(attr)
                          : std::regex_match(attr, lax_attribute_re);
            if (!ok)
                add(Violation::Kind::unknown_attribute, attr,
                    "unknown attribute '.@" + attr + "' on " + key);
        }
    }

    // Scope self-containment cycles: edges from a scope to scopes used as
    // nodes inside it.
    std::map<std::string, std::set<std::string>> scope_edges;
    for (const auto& rel : sentence.relations)
        for (const NodeRef* node : {&rel.source, &rel.target})
            if (node->kind == NodeRef::Kind::scope)
                scope_edges[rel.scope].insert(node->key);
    {
        enum class Mark { unseen, visiting, done };
        std::map<std::string, Mark> marks;
        auto visit = [&](auto&& self, const std::string& scope) -> bool {
            Mark& mark = marks[scope];
            if (mark == Mark::done)
                return false;
            if (mark == Mark::visiting)
                return true;
            mark = Mark::visiting;
            bool cyclic = false;
            auto it = scope_edges.find(scope);
            if (it != scope_edges.end())
                for (const auto& next : it->second)
                    cyclic = self(self, next) || cyclic;
            mark = Mark::done;
            return cyclic;
        };
        for (const auto& [scope, targets] : scope_edges) {
            marks.clear();
            if (visit(visit, scope))
                add(Violation::Kind::scope_cycle, scope,
                    "scope '" + scope + "' contains itself");
        }
    }

    // Exactly one .@entry occurrence per non-empty scope.
    std::vector<std::string> scope_ids{sentence.id};
    scope_ids.insert(scope_ids.end(), sentence.scope_order.begin(), sentence.scope_order.end());
    for (const auto& scope_id : scope_ids) {
        auto members = scope_members(sentence, scope_id);
        if (members.empty())
            continue;
        std::size_t entries = 0;
        for (const auto& key : members) {
            const Occurrence* occ = sentence.occurrence(key);
            if (occ && occ->expression.has_attribute("entry"))
                ++entries;
        }
        if (entries == 0)
            add(Violation::Kind::missing_entry, scope_id,
                "scope '" + scope_id + "' has no .@entry occurrence");
        else if (entries > 1)
            add(Violation::Kind::multiple_entry, scope_id,
                "scope '" + scope_id + "' has " + std::to_string(entries) +
                    " .@entry occurrences");
    }
}

} // namespace

ValidationReport validate_document(const UnlDocument& doc, const Vocabulary& vocab,
                                   Strictness mode) {
    ValidationReport report;
    for (const Sentence* s : doc.sentences())
        check_sentence(*s, vocab, mode, report.violations);
    return report;
}

NodeRef entry_node(const UnlDocument& doc, const std::string& scope_id) {
    const Sentence* sentence = doc.find_scope_owner(scope_id);
    if (!sentence)
        throw DocumentError("unknown scope '" + scope_id + "'");
    auto members = scope_members(*sentence, scope_id);
    std::vector<std::string> entries;
    for (const auto& key : members) {
        const Occurrence* occ = sentence->occurrence(key);
        if (occ && occ->expression.has_attribute("entry"))
            entries.push_back(key);
    }
    if (entries.size() != 1)
        throw DocumentError("scope '" + scope_id + "' has " + std::to_string(entries.size()) +
                            " entry occurrences");
    return NodeRef::occurrence(entries.front());
}

} // namespace unlrdf
