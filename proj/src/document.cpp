#include "unlrdf/document.hpp"

#include <algorithm>

namespace unlrdf {

std::string Sentence::add_occurrence(const UwExpression& expr, std::uint64_t& next_counter) {
    std::string key = occurrence_key(expr);
    auto it = occurrences.find(key);
    if (it == occurrences.end()) {
        Occurrence occ;
        occ.expression = expr;
        occ.counter = next_counter++;
        occurrences.emplace(key, std::move(occ));
        occurrence_order.push_back(key);
    } else {
        for (const auto& a : expr.attributes)
            it->second.expression.add_attribute(a);
    }
    return key;
}

void Sentence::add_scope(const std::string& scope_id, std::uint64_t& next_counter) {
    if (scope_id == id || scope_counters.count(scope_id) > 0)
        return;
    scope_counters.emplace(scope_id, 0); // numbered after occurrences
    scope_order.push_back(scope_id);
    (void)next_counter;
}

std::vector<const Sentence*> UnlDocument::sentences() const {
    std::vector<const Sentence*> out;
    for (const auto& p : paragraphs)
        for (const auto& s : p.sentences)
            out.push_back(&s);
    return out;
}

std::vector<Sentence*> UnlDocument::sentences() {
    std::vector<Sentence*> out;
    for (auto& p : paragraphs)
        for (auto& s : p.sentences)
            out.push_back(&s);
    return out;
}

const Sentence* UnlDocument::find_sentence(const std::string& id) const {
    for (const Sentence* s : sentences())
        if (s->id == id)
            return s;
    return nullptr;
}

const Sentence* UnlDocument::find_scope_owner(const std::string& scope_id) const {
    for (const Sentence* s : sentences())
        if (s->has_scope(scope_id))
            return s;
    return nullptr;
}

namespace {

std::vector<RelationInstance> sorted_relations(const Sentence& s) {
    auto rels = s.relations;
    std::sort(rels.begin(), rels.end());
    return rels;
}

} // namespace

bool structurally_equal(const Sentence& a, const Sentence& b, bool ignore_counters) {
    if (a.id != b.id || a.original_text != b.original_text || a.org_tag != b.org_tag)
        return false;
    if (a.occurrence_order != b.occurrence_order || a.scope_order != b.scope_order)
        return false;
    for (const auto& key : a.occurrence_order) {
        const Occurrence* oa = a.occurrence(key);
        const Occurrence* ob = b.occurrence(key);
        if (!oa || !ob || !(oa->expression == ob->expression))
            return false;
        if (!ignore_counters && oa->counter != ob->counter)
            return false;
    }
    if (!ignore_counters && a.scope_counters != b.scope_counters)
        return false;
    return sorted_relations(a) == sorted_relations(b);
}

bool structurally_equal(const UnlDocument& a, const UnlDocument& b, bool ignore_counters) {
    if (a.explicit_structure != b.explicit_structure)
        return false;
    if (a.paragraphs.size() != b.paragraphs.size())
        return false;
    for (std::size_t p = 0; p < a.paragraphs.size(); ++p) {
        const auto& pa = a.paragraphs[p].sentences;
        const auto& pb = b.paragraphs[p].sentences;
        if (pa.size() != pb.size())
            return false;
        for (std::size_t s = 0; s < pa.size(); ++s)
            if (!structurally_equal(pa[s], pb[s], ignore_counters))
                return false;
    }
    return true;
}

} // namespace unlrdf
