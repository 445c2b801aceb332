#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unlrdf/uw.hpp"

namespace unlrdf {

// A node of a UNL hypergraph: either a UW occurrence (identified by its
// occurrence key within the sentence) or a scope acting as a node.
struct NodeRef {
    enum class Kind { occurrence, scope };
    Kind kind = Kind::occurrence;
    std::string key;

    static NodeRef occurrence(std::string k) { return {Kind::occurrence, std::move(k)}; }
    static NodeRef scope(std::string id) { return {Kind::scope, std::move(id)}; }

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
    friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

// One directed relation arc. The scope field holds the owning scope id; a
// main-scope relation uses the sentence's reserved scope id (the sentence id).
struct RelationInstance {
    std::string label;
    NodeRef source;
    NodeRef target;
    std::string scope;

    friend bool operator==(const RelationInstance&, const RelationInstance&) = default;
    friend auto operator<=>(const RelationInstance&, const RelationInstance&) = default;
};

struct Occurrence {
    UwExpression expression;
    std::uint64_t counter = 0;
};

struct Sentence {
    std::string id;          // doubles as the main scope id and the URI local name
    bool explicit_id = true; // false when the id was auto-generated
    std::optional<std::string> original_text;
    std::string org_tag; // language tag of the {org} block, may be empty

    std::vector<std::string> occurrence_order; // first-appearance order of keys
    std::map<std::string, Occurrence> occurrences;
    std::vector<std::string> scope_order; // first-use order of inner scope ids
    std::map<std::string, std::uint64_t> scope_counters;
    std::vector<RelationInstance> relations;

    bool has_scope(const std::string& scope_id) const {
        return scope_id == id || scope_counters.count(scope_id) > 0;
    }

    const Occurrence* occurrence(const std::string& key) const {
        auto it = occurrences.find(key);
        return it == occurrences.end() ? nullptr : &it->second;
    }

    // Adds or merges an occurrence; attributes of repeated mentions are
    // unioned. Returns the occurrence key.
    std::string add_occurrence(const UwExpression& expr, std::uint64_t& next_counter);
    void add_scope(const std::string& scope_id, std::uint64_t& next_counter);
};

struct Paragraph {
    std::vector<Sentence> sentences;
};

// A parsed UNL document. Occurrence and scope counters are assigned at
// construction time from one shared sequence so serialized URIs are stable.
struct UnlDocument {
    bool explicit_structure = false; // true when [D]/[P] blocks were present
    std::vector<Paragraph> paragraphs;
    std::uint64_t counter_base = 1;
    std::uint64_t next_counter = 1;

    std::vector<const Sentence*> sentences() const;
    std::vector<Sentence*> sentences();
    const Sentence* find_sentence(const std::string& id) const;

    // Finds the sentence owning a scope id (the main scope id is the
    // sentence id itself).
    const Sentence* find_scope_owner(const std::string& scope_id) const;
};

// Structural document equality: ordered on paragraphs, sentences, occurrence
// and scope sequences; relation lists compare as multisets and attribute
// sets ignore order. Counters are compared unless ignore_counters is set.
bool structurally_equal(const UnlDocument& a, const UnlDocument& b,
                        bool ignore_counters = false);
bool structurally_equal(const Sentence& a, const Sentence& b, bool ignore_counters = false);

} // namespace unlrdf
