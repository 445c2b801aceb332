#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace unlrdf {

// One restriction inside a Universal Word, e.g. the "icl>show>thing" of
// play(icl>show>thing). The target chain keeps the abbreviated form as a
// chain of headwords.
struct Restriction {
    std::string relation;
    char direction = '>'; // '>' outgoing, '<' incoming
    std::vector<std::string> targets; // length >= 1

    friend bool operator==(const Restriction&, const Restriction&) = default;
};

// A Universal Word expression: headword, restrictions, optional instance id
// ("cat(icl>mammal):01") and attributes (".@entry", stored without ".@").
struct UwExpression {
    std::string headword;
    std::vector<Restriction> restrictions;
    std::optional<std::string> instance_id;
    std::vector<std::string> attributes; // insertion-ordered, no duplicates

    bool has_attribute(std::string_view name) const {
        return std::find(attributes.begin(), attributes.end(), name) != attributes.end();
    }

    void add_attribute(const std::string& name) {
        if (!has_attribute(name))
            attributes.push_back(name);
    }

    // Attribute order carries no meaning; two expressions are equal when the
    // attribute sets coincide.
    friend bool operator==(const UwExpression& a, const UwExpression& b) {
        if (a.headword != b.headword || a.restrictions != b.restrictions ||
            a.instance_id != b.instance_id)
            return false;
        auto sa = a.attributes;
        auto sb = b.attributes;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa == sb;
    }
};

// Renders the expression in UNL text notation. Characters that collide with
// the notation are backslash-escaped so parse(text(x)) == x.
std::string to_text(const UwExpression& expr, bool with_instance = true,
                    bool with_attributes = true);

// Canonical identity of an occurrence within a sentence: headword,
// restrictions and instance id; attributes are merged across mentions.
std::string occurrence_key(const UwExpression& expr);

// Same identity without the instance id; keys lexeme lookups.
std::string lexeme_key(const UwExpression& expr);

// A dictionary-side UW: the expression (no instance id, no attributes), its
// master definition and volume bookkeeping.
struct UwLexeme {
    UwExpression expression;
    std::optional<std::string> master_definition;
    std::optional<std::string> uw_id;
    std::optional<std::string> volume;

    friend bool operator==(const UwLexeme&, const UwLexeme&) = default;
};

} // namespace unlrdf
