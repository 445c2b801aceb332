#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace unlrdf {

class VocabularyError : public std::runtime_error {
public:
    VocabularyError(std::size_t line, const std::string& message)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

struct RelationDef {
    std::vector<std::string> parents; // defaults to {Universal_Relation}
    std::string alt_label;
    std::string definition;
    std::string example;
};

struct AttributeDef {
    std::string parent;
    std::string definition;
};

// Registry of universal relations (hierarchical, rooted at
// Universal_Relation) and universal attributes, loaded from a data file.
class Vocabulary {
public:
    static constexpr const char* root_label = "Universal_Relation";

    void add_relation(const std::string& label, RelationDef def);
    void add_attribute(const std::string& name, AttributeDef def);

    bool has_relation(const std::string& label) const { return relations_.count(label) > 0; }
    bool has_attribute(const std::string& name) const { return attributes_.count(name) > 0; }

    const RelationDef* relation(const std::string& label) const;
    const AttributeDef* attribute(const std::string& name) const;

    std::size_t relation_count() const { return relations_.size(); }
    std::size_t attribute_count() const { return attribute_order_.size(); }

    const std::map<std::string, RelationDef>& relations() const { return relations_; }
    const std::vector<std::string>& attribute_order() const { return attribute_order_; }

    // Ancestor closure through the parent hierarchy; always contains the root
    // for a well-formed vocabulary.
    std::set<std::string> ancestors(const std::string& label) const;

    // Throws VocabularyError on a cycle or an unknown parent.
    void verify_hierarchy() const;

private:
    std::map<std::string, RelationDef> relations_;
    std::map<std::string, AttributeDef> attributes_;
    std::vector<std::string> attribute_order_; // file order, drives owl:oneOf
};

// Loads the two-section vocabulary file ([relations] / [attributes],
// pipe-separated columns, '#' comments). Throws VocabularyError with the
// offending line on parse errors, duplicates, cycles and unknown parents.
Vocabulary load_vocabulary(const std::filesystem::path& path);
Vocabulary parse_vocabulary(const std::string& text);

} // namespace unlrdf
