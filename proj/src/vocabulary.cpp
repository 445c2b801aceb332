#include "unlrdf/vocabulary.hpp"

#include <fstream>
#include <sstream>

namespace unlrdf {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    std::size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_columns(const std::string& line) {
    std::vector<std::string> columns;
    std::string current;
    for (char c : line) {
        if (c == '|') {
            columns.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    columns.push_back(trim(current));
    return columns;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (std::string t = trim(current); !t.empty())
                items.push_back(t);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (std::string t = trim(current); !t.empty())
        items.push_back(t);
    return items;
}

} // namespace

void Vocabulary::add_relation(const std::string& label, RelationDef def) {
    if (def.parents.empty())
        def.parents.push_back(root_label);
    relations_[label] = std::move(def);
}

void Vocabulary::add_attribute(const std::string& name, AttributeDef def) {
    if (attributes_.emplace(name, std::move(def)).second)
        attribute_order_.push_back(name);
}

const RelationDef* Vocabulary::relation(const std::string& label) const {
    auto it = relations_.find(label);
    return it == relations_.end() ? nullptr : &it->second;
}

const AttributeDef* Vocabulary::attribute(const std::string& name) const {
    auto it = attributes_.find(name);
    return it == attributes_.end() ? nullptr : &it->second;
}

std::set<std::string> Vocabulary::ancestors(const std::string& label) const {
    std::set<std::string> closure;
    std::vector<std::string> pending{label};
    while (!pending.empty()) {
        std::string current = std::move(pending.back());
        pending.pop_back();
        auto it = relations_.find(current);
        if (it == relations_.end())
            continue;
        for (const auto& parent : it->second.parents)
            if (closure.insert(parent).second)
                pending.push_back(parent);
    }
    return closure;
}

void Vocabulary::verify_hierarchy() const {
    enum class Mark { unseen, visiting, done };
    std::map<std::string, Mark> marks;
    std::vector<std::string> stack;

    auto visit = [&](auto&& self, const std::string& label) -> void {
        if (label == root_label)
            return;
        auto it = relations_.find(label);
        if (it == relations_.end())
            throw VocabularyError(0, "unknown parent relation '" + label + "'");
        Mark& mark = marks[label];
        if (mark == Mark::done)
            return;
        if (mark == Mark::visiting) {
            std::string cycle;
            for (const auto& s : stack)
                cycle += s + " -> ";
            throw VocabularyError(0, "cycle in relation hierarchy: " + cycle + label);
        }
        mark = Mark::visiting;
        stack.push_back(label);
        for (const auto& parent : it->second.parents)
            self(self, parent);
        stack.pop_back();
        mark = Mark::done;
    };

    for (const auto& [label, def] : relations_)
        visit(visit, label);
}

Vocabulary parse_vocabulary(const std::string& text) {
    Vocabulary vocab;
    enum class Section { none, relations, attributes };
    Section section = Section::none;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        if (stripped == "[relations]") {
            section = Section::relations;
            continue;
        }
        if (stripped == "[attributes]") {
            section = Section::attributes;
            continue;
        }
        if (stripped[0] == '[')
            throw VocabularyError(line_no, "unknown section " + stripped);
        if (section == Section::none)
            throw VocabularyError(line_no, "entry before any section header");

        auto columns = split_columns(stripped);
        const std::string& label = columns[0];
        if (label.empty())
            throw VocabularyError(line_no, "missing label");

        if (section == Section::relations) {
            if (vocab.has_relation(label))
                throw VocabularyError(line_no, "duplicate relation '" + label + "'");
            RelationDef def;
            if (columns.size() > 1)
                def.parents = split_list(columns[1]);
            if (columns.size() > 2)
                def.alt_label = columns[2];
            if (columns.size() > 3)
                def.definition = columns[3];
            if (columns.size() > 4)
                def.example = columns[4];
            vocab.add_relation(label, std::move(def));
        } else {
            if (vocab.has_attribute(label))
                throw VocabularyError(line_no, "duplicate attribute '" + label + "'");
            AttributeDef def;
            if (columns.size() > 1)
                def.parent = columns[1];
            if (columns.size() > 2)
                def.definition = columns[2];
            vocab.add_attribute(label, std::move(def));
        }
    }

    vocab.verify_hierarchy();
    return vocab;
}

Vocabulary load_vocabulary(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw VocabularyError(0, "cannot open vocabulary file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_vocabulary(buffer.str());
}

} // namespace unlrdf
