#include "unlrdf/quad_store.hpp"

#include <algorithm>
#include <sstream>

namespace unlrdf {

QuadStore::QuadStore() {
    prefixes_["unl"] = std::string(ns::unl);
}

void QuadStore::merge(const QuadStore& other) {
    for (const auto& q : other.quads())
        quads_.insert(q);
    for (const auto& [prefix, iri] : other.prefixes())
        prefixes_.emplace(prefix, iri);
}

bool QuadStore::has_named_graphs() const {
    return std::any_of(quads_.begin(), quads_.end(),
                       [](const Quad& q) { return !q.graph.empty(); });
}

namespace {

bool unify(const PatternTerm& pattern, const Term& term, Binding& binding) {
    switch (pattern.kind) {
    case PatternTerm::Kind::any:
        return true;
    case PatternTerm::Kind::term:
        return pattern.term == term;
    case PatternTerm::Kind::variable: {
        auto it = binding.find(pattern.var);
        if (it != binding.end())
            return it->second == term;
        binding.emplace(pattern.var, term);
        return true;
    }
    }
    return false;
}

bool unify_quad(const QuadPattern& pattern, const Quad& quad, Binding& binding) {
    return unify(pattern.subject, Term::iri(quad.subject), binding) &&
           unify(pattern.predicate, Term::iri(quad.predicate), binding) &&
           unify(pattern.object, quad.object, binding) &&
           unify(pattern.graph, Term::iri(quad.graph), binding);
}

std::string binding_key(const Binding& binding) {
    std::ostringstream out;
    for (const auto& [name, term] : binding) {
        out << name << '=' << static_cast<int>(term.kind) << ':' << term.value << '@'
            << term.lang << '^' << term.datatype << ';';
        for (const auto& item : term.items)
            out << item.value << '|';
    }
    return out.str();
}

void sort_bindings(std::vector<Binding>& bindings) {
    std::sort(bindings.begin(), bindings.end(),
              [](const Binding& a, const Binding& b) { return binding_key(a) < binding_key(b); });
    bindings.erase(std::unique(bindings.begin(), bindings.end()), bindings.end());
}

} // namespace

std::vector<Binding> QuadStore::match(const QuadPattern& pattern) const {
    std::vector<Binding> out;
    for (const auto& quad : quads_) {
        Binding binding;
        if (unify_quad(pattern, quad, binding))
            out.push_back(std::move(binding));
    }
    sort_bindings(out);
    return out;
}

std::vector<Binding> QuadStore::match_all(std::span<const QuadPattern> patterns) const {
    std::vector<Binding> results;
    Binding current;

    auto descend = [&](auto&& self, std::size_t index) -> void {
        if (index == patterns.size()) {
            results.push_back(current);
            return;
        }
        for (const auto& quad : quads_) {
            Binding saved = current;
            if (unify_quad(patterns[index], quad, current))
                self(self, index + 1);
            current = std::move(saved);
        }
    };
    descend(descend, 0);
    sort_bindings(results);
    return results;
}

std::optional<Term> QuadStore::object_of(const std::string& subject,
                                         const std::string& predicate) const {
    for (const auto& q : quads_)
        if (q.subject == subject && q.predicate == predicate)
            return q.object;
    return std::nullopt;
}

std::vector<Term> QuadStore::objects_of(const std::string& subject,
                                        const std::string& predicate) const {
    std::vector<Term> out;
    for (const auto& q : quads_)
        if (q.subject == subject && q.predicate == predicate)
            out.push_back(q.object);
    return out;
}

std::vector<std::string> QuadStore::subjects_with(const std::string& predicate,
                                                  const Term& object) const {
    std::vector<std::string> out;
    for (const auto& q : quads_)
        if (q.predicate == predicate && q.object == object)
            out.push_back(q.subject);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool canonical_equal(const QuadStore& a, const QuadStore& b) {
    return a.quads() == b.quads();
}

} // namespace unlrdf
