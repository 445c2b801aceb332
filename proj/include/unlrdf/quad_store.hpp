#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "unlrdf/term.hpp"

namespace unlrdf {

// A pattern slot: a concrete term, a named variable, or a wildcard.
struct PatternTerm {
    enum class Kind { term, variable, any };
    Kind kind = Kind::any;
    Term term;
    std::string var;

    static PatternTerm of(Term t) { return {Kind::term, std::move(t), {}}; }
    static PatternTerm iri(std::string text) { return of(Term::iri(std::move(text))); }
    static PatternTerm variable(std::string name) { return {Kind::variable, {}, std::move(name)}; }
    static PatternTerm any() { return {}; }
    // The default graph is addressed as an empty IRI.
    static PatternTerm default_graph() { return of(Term::iri("")); }
};

struct QuadPattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;
    PatternTerm graph;
};

using Binding = std::map<std::string, Term>;

// Minimal in-memory quad set with set semantics, prefix bookkeeping for
// emission, and conjunctive pattern matching.
class QuadStore {
public:
    QuadStore();

    void insert(Quad quad) { quads_.insert(std::move(quad)); }
    void insert(std::string subject, std::string predicate, Term object,
                std::string graph = {}) {
        quads_.insert({std::move(subject), std::move(predicate), std::move(object),
                       std::move(graph)});
    }

    bool contains(const Quad& quad) const { return quads_.count(quad) > 0; }
    std::size_t size() const { return quads_.size(); }
    bool empty() const { return quads_.empty(); }
    const std::set<Quad>& quads() const { return quads_; }

    void merge(const QuadStore& other);

    void add_prefix(std::string prefix, std::string iri) {
        prefixes_[std::move(prefix)] = std::move(iri);
    }
    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

    bool has_named_graphs() const;

    // All bindings unifying the pattern with some quad, sorted by binding
    // content. A quad's graph binds as an IRI term (empty = default graph).
    std::vector<Binding> match(const QuadPattern& pattern) const;

    // Conjunctive match: variables bind consistently across all patterns.
    std::vector<Binding> match_all(std::span<const QuadPattern> patterns) const;

    // Convenience lookups over the default shape of the data.
    std::optional<Term> object_of(const std::string& subject,
                                  const std::string& predicate) const;
    std::vector<Term> objects_of(const std::string& subject,
                                 const std::string& predicate) const;
    std::vector<std::string> subjects_with(const std::string& predicate,
                                           const Term& object) const;

private:
    std::set<Quad> quads_;
    std::map<std::string, std::string> prefixes_;
};

// Quad-set equality; prefixes and their spellings are irrelevant because
// stored IRIs are always absolute.
bool canonical_equal(const QuadStore& a, const QuadStore& b);

} // namespace unlrdf
