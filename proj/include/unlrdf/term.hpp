#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "unlrdf/ns.hpp"

namespace unlrdf {

// An RDF term in object position: an IRI, a literal, or an RDF collection
// modelled as a first-class ordered list (avoids blank-node plumbing for
// owl:oneOf lists).
struct Term {
    enum class Kind { iri, literal, list };

    Kind kind = Kind::iri;
    std::string value;    // IRI text (absolute) or literal lexical form
    std::string datatype; // literal datatype IRI
    std::string lang;     // literal language tag; overrides datatype
    std::vector<Term> items;

    static Term iri(std::string text) {
        Term t;
        t.kind = Kind::iri;
        t.value = std::move(text);
        return t;
    }

    static Term str(std::string lexical) {
        Term t;
        t.kind = Kind::literal;
        t.value = std::move(lexical);
        t.datatype = ns::xsd_("string");
        return t;
    }

    static Term lang_str(std::string lexical, std::string lang) {
        Term t = str(std::move(lexical));
        t.lang = std::move(lang);
        return t;
    }

    static Term integer(std::int64_t n) {
        Term t;
        t.kind = Kind::literal;
        t.value = std::to_string(n);
        t.datatype = ns::xsd_("integer");
        return t;
    }

    static Term typed(std::string lexical, std::string datatype) {
        Term t;
        t.kind = Kind::literal;
        t.value = std::move(lexical);
        t.datatype = std::move(datatype);
        return t;
    }

    static Term list(std::vector<Term> items) {
        Term t;
        t.kind = Kind::list;
        t.items = std::move(items);
        return t;
    }

    bool is_iri() const { return kind == Kind::iri; }
    bool is_literal() const { return kind == Kind::literal; }
    bool is_list() const { return kind == Kind::list; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.kind == b.kind && a.value == b.value && a.datatype == b.datatype &&
               a.lang == b.lang && a.items == b.items;
    }

    friend bool operator<(const Term& a, const Term& b) {
        auto key = [](const Term& t) { return std::tie(t.kind, t.value, t.datatype, t.lang); };
        if (key(a) != key(b))
            return key(a) < key(b);
        return a.items < b.items;
    }
};

struct Quad {
    std::string subject;
    std::string predicate;
    Term object;
    std::string graph; // empty = default graph

    friend bool operator==(const Quad&, const Quad&) = default;

    friend bool operator<(const Quad& a, const Quad& b) {
        auto key = [](const Quad& q) { return std::tie(q.graph, q.subject, q.predicate); };
        if (key(a) != key(b))
            return key(a) < key(b);
        return a.object < b.object;
    }
};

} // namespace unlrdf
