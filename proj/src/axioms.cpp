#include "unlrdf/axioms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "unlrdf/uri_codec.hpp"
#include "unlrdf/uw.hpp"

namespace unlrdf {

ExtractedAxiom ExtractedAxiom::make_cardinality(std::string subject, std::int64_t n) {
    ExtractedAxiom a;
    a.kind = Kind::cardinality;
    a.subject = std::move(subject);
    a.cardinality = n;
    return a;
}

ExtractedAxiom ExtractedAxiom::make_enumeration(std::string subject,
                                                std::vector<std::string> members) {
    ExtractedAxiom a;
    a.kind = Kind::enumeration;
    a.subject = std::move(subject);
    a.members = std::move(members);
    return a;
}

ExtractedAxiom ExtractedAxiom::make_datatype_property(std::string property, std::string domain,
                                                      std::string range) {
    ExtractedAxiom a;
    a.kind = Kind::datatype_property;
    a.subject = std::move(property);
    a.domain_iri = std::move(domain);
    a.range_iri = std::move(range);
    return a;
}

ExtractedAxiom ExtractedAxiom::make_class_decl(std::string subject) {
    ExtractedAxiom a;
    a.kind = Kind::class_decl;
    a.subject = std::move(subject);
    return a;
}

ExtractedAxiom ExtractedAxiom::make_datatype_decl(std::string subject) {
    ExtractedAxiom a;
    a.kind = Kind::datatype_decl;
    a.subject = std::move(subject);
    return a;
}

ExtractedAxiom ExtractedAxiom::make_assertion(std::string instance, std::string class_iri,
                                              std::string property, std::string value) {
    ExtractedAxiom a;
    a.kind = Kind::assertion;
    a.subject = std::move(instance);
    a.class_iri = std::move(class_iri);
    a.property_iri = std::move(property);
    a.value = std::move(value);
    return a;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out += "\"";
    return out;
}

} // namespace

std::string ExtractedAxiom::to_line() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::cardinality:
        out << "CARD " << subject << " " << cardinality;
        break;
    case Kind::enumeration: {
        out << "ENUM " << subject << " [";
        for (std::size_t i = 0; i < members.size(); ++i)
            out << (i ? "," : "") << quote(members[i]);
        out << "]";
        break;
    }
    case Kind::datatype_property:
        out << "DTPROP " << subject << " " << domain_iri << " " << range_iri;
        break;
    case Kind::class_decl:
        out << "CLASS " << subject;
        break;
    case Kind::datatype_decl:
        out << "DATATYPE " << subject;
        break;
    case Kind::assertion:
        out << "ASSERT " << subject << " " << class_iri;
        if (!property_iri.empty())
            out << " " << property_iri << " " << quote(value);
        break;
    }
    return out.str();
}

namespace {

struct ReifiedRelation {
    std::string iri;
    std::string source;
    std::string target;
    std::string scope; // may be empty when absent
};

std::optional<Term> reified_object(const QuadStore& store, const std::string& subject,
                                   const char* preferred, const char* variant) {
    if (auto term = store.object_of(subject, ns::unl_(preferred)))
        return term;
    return store.object_of(subject, ns::unl_(variant));
}

// All reified instances of one relation label, in store order.
std::vector<ReifiedRelation> reified_relations(const QuadStore& store, const char* label) {
    std::vector<ReifiedRelation> out;
    const Term type = Term::iri(ns::unl_(label));
    for (const auto& quad : store.quads()) {
        if (quad.predicate != ns::rdf_("type") || !(quad.object == type))
            continue;
        auto src = reified_object(store, quad.subject, "has_source", "source");
        auto tgt = reified_object(store, quad.subject, "has_target", "target");
        if (!src || !tgt || !src->is_iri() || !tgt->is_iri())
            continue; // the pattern simply does not match
        ReifiedRelation rel{quad.subject, src->value, tgt->value, {}};
        if (auto scope = store.object_of(quad.subject, ns::unl_("has_scope")))
            rel.scope = scope->value;
        out.push_back(std::move(rel));
    }
    return out;
}

std::optional<std::string> lexeme_of(const QuadStore& store, const std::string& occurrence) {
    auto lex = store.object_of(occurrence, ns::unl_("is_occurrence_of"));
    if (lex && lex->is_iri())
        return lex->value;
    return std::nullopt;
}

// rdfs:label of a node; falls back to decoding the URI local name.
std::optional<std::string> label_of(const QuadStore& store, const std::string& iri) {
    if (auto label = store.object_of(iri, ns::rdfs_("label")); label && label->is_literal())
        return label->value;
    std::size_t cut = iri.find_last_of("#/");
    std::string local = cut == std::string::npos ? iri : iri.substr(cut + 1);
    try {
        return to_text(decode_uri_local(local).expression, false, false);
    } catch (const DecodeError&) {
        return std::nullopt;
    }
}

std::optional<std::int64_t> parse_integer(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i >= text.size())
        return std::nullopt;
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            return std::nullopt;
    try {
        return std::stoll(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct PropertyMatch {
    std::string x, y, z; // copular occurrence, domain occurrence, range occurrence
    std::string x_lex, y_lex, z_lex;
    std::string scope;
};

std::vector<PropertyMatch> datatype_property_matches(const QuadStore& store) {
    std::vector<PropertyMatch> matches;
    auto aojs = reified_relations(store, "aoj");
    auto objs = reified_relations(store, "obj");
    for (const auto& aoj : aojs) {
        auto x_lex = lexeme_of(store, aoj.source);
        if (!x_lex)
            continue;
        auto x_label = label_of(store, *x_lex);
        if (!x_label || x_label->find("icl>be") == std::string::npos)
            continue;
        for (const auto& obj : objs) {
            if (obj.source != aoj.source || obj.scope != aoj.scope)
                continue;
            auto y_lex = lexeme_of(store, aoj.target);
            auto z_lex = lexeme_of(store, obj.target);
            if (!y_lex || !z_lex)
                continue;
            matches.push_back({aoj.source, aoj.target, obj.target, *x_lex, *y_lex, *z_lex,
                               aoj.scope});
        }
    }
    return matches;
}

void dedupe(std::vector<ExtractedAxiom>& axioms) {
    std::vector<ExtractedAxiom> out;
    for (auto& a : axioms)
        if (std::find(out.begin(), out.end(), a) == out.end())
            out.push_back(std::move(a));
    axioms = std::move(out);
}

} // namespace

RuleResult rule_cardinality(const QuadStore& store) {
    RuleResult result;
    for (const auto& qua : reified_relations(store, "qua")) {
        auto lex = lexeme_of(store, qua.source);
        if (!lex)
            continue;
        auto target_label = label_of(store, qua.target);
        if (!target_label)
            continue;
        auto n = parse_integer(*target_label);
        if (!n) {
            result.warnings.push_back("rule 1: target label \"" + *target_label + "\" of " +
                                      qua.iri + " is not an integer; skipped");
            continue;
        }
        result.axioms.push_back(ExtractedAxiom::make_cardinality(*lex, *n));
    }
    dedupe(result.axioms);
    return result;
}

RuleResult rule_enumeration(const QuadStore& store) {
    RuleResult result;

    // and-chain successor map, source occurrence -> targets
    std::map<std::string, std::vector<std::string>> and_next;
    for (const auto& rel : reified_relations(store, "and"))
        and_next[rel.source].push_back(rel.target);
    for (auto& [src, targets] : and_next)
        std::sort(targets.begin(), targets.end());

    for (const auto& cnt : reified_relations(store, "cnt")) {
        auto lex = lexeme_of(store, cnt.source);
        if (!lex)
            continue;
        auto lex_label = label_of(store, *lex);
        if (!lex_label || lex_label->find("icl>attribute") == std::string::npos)
            continue;

        std::vector<std::string> members;
        std::set<std::string> visited;
        std::string current = cnt.target;
        while (true) {
            if (!visited.insert(current).second)
                throw RuleError("rule 2: cyclic unl:and chain through " + current);
            auto label = label_of(store, current);
            if (!label)
                break;
            members.push_back(*label);
            auto it = and_next.find(current);
            if (it == and_next.end() || it->second.empty())
                break;
            current = it->second.front();
        }
        if (members.size() < 2)
            continue;
        result.axioms.push_back(ExtractedAxiom::make_enumeration(*lex, members));
        result.axioms.push_back(ExtractedAxiom::make_datatype_decl(*lex));
    }
    dedupe(result.axioms);
    return result;
}

RuleResult rule_datatype_property(const QuadStore& store) {
    RuleResult result;
    for (const auto& m : datatype_property_matches(store)) {
        result.axioms.push_back(
            ExtractedAxiom::make_datatype_property(m.x_lex, m.y_lex, m.z_lex));
        result.axioms.push_back(ExtractedAxiom::make_class_decl(m.y_lex));
        result.axioms.push_back(ExtractedAxiom::make_datatype_decl(m.z_lex));
        result.axioms.push_back(ExtractedAxiom::make_assertion(m.y, m.y_lex));
    }
    dedupe(result.axioms);
    return result;
}

RuleResult rule_instantiate_property(const QuadStore& store) {
    RuleResult result;
    auto mods = reified_relations(store, "mod");
    for (const auto& m : datatype_property_matches(store)) {
        for (const auto& mod : mods) {
            if (mod.source != m.z || mod.scope != m.scope)
                continue;
            auto w_lex = lexeme_of(store, mod.target);
            auto value = w_lex ? label_of(store, *w_lex) : label_of(store, mod.target);
            if (!value)
                continue;
            result.axioms.push_back(
                ExtractedAxiom::make_assertion(m.y, m.y_lex, m.x_lex, *value));
        }
    }
    dedupe(result.axioms);
    return result;
}

ExtractionResult run_all(const QuadStore& store) {
    ExtractionResult result;
    for (auto* rule : {&rule_cardinality, &rule_enumeration, &rule_datatype_property,
                       &rule_instantiate_property}) {
        RuleResult r = (*rule)(store);
        result.axioms.insert(result.axioms.end(), r.axioms.begin(), r.axioms.end());
        result.warnings.insert(result.warnings.end(), r.warnings.begin(), r.warnings.end());
    }
    dedupe(result.axioms);

    std::string base(ns::example);
    if (auto it = store.prefixes().find("example"); it != store.prefixes().end())
        base = it->second;
    result.constructed = materialize(result.axioms, base);
    return result;
}

QuadStore materialize(const std::vector<ExtractedAxiom>& axioms, const std::string& base) {
    QuadStore store;
    store.add_prefix("example", base);
    store.add_prefix("rdf", std::string(ns::rdf));
    store.add_prefix("rdfs", std::string(ns::rdfs));
    store.add_prefix("owl", std::string(ns::owl));
    store.add_prefix("xsd", std::string(ns::xsd));

    std::size_t skolem_count = 0;
    for (const auto& axiom : axioms) {
        switch (axiom.kind) {
        case ExtractedAxiom::Kind::cardinality:
            store.insert(axiom.subject, ns::owl_("cardinality"),
                         Term::integer(axiom.cardinality));
            break;
        case ExtractedAxiom::Kind::enumeration: {
            store.add_prefix("skolem", std::string(ns::skolem));
            char buf[32];
            std::snprintf(buf, sizeof(buf), "oneof_%08zu", ++skolem_count);
            std::string head = std::string(ns::skolem) + buf;
            store.insert(axiom.subject, ns::owl_("equivalentClass"), Term::iri(head));
            store.insert(head, ns::rdf_("type"), Term::iri(ns::rdfs_("Datatype")));
            std::vector<Term> items;
            for (const auto& member : axiom.members)
                items.push_back(Term::str(member));
            store.insert(head, ns::owl_("oneOf"), Term::list(std::move(items)));
            break;
        }
        case ExtractedAxiom::Kind::datatype_property:
            store.insert(axiom.subject, ns::rdf_("type"),
                         Term::iri(ns::owl_("DatatypeProperty")));
            store.insert(axiom.subject, ns::rdfs_("domain"), Term::iri(axiom.domain_iri));
            store.insert(axiom.subject, ns::rdfs_("range"), Term::iri(axiom.range_iri));
            break;
        case ExtractedAxiom::Kind::class_decl:
            store.insert(axiom.subject, ns::rdf_("type"), Term::iri(ns::owl_("Class")));
            break;
        case ExtractedAxiom::Kind::datatype_decl:
            store.insert(axiom.subject, ns::rdf_("type"), Term::iri(ns::rdfs_("Datatype")));
            break;
        case ExtractedAxiom::Kind::assertion:
            if (!axiom.class_iri.empty())
                store.insert(axiom.subject, ns::rdf_("type"), Term::iri(axiom.class_iri));
            if (!axiom.property_iri.empty())
                store.insert(axiom.subject, axiom.property_iri, Term::str(axiom.value));
            break;
        }
    }
    return store;
}

std::vector<ExtractedAxiom> axioms_from_store(const QuadStore& store) {
    std::vector<ExtractedAxiom> axioms;

    std::set<std::string> enum_heads;
    for (const auto& q : store.quads())
        if (q.predicate == ns::owl_("equivalentClass") && q.object.is_iri())
            enum_heads.insert(q.object.value);

    std::set<std::string> classes, datatype_properties;
    for (const auto& q : store.quads()) {
        if (q.predicate != ns::rdf_("type") || !q.object.is_iri())
            continue;
        if (q.object.value == ns::owl_("Class"))
            classes.insert(q.subject);
        else if (q.object.value == ns::owl_("DatatypeProperty"))
            datatype_properties.insert(q.subject);
    }

    for (const auto& q : store.quads()) {
        if (q.predicate == ns::owl_("cardinality") && q.object.is_literal()) {
            if (auto n = parse_integer(q.object.value))
                axioms.push_back(ExtractedAxiom::make_cardinality(q.subject, *n));
        } else if (q.predicate == ns::owl_("equivalentClass") && q.object.is_iri()) {
            auto one_of = store.object_of(q.object.value, ns::owl_("oneOf"));
            if (!one_of || !one_of->is_list())
                continue;
            std::vector<std::string> members;
            for (const auto& item : one_of->items)
                if (item.is_literal())
                    members.push_back(item.value);
            axioms.push_back(ExtractedAxiom::make_enumeration(q.subject, std::move(members)));
        } else if (q.predicate == ns::rdf_("type") && q.object.is_iri()) {
            const std::string& type = q.object.value;
            if (type == ns::owl_("DatatypeProperty")) {
                auto domains = store.objects_of(q.subject, ns::rdfs_("domain"));
                auto ranges = store.objects_of(q.subject, ns::rdfs_("range"));
                for (const auto& d : domains)
                    for (const auto& r : ranges)
                        if (d.is_iri() && r.is_iri())
                            axioms.push_back(ExtractedAxiom::make_datatype_property(
                                q.subject, d.value, r.value));
            } else if (type == ns::owl_("Class")) {
                axioms.push_back(ExtractedAxiom::make_class_decl(q.subject));
            } else if (type == ns::rdfs_("Datatype")) {
                if (enum_heads.count(q.subject) == 0)
                    axioms.push_back(ExtractedAxiom::make_datatype_decl(q.subject));
            } else if (classes.count(type) > 0) {
                axioms.push_back(ExtractedAxiom::make_assertion(q.subject, type));
            }
        } else if (q.object.is_literal() && datatype_properties.count(q.predicate) > 0) {
            std::string instance_class;
            for (const auto& t : store.objects_of(q.subject, ns::rdf_("type")))
                if (t.is_iri() && classes.count(t.value) > 0)
                    instance_class = t.value;
            axioms.push_back(ExtractedAxiom::make_assertion(q.subject, instance_class,
                                                            q.predicate, q.object.value));
        }
    }
    dedupe(axioms);
    return axioms;
}

std::string axioms_report(const std::vector<ExtractedAxiom>& axioms) {
    std::ostringstream out;
    for (const auto& axiom : axioms)
        out << axiom.to_line() << "\n";
    return out.str();
}

} // namespace unlrdf
