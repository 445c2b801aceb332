#include "unlrdf/rdf_unl.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "unlrdf/parser.hpp"
#include "unlrdf/uri_codec.hpp"

namespace unlrdf {

namespace {

std::string pad8(std::uint64_t n) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%08llu", static_cast<unsigned long long>(n));
    return buf;
}

// unl: properties that are never universal-relation predicates.
const std::set<std::string, std::less<>> reserved_properties = {
    "has_attribute", "has_source", "has_target", "has_scope", "source", "target",
    "has_lexeme", "is_occurrence_of", "has_occurrence", "is_substructure_of",
    "is_superstructure_of", "has_index", "has_master_definition", "has_id",
};

// unl: classes that are never universal-relation types.
const std::set<std::string, std::less<>> reserved_classes = {
    "UNL_Sentence", "UNL_Scope", "UW_Occurrence", "UW_Lexeme", "UNL_Document",
    "UNL_Paragraph", "UNLKB_Top_Concept", "UNL_Node", "UNLKB_Node", "UNL_Graph_Node",
    "Universal_Word", "Universal_Relation", "attribute",
};

bool in_namespace(const std::string& iri, std::string_view space) {
    return iri.size() > space.size() && iri.compare(0, space.size(), space) == 0;
}

std::string local_name(const std::string& iri, std::string_view space) {
    return iri.substr(space.size());
}

void register_common_prefixes(QuadStore& store, const std::string& base) {
    store.add_prefix("unl", std::string(ns::unl));
    store.add_prefix("example", base);
    store.add_prefix("rdf", std::string(ns::rdf));
    store.add_prefix("rdfs", std::string(ns::rdfs));
    store.add_prefix("owl", std::string(ns::owl));
    store.add_prefix("xsd", std::string(ns::xsd));
}

UwExpression strip_attributes(const UwExpression& expr) {
    UwExpression out = expr;
    out.attributes.clear();
    return out;
}

UwExpression strip_to_lexeme(const UwExpression& expr) {
    UwExpression out = strip_attributes(expr);
    out.instance_id.reset();
    return out;
}

// Short node form used inside reified relation URIs, e.g.
// be_in_a_state_00000013 (the counter keeps it unique without restrictions).
std::string short_local(const Sentence& sentence, const NodeRef& node) {
    if (node.kind == NodeRef::Kind::scope) {
        if (node.key == sentence.id)
            return escape_local_component(sentence.id);
        return "UNL_Scope_" + pad8(sentence.scope_counters.at(node.key));
    }
    const Occurrence& occ = *sentence.occurrence(node.key);
    return escape_local_component(occ.expression.headword) + "_" + pad8(occ.counter);
}

class ToRdf {
public:
    ToRdf(const UnlDocument& doc, ScopeMode mode, const RdfOptions& options)
        : doc_(doc), mode_(mode), options_(options) {}

    QuadStore run() {
        Vocabulary empty;
        const Vocabulary& vocab = options_.vocabulary ? *options_.vocabulary : empty;
        Strictness mode =
            options_.vocabulary ? options_.strictness : Strictness::lax;
        ValidationReport report = validate_document(doc_, vocab, mode);
        if (!report.ok())
            throw DocumentError("document is not valid: " +
                                report.violations.front().message);

        register_common_prefixes(store_, options_.base);
        if (doc_.explicit_structure)
            emit_structure();
        std::size_t ordinal = 0;
        for (const Sentence* sentence : doc_.sentences())
            emit_sentence(*sentence, ++ordinal);
        return std::move(store_);
    }

private:
    std::string node_iri(const Sentence& sentence, const NodeRef& node) const {
        if (node.kind == NodeRef::Kind::scope) {
            if (node.key == sentence.id)
                return sentence_iri(options_.base, sentence.id);
            return scope_iri(options_.base, sentence.scope_counters.at(node.key));
        }
        const Occurrence& occ = *sentence.occurrence(node.key);
        return occurrence_iri(options_.base, occ.expression, occ.counter);
    }

    void emit_structure() {
        std::string doc_iri = options_.base + "UNL_Document_00000001";
        store_.insert(doc_iri, ns::rdf_("type"), Term::iri(ns::unl_("UNL_Document")));
        for (std::size_t p = 0; p < doc_.paragraphs.size(); ++p) {
            std::string para_iri = options_.base + "UNL_Paragraph_" + pad8(p + 1);
            store_.insert(para_iri, ns::rdf_("type"), Term::iri(ns::unl_("UNL_Paragraph")));
            store_.insert(para_iri, ns::unl_("is_substructure_of"), Term::iri(doc_iri));
            store_.insert(doc_iri, ns::unl_("is_superstructure_of"), Term::iri(para_iri));
            store_.insert(para_iri, ns::unl_("has_index"),
                          Term::integer(static_cast<std::int64_t>(p + 1)));
            for (const Sentence& sentence : doc_.paragraphs[p].sentences) {
                std::string s_iri = sentence_iri(options_.base, sentence.id);
                store_.insert(s_iri, ns::unl_("is_substructure_of"), Term::iri(para_iri));
                store_.insert(para_iri, ns::unl_("is_superstructure_of"), Term::iri(s_iri));
            }
        }
    }

    void emit_sentence(const Sentence& sentence, std::size_t ordinal) {
        std::string s_iri = sentence_iri(options_.base, sentence.id);
        store_.insert(s_iri, ns::rdf_("type"), Term::iri(ns::unl_("UNL_Sentence")));
        if (sentence.original_text) {
            Term label = sentence.org_tag.empty()
                             ? Term::str(*sentence.original_text)
                             : Term::lang_str(*sentence.original_text, sentence.org_tag);
            store_.insert(s_iri, ns::rdfs_("label"), label);
        }
        if (doc_.explicit_structure) {
            // index within the owning paragraph
            for (const auto& para : doc_.paragraphs)
                for (std::size_t i = 0; i < para.sentences.size(); ++i)
                    if (&para.sentences[i] == &sentence)
                        store_.insert(s_iri, ns::unl_("has_index"),
                                      Term::integer(static_cast<std::int64_t>(i + 1)));
        } else {
            store_.insert(s_iri, ns::unl_("has_index"),
                          Term::integer(static_cast<std::int64_t>(ordinal)));
        }

        for (const auto& [scope_id, counter] : sentence.scope_counters) {
            std::string sc_iri = scope_iri(options_.base, counter);
            store_.insert(sc_iri, ns::rdf_("type"), Term::iri(ns::unl_("UNL_Scope")));
            store_.insert(sc_iri, ns::rdfs_("label"), Term::str(scope_id));
            store_.insert(sc_iri, ns::unl_("is_substructure_of"), Term::iri(s_iri));
        }

        for (const auto& key : sentence.occurrence_order) {
            const Occurrence& occ = *sentence.occurrence(key);
            std::string o_iri = occurrence_iri(options_.base, occ.expression, occ.counter);
            store_.insert(o_iri, ns::rdf_("type"), Term::iri(ns::unl_("UW_Occurrence")));
            store_.insert(o_iri, ns::rdfs_("label"),
                          Term::str(to_text(occ.expression, false, false)));
            store_.insert(o_iri, ns::unl_("is_substructure_of"), Term::iri(s_iri));
            store_.insert(o_iri, ns::unl_("is_occurrence_of"),
                          Term::iri(lexeme_iri(options_.base, occ.expression)));
            for (const auto& attr : occ.expression.attributes)
                store_.insert(o_iri, ns::unl_("has_attribute"), Term::str(".@" + attr));
        }

        std::set<std::string> used_relation_iris;
        for (const auto& rel : sentence.relations) {
            std::string src = node_iri(sentence, rel.source);
            std::string tgt = node_iri(sentence, rel.target);
            if (mode_ == ScopeMode::named_graphs) {
                std::string graph;
                if (rel.scope != sentence.id)
                    graph = scope_iri(options_.base, sentence.scope_counters.at(rel.scope));
                store_.insert(src, ns::unl_(escape_local_component(rel.label)),
                              Term::iri(tgt), graph);
            } else {
                std::string scope_res = rel.scope == sentence.id
                                            ? s_iri
                                            : scope_iri(options_.base,
                                                        sentence.scope_counters.at(rel.scope));
                std::string rel_local = short_local(sentence, rel.source) + "--" +
                                        escape_local_component(rel.label) + "--" +
                                        short_local(sentence, rel.target);
                std::string rel_iri = options_.base + rel_local;
                for (std::size_t n = 2; !used_relation_iris.insert(rel_iri).second; ++n)
                    rel_iri = options_.base + rel_local + "--" + std::to_string(n);
                store_.insert(rel_iri, ns::rdf_("type"),
                              Term::iri(ns::unl_(escape_local_component(rel.label))));
                store_.insert(rel_iri, ns::unl_("has_source"), Term::iri(src));
                store_.insert(rel_iri, ns::unl_("has_target"), Term::iri(tgt));
                store_.insert(rel_iri, ns::unl_("has_scope"), Term::iri(scope_res));
            }
        }
    }

    const UnlDocument& doc_;
    ScopeMode mode_;
    RdfOptions options_;
    QuadStore store_;
};

// -------------------------------------------------------------- from_rdf

struct NodeInfo {
    NodeRef ref;
    std::string sentence_iri;
};

class FromRdf {
public:
    explicit FromRdf(const QuadStore& store) : store_(store) {}

    UnlDocument run(std::string* base_out) {
        collect_sentences();
        if (sentence_iris_.empty() && !store_.empty() && has_unl_content())
            throw SchemaError("store has UNL content but no unl:UNL_Sentence resource");
        for (const auto& s_iri : sentence_iris_)
            build_sentence(s_iri);
        collect_relations();
        assemble();
        if (base_out)
            *base_out = base_;
        finish_counters();
        return std::move(doc_);
    }

private:
    bool has_unl_content() const {
        for (const auto& q : store_.quads())
            if (in_namespace(q.predicate, ns::unl))
                return true;
        return false;
    }

    static std::string iri_base(const std::string& iri) {
        std::size_t cut = iri.find_last_of("#/");
        return cut == std::string::npos ? std::string{} : iri.substr(0, cut + 1);
    }

    void collect_sentences() {
        for (const auto& q : store_.quads()) {
            if (q.predicate == ns::rdf_("type") && q.object == Term::iri(ns::unl_("UNL_Sentence")))
                sentence_iris_.push_back(q.subject);
        }
        std::sort(sentence_iris_.begin(), sentence_iris_.end());
        if (!sentence_iris_.empty())
            base_ = iri_base(sentence_iris_.front());
    }

    void build_sentence(const std::string& s_iri) {
        Sentence sentence;
        sentence.id = unescape_local_component(local_name(s_iri, iri_base(s_iri)));
        if (auto label = store_.object_of(s_iri, ns::rdfs_("label"));
            label && label->is_literal()) {
            sentence.original_text = label->value;
            sentence.org_tag = label->lang;
        }

        // scopes owned by this sentence
        std::vector<std::pair<std::uint64_t, std::pair<std::string, std::string>>> scopes;
        for (const auto& q : store_.quads()) {
            if (q.predicate != ns::rdf_("type") || !(q.object == Term::iri(ns::unl_("UNL_Scope"))))
                continue;
            auto owner = store_.object_of(q.subject, ns::unl_("is_substructure_of"));
            if (!owner || !(owner->value == s_iri))
                continue;
            std::string local = local_name(q.subject, iri_base(q.subject));
            if (local.rfind("UNL_Scope_", 0) != 0)
                throw SchemaError("scope resource with unexpected local name: " + q.subject);
            std::uint64_t counter = std::stoull(local.substr(10));
            auto label = store_.object_of(q.subject, ns::rdfs_("label"));
            if (!label || !label->is_literal())
                throw SchemaError("scope without rdfs:label: " + q.subject);
            scopes.push_back({counter, {label->value, q.subject}});
        }
        std::sort(scopes.begin(), scopes.end());
        for (const auto& [counter, id_iri] : scopes) {
            sentence.scope_order.push_back(id_iri.first);
            sentence.scope_counters[id_iri.first] = counter;
            nodes_[id_iri.second] = {NodeRef::scope(id_iri.first), s_iri};
        }

        // occurrences owned by this sentence
        std::vector<std::pair<std::uint64_t, std::pair<std::string, UwExpression>>> occs;
        for (const auto& q : store_.quads()) {
            if (q.predicate != ns::rdf_("type") ||
                !(q.object == Term::iri(ns::unl_("UW_Occurrence"))))
                continue;
            auto owner = store_.object_of(q.subject, ns::unl_("is_substructure_of"));
            if (!owner || !(owner->value == s_iri))
                continue;
            DecodedUri decoded;
            try {
                decoded = decode_uri_local(local_name(q.subject, iri_base(q.subject)));
            } catch (const DecodeError& e) {
                throw SchemaError(std::string("bad occurrence URI: ") + e.what());
            }
            if (!decoded.counter)
                throw SchemaError("occurrence URI without counter: " + q.subject);
            UwExpression expr = decoded.expression;
            for (const auto& attr : store_.objects_of(q.subject, ns::unl_("has_attribute"))) {
                std::string name = attr.value;
                if (name.rfind(".@", 0) == 0)
                    name = name.substr(2);
                expr.add_attribute(name);
            }
            occs.push_back({*decoded.counter, {q.subject, expr}});
        }
        std::sort(occs.begin(), occs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [counter, iri_expr] : occs) {
            Occurrence occ;
            occ.expression = iri_expr.second;
            occ.counter = counter;
            std::string key = occurrence_key(occ.expression);
            sentence.occurrence_order.push_back(key);
            sentence.occurrences.emplace(key, std::move(occ));
            nodes_[iri_expr.first] = {NodeRef::occurrence(key), s_iri};
        }

        nodes_[s_iri] = {NodeRef::scope(sentence.id), s_iri};
        sentences_.emplace(s_iri, std::move(sentence));
    }

    const NodeInfo& node_at(const std::string& iri) const {
        auto it = nodes_.find(iri);
        if (it == nodes_.end())
            throw SchemaError("node without a type triple: " + iri);
        return it->second;
    }

    std::optional<Term> reified_object(const std::string& subject, const char* preferred,
                                       const char* variant) const {
        if (auto term = store_.object_of(subject, ns::unl_(preferred)))
            return term;
        return store_.object_of(subject, ns::unl_(variant));
    }

    void collect_relations() {
        std::set<std::string> reified_scopes;
        std::set<std::string> graph_scopes;

        for (const auto& q : store_.quads()) {
            // reified relation instances
            if (q.predicate == ns::rdf_("type") && q.object.is_iri() &&
                in_namespace(q.object.value, ns::unl)) {
                std::string label = local_name(q.object.value, ns::unl);
                if (reserved_classes.count(label) > 0)
                    continue;
                auto src = reified_object(q.subject, "has_source", "source");
                auto tgt = reified_object(q.subject, "has_target", "target");
                auto scope = store_.object_of(q.subject, ns::unl_("has_scope"));
                if (!src)
                    throw SchemaError("reified relation without unl:has_source: " + q.subject);
                if (!tgt)
                    throw SchemaError("reified relation without unl:has_target: " + q.subject);
                if (!scope)
                    throw SchemaError("reified relation without unl:has_scope: " + q.subject);
                const NodeInfo& src_info = node_at(src->value);
                const NodeInfo& tgt_info = node_at(tgt->value);
                const NodeInfo& scope_info = node_at(scope->value);
                if (scope_info.ref.kind != NodeRef::Kind::scope)
                    throw SchemaError("unl:has_scope does not point at a scope: " + q.subject);
                RelationInstance rel;
                rel.label = unescape_local_component(label);
                rel.source = src_info.ref;
                rel.target = tgt_info.ref;
                rel.scope = scope_info.ref.key;
                relations_[scope_info.sentence_iri].push_back(std::move(rel));
                reified_scopes.insert(scope->value);
                continue;
            }
            // direct relation triples (named-graphs encoding)
            if (in_namespace(q.predicate, ns::unl)) {
                std::string label = local_name(q.predicate, ns::unl);
                if (reserved_properties.count(label) > 0)
                    continue;
                const NodeInfo& src_info = node_at(q.subject);
                if (!q.object.is_iri())
                    throw SchemaError("relation triple with a literal object: " + q.subject);
                const NodeInfo& tgt_info = node_at(q.object.value);
                RelationInstance rel;
                rel.label = unescape_local_component(label);
                rel.source = src_info.ref;
                rel.target = tgt_info.ref;
                std::string owning_sentence;
                if (q.graph.empty()) {
                    rel.scope = node_at(src_info.sentence_iri).ref.key;
                    owning_sentence = src_info.sentence_iri;
                    graph_scopes.insert(src_info.sentence_iri);
                } else {
                    const NodeInfo& scope_info = node_at(q.graph);
                    if (scope_info.ref.kind != NodeRef::Kind::scope)
                        throw SchemaError("graph name is not a scope: " + q.graph);
                    rel.scope = scope_info.ref.key;
                    owning_sentence = scope_info.sentence_iri;
                    graph_scopes.insert(q.graph);
                }
                relations_[owning_sentence].push_back(std::move(rel));
            }
        }

        for (const auto& iri : reified_scopes)
            if (graph_scopes.count(iri) > 0)
                throw AmbiguityError("scope encoded both reified and as graph/default triples: " +
                                     iri);
    }

    void assemble() {
        // order sentences by unl:has_index, then IRI
        std::vector<std::pair<std::int64_t, std::string>> order;
        for (const auto& s_iri : sentence_iris_) {
            std::int64_t index = 0;
            if (auto term = store_.object_of(s_iri, ns::unl_("has_index"));
                term && term->is_literal())
                index = std::stoll(term->value);
            order.push_back({index, s_iri});
        }
        std::sort(order.begin(), order.end());

        for (auto& [index, s_iri] : order) {
            Sentence& sentence = sentences_.at(s_iri);
            auto rels = relations_.find(s_iri);
            if (rels != relations_.end()) {
                std::sort(rels->second.begin(), rels->second.end());
                sentence.relations = std::move(rels->second);
            }
        }

        bool explicit_structure = false;
        std::map<std::string, std::pair<std::int64_t, std::vector<std::string>>> paragraphs;
        for (const auto& q : store_.quads()) {
            if (q.predicate == ns::rdf_("type") &&
                q.object == Term::iri(ns::unl_("UNL_Paragraph"))) {
                std::int64_t index = 0;
                if (auto term = store_.object_of(q.subject, ns::unl_("has_index"));
                    term && term->is_literal())
                    index = std::stoll(term->value);
                paragraphs[q.subject].first = index;
                explicit_structure = true;
            }
            if (q.predicate == ns::rdf_("type") &&
                q.object == Term::iri(ns::unl_("UNL_Document")))
                explicit_structure = true;
        }

        doc_.explicit_structure = explicit_structure;
        if (!explicit_structure) {
            Paragraph para;
            for (const auto& [index, s_iri] : order)
                para.sentences.push_back(std::move(sentences_.at(s_iri)));
            if (!para.sentences.empty() || !sentence_iris_.empty())
                doc_.paragraphs.push_back(std::move(para));
            return;
        }

        for (const auto& [index, s_iri] : order) {
            auto owner = store_.object_of(s_iri, ns::unl_("is_substructure_of"));
            if (!owner || paragraphs.count(owner->value) == 0)
                throw SchemaError("sentence without owning paragraph: " + s_iri);
            paragraphs[owner->value].second.push_back(s_iri);
        }
        std::vector<std::pair<std::int64_t, std::string>> para_order;
        for (const auto& [iri, entry] : paragraphs)
            para_order.push_back({entry.first, iri});
        std::sort(para_order.begin(), para_order.end());
        for (const auto& [index, p_iri] : para_order) {
            Paragraph para;
            for (const auto& s_iri : paragraphs[p_iri].second)
                para.sentences.push_back(std::move(sentences_.at(s_iri)));
            doc_.paragraphs.push_back(std::move(para));
        }
    }

    void finish_counters() {
        std::uint64_t min_counter = 0, max_counter = 0;
        bool any = false;
        for (const Sentence* s : doc_.sentences()) {
            for (const auto& key : s->occurrence_order) {
                std::uint64_t c = s->occurrence(key)->counter;
                min_counter = any ? std::min(min_counter, c) : c;
                max_counter = std::max(max_counter, c);
                any = true;
            }
            for (const auto& [id, c] : s->scope_counters) {
                min_counter = any ? std::min(min_counter, c) : c;
                max_counter = std::max(max_counter, c);
                any = true;
            }
        }
        doc_.counter_base = any ? min_counter : 1;
        doc_.next_counter = any ? max_counter + 1 : doc_.counter_base;
    }

    const QuadStore& store_;
    std::vector<std::string> sentence_iris_;
    std::map<std::string, Sentence> sentences_;           // keyed by sentence IRI
    std::map<std::string, std::vector<RelationInstance>> relations_;
    std::map<std::string, NodeInfo> nodes_;
    std::string base_ = std::string(ns::example);
    UnlDocument doc_;
};

// Splits a master definition "head{rel>UW,rel>UW}" into restriction triples.
struct MasterRestriction {
    std::string relation;
    UwExpression target;
};

std::vector<MasterRestriction> parse_master_definition(const std::string& text) {
    std::size_t open = text.find('{');
    std::size_t close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        return {};
    std::string body = text.substr(open + 1, close - open - 1);
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : body) {
        if (c == '(' || c == '{')
            ++depth;
        else if (c == ')' || c == '}')
            --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty())
        parts.push_back(current);

    std::vector<MasterRestriction> out;
    for (const auto& part : parts) {
        std::size_t arrow = part.find_first_of("><");
        if (arrow == std::string::npos || arrow == 0)
            return {}; // opaque master definition, fall back to the expression
        MasterRestriction r;
        r.relation = part.substr(0, arrow);
        try {
            r.target = parse_uw(part.substr(arrow + 1));
        } catch (const ParseError&) {
            return {};
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

std::string sentence_iri(const std::string& base, const std::string& sentence_id) {
    return base + escape_local_component(sentence_id);
}

std::string scope_iri(const std::string& base, std::uint64_t counter) {
    return base + "UNL_Scope_" + pad8(counter);
}

std::string occurrence_iri(const std::string& base, const UwExpression& expr,
                           std::uint64_t counter) {
    return base + encode_uri_local(strip_attributes(expr), counter);
}

std::string lexeme_iri(const std::string& base, const UwExpression& expr) {
    return base + encode_uri_local(strip_to_lexeme(expr));
}

QuadStore to_rdf(const UnlDocument& doc, ScopeMode mode, const RdfOptions& options) {
    return ToRdf(doc, mode, options).run();
}

UnlDocument from_rdf(const QuadStore& store) {
    return FromRdf(store).run(nullptr);
}

QuadStore convert_scope_mode(const QuadStore& store, ScopeMode target) {
    std::string base;
    UnlDocument doc = FromRdf(store).run(&base);
    RdfOptions options;
    options.base = base;
    return to_rdf(doc, target, options);
}

UwVolume parse_volume(const std::string& text, const std::string& name) {
    UwVolume volume;
    volume.name = name;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        if (auto pos = stripped.find_first_not_of(" \t\r"); pos == std::string::npos)
            continue;
        else
            stripped = stripped.substr(pos);
        if (stripped.empty() || stripped[0] == '#')
            continue;

        std::vector<std::string> columns;
        std::string current;
        for (char c : stripped) {
            if (c == '|') {
                columns.push_back(current);
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        columns.push_back(current);
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return std::string{};
            std::size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };

        UwLexeme lexeme;
        std::string expr_text = trim(columns[0]);
        try {
            lexeme.expression = parse_uw(expr_text);
        } catch (const ParseError& e) {
            throw VocabularyError(line_no, std::string("bad volume expression: ") + e.what());
        }
        if (lexeme.expression.instance_id || !lexeme.expression.attributes.empty())
            throw VocabularyError(line_no,
                                  "volume expression must not carry an instance id or attributes");
        if (columns.size() > 1)
            if (std::string def = trim(columns[1]); !def.empty())
                lexeme.master_definition = def;
        if (columns.size() > 2)
            if (std::string id = trim(columns[2]); !id.empty())
                lexeme.uw_id = id;
        lexeme.volume = name;
        volume.lexemes.emplace(lexeme_key(lexeme.expression), std::move(lexeme));
    }
    return volume;
}

UwVolume load_volume(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw VocabularyError(0, "cannot open volume file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_volume(buffer.str(), path.stem().string());
}

LinkSummary link_volume(QuadStore& store, const UwVolume& volume, const std::string& base) {
    LinkSummary summary;
    std::vector<std::pair<std::string, UwExpression>> occurrences;
    for (const auto& q : store.quads()) {
        if (q.predicate != ns::rdf_("type") || !(q.object == Term::iri(ns::unl_("UW_Occurrence"))))
            continue;
        std::size_t cut = q.subject.find_last_of("#/");
        std::string local =
            cut == std::string::npos ? q.subject : q.subject.substr(cut + 1);
        try {
            occurrences.push_back({q.subject, decode_uri_local(local).expression});
        } catch (const DecodeError&) {
            summary.unmatched.push_back(q.subject);
        }
    }

    for (const auto& [occ_iri, expr] : occurrences) {
        auto it = volume.lexemes.find(lexeme_key(expr));
        if (it == volume.lexemes.end()) {
            summary.unmatched.push_back(occ_iri);
            continue;
        }
        const UwLexeme& lexeme = it->second;
        std::string lex_iri = lexeme_iri(base, lexeme.expression);
        store.insert(lex_iri, ns::rdf_("type"), Term::iri(ns::unl_("UW_Lexeme")));
        store.insert(lex_iri, ns::rdf_("type"),
                     Term::iri(base + escape_local_component(volume.name)));
        store.insert(lex_iri, ns::rdfs_("label"),
                     Term::str(to_text(lexeme.expression, false, false)));
        if (lexeme.master_definition)
            store.insert(lex_iri, ns::unl_("has_master_definition"),
                         Term::str(*lexeme.master_definition));
        if (lexeme.uw_id)
            store.insert(lex_iri, ns::unl_("has_id"), Term::str(*lexeme.uw_id));
        store.insert(lex_iri, ns::unl_("has_occurrence"), Term::iri(occ_iri));
        store.insert(occ_iri, ns::unl_("is_occurrence_of"), Term::iri(lex_iri));

        auto master = lexeme.master_definition
                          ? parse_master_definition(*lexeme.master_definition)
                          : std::vector<MasterRestriction>{};
        if (!master.empty()) {
            for (const auto& r : master)
                store.insert(lex_iri, ns::unl_(escape_local_component(r.relation)),
                             Term::iri(lexeme_iri(base, r.target)));
        } else {
            for (const auto& r : lexeme.expression.restrictions) {
                // Chain abbreviation rel>a>b stands for a nested rel>b on a.
                UwExpression target;
                target.headword = r.targets.front();
                if (r.targets.size() > 1) {
                    Restriction nested;
                    nested.relation = r.relation;
                    nested.direction = '>';
                    nested.targets.assign(r.targets.begin() + 1, r.targets.end());
                    target.restrictions.push_back(std::move(nested));
                }
                store.insert(lex_iri, ns::unl_(escape_local_component(r.relation)),
                             Term::iri(lexeme_iri(base, target)));
            }
        }
        summary.matched.push_back(occ_iri);
    }
    std::sort(summary.matched.begin(), summary.matched.end());
    std::sort(summary.unmatched.begin(), summary.unmatched.end());
    return summary;
}

QuadStore emit_unlkb(const Unlkb& kb, const std::string& base, const Vocabulary* vocab,
                     Strictness strictness) {
    QuadStore store;
    register_common_prefixes(store, base);

    std::map<std::string, std::string> node_iris; // text key -> IRI
    for (const auto& lexeme : kb.lexemes) {
        std::string iri = lexeme_iri(base, lexeme.expression);
        node_iris[lexeme_key(lexeme.expression)] = iri;
        store.insert(iri, ns::rdf_("type"), Term::iri(ns::unl_("UW_Lexeme")));
        store.insert(iri, ns::rdfs_("label"), Term::str(to_text(lexeme.expression, false, false)));
        if (lexeme.master_definition)
            store.insert(iri, ns::unl_("has_master_definition"),
                         Term::str(*lexeme.master_definition));
        if (lexeme.uw_id)
            store.insert(iri, ns::unl_("has_id"), Term::str(*lexeme.uw_id));
    }
    for (const auto& top : kb.top_concepts) {
        std::string iri = base + escape_local_component(top);
        node_iris[top] = iri;
        store.insert(iri, ns::rdf_("type"), Term::iri(ns::unl_("UNLKB_Top_Concept")));
        store.insert(iri, ns::rdfs_("label"), Term::str(top));
    }

    auto resolve = [&](const std::string& key) -> std::string {
        auto it = node_iris.find(key);
        if (it != node_iris.end())
            return it->second;
        try {
            return lexeme_iri(base, parse_uw(key));
        } catch (const ParseError&) {
            return base + escape_local_component(key);
        }
    };

    for (const auto& edge : kb.edges) {
        if (vocab && strictness == Strictness::strict && !vocab->has_relation(edge.relation))
            throw DocumentError("unknown relation '" + edge.relation + "' in UNLKB edge");
        std::string predicate;
        if (edge.relation == "icl")
            predicate = ns::rdfs_("subClassOf");
        else if (edge.relation == "iof")
            predicate = ns::rdf_("type");
        else if (edge.relation == "equ")
            predicate = ns::owl_("sameAs");
        else
            predicate = ns::unl_(escape_local_component(edge.relation));
        store.insert(resolve(edge.source), predicate, Term::iri(resolve(edge.target)));
    }
    return store;
}

QuadStore emit_schema(const Vocabulary& vocab, bool include_attributes) {
    QuadStore store;
    store.add_prefix("unl", std::string(ns::unl));
    store.add_prefix("rdf", std::string(ns::rdf));
    store.add_prefix("rdfs", std::string(ns::rdfs));
    store.add_prefix("owl", std::string(ns::owl));
    store.add_prefix("skos", std::string(ns::skos));
    store.add_prefix("xsd", std::string(ns::xsd));

    auto klass = [&](const char* name) {
        store.insert(ns::unl_(name), ns::rdf_("type"), Term::iri(ns::owl_("Class")));
    };
    auto subclass = [&](const char* name, const char* parent) {
        store.insert(ns::unl_(name), ns::rdfs_("subClassOf"), Term::iri(ns::unl_(parent)));
    };

    // node taxonomy
    klass("UNL_Node");
    klass("UNLKB_Node");
    subclass("UNLKB_Node", "UNL_Node");
    klass("UNL_Graph_Node");
    subclass("UNL_Graph_Node", "UNL_Node");
    klass("Universal_Word");
    klass("UW_Lexeme");
    subclass("UW_Lexeme", "Universal_Word");
    subclass("UW_Lexeme", "UNLKB_Node");
    klass("UNLKB_Top_Concept");
    subclass("UNLKB_Top_Concept", "Universal_Word");
    subclass("UNLKB_Top_Concept", "UNLKB_Node");
    klass("UW_Occurrence");
    subclass("UW_Occurrence", "Universal_Word");
    subclass("UW_Occurrence", "UNL_Graph_Node");
    klass("UNL_Scope");
    subclass("UNL_Scope", "UNL_Graph_Node");
    klass("UNL_Document");
    klass("UNL_Paragraph");
    klass("UNL_Sentence");

    // structural and linking properties
    auto object_property = [&](const char* name) {
        store.insert(ns::unl_(name), ns::rdf_("type"), Term::iri(ns::owl_("ObjectProperty")));
    };
    object_property("is_substructure_of");
    object_property("is_superstructure_of");
    store.insert(ns::unl_("is_substructure_of"), ns::owl_("inverseOf"),
                 Term::iri(ns::unl_("is_superstructure_of")));
    object_property("has_occurrence");
    object_property("is_occurrence_of");
    store.insert(ns::unl_("has_occurrence"), ns::owl_("inverseOf"),
                 Term::iri(ns::unl_("is_occurrence_of")));
    object_property("has_source");
    object_property("has_target");
    object_property("has_scope");
    store.insert(ns::unl_("has_id"), ns::rdf_("type"),
                 Term::iri(ns::owl_("AnnotationProperty")));
    store.insert(ns::unl_("has_master_definition"), ns::rdf_("type"),
                 Term::iri(ns::owl_("AnnotationProperty")));

    // the relation hierarchy root
    std::string root = ns::unl_(Vocabulary::root_label);
    store.insert(root, ns::rdf_("type"), Term::iri(ns::owl_("Class")));
    store.insert(root, ns::rdf_("type"), Term::iri(ns::owl_("ObjectProperty")));
    store.insert(root, ns::rdfs_("label"), Term::str(Vocabulary::root_label));
    store.insert(root, ns::rdfs_("subPropertyOf"), Term::iri(ns::skos_("semanticRelation")));
    store.insert(root, ns::rdfs_("domain"), Term::iri(ns::unl_("UNL_Node")));
    store.insert(root, ns::rdfs_("range"), Term::iri(ns::unl_("UNL_Node")));

    for (const auto& [label, def] : vocab.relations()) {
        std::string iri = ns::unl_(escape_local_component(label));
        store.insert(iri, ns::rdf_("type"), Term::iri(ns::owl_("Class")));
        store.insert(iri, ns::rdf_("type"), Term::iri(ns::owl_("ObjectProperty")));
        store.insert(iri, ns::rdfs_("label"), Term::str(label));
        for (const auto& parent : def.parents)
            store.insert(iri, ns::rdfs_("subPropertyOf"),
                         Term::iri(ns::unl_(escape_local_component(parent))));
        store.insert(iri, ns::rdfs_("domain"), Term::iri(ns::unl_("UNL_Node")));
        store.insert(iri, ns::rdfs_("range"), Term::iri(ns::unl_("UNL_Node")));
        if (!def.alt_label.empty())
            store.insert(iri, ns::skos_("altLabel"), Term::lang_str(def.alt_label, "en"));
        if (!def.definition.empty())
            store.insert(iri, ns::skos_("definition"), Term::lang_str(def.definition, "en"));
        if (!def.example.empty())
            store.insert(iri, ns::skos_("example"), Term::lang_str(def.example, "en"));
    }

    if (include_attributes) {
        std::string attr = ns::unl_("attribute");
        store.insert(attr, ns::rdf_("type"), Term::iri(ns::rdfs_("Datatype")));
        store.insert(attr, ns::rdfs_("label"), Term::str("Universal Attribute"));
        std::string enum_node = std::string(ns::skolem) + "attribute_oneof_00000001";
        store.add_prefix("skolem", std::string(ns::skolem));
        store.insert(attr, ns::owl_("equivalentClass"), Term::iri(enum_node));
        store.insert(enum_node, ns::rdf_("type"), Term::iri(ns::rdfs_("Datatype")));
        std::vector<Term> items;
        for (const auto& name : vocab.attribute_order())
            items.push_back(Term::str(".@" + name));
        store.insert(enum_node, ns::owl_("oneOf"), Term::list(std::move(items)));

        std::string has_attr = ns::unl_("has_attribute");
        store.insert(has_attr, ns::rdf_("type"), Term::iri(ns::owl_("DatatypeProperty")));
        store.insert(has_attr, ns::rdfs_("domain"), Term::iri(ns::unl_("UNL_Node")));
        store.insert(has_attr, ns::rdfs_("range"), Term::iri(attr));
    }
    return store;
}

} // namespace unlrdf
