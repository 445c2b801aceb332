#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "unlrdf/turtle.hpp"

using namespace unlrdf;

namespace {

const std::string ex = "https://unl.tetras-libre.fr/rdf/example#";

Quad quad(const std::string& s, const std::string& p, Term o, const std::string& g = {}) {
    return {ex + s, ex + p, std::move(o), g.empty() ? "" : ex + g};
}

// independent conjunctive-match oracle: per-pattern candidates, cross
// product, then consistency filtering
std::set<Binding> nested_loop_oracle(const QuadStore& store,
                                     const std::vector<QuadPattern>& patterns) {
    auto unify_one = [](const PatternTerm& pattern, const Term& term,
                        Binding& binding) -> bool {
        if (pattern.kind == PatternTerm::Kind::any)
            return true;
        if (pattern.kind == PatternTerm::Kind::term)
            return pattern.term == term;
        auto it = binding.find(pattern.var);
        if (it != binding.end())
            return it->second == term;
        binding.emplace(pattern.var, term);
        return true;
    };

    std::vector<std::vector<Quad>> candidates(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i)
        for (const auto& q : store.quads()) {
            Binding scratch;
            if (unify_one(patterns[i].subject, Term::iri(q.subject), scratch) &&
                unify_one(patterns[i].predicate, Term::iri(q.predicate), scratch) &&
                unify_one(patterns[i].object, q.object, scratch) &&
                unify_one(patterns[i].graph, Term::iri(q.graph), scratch))
                candidates[i].push_back(q);
        }

    std::set<Binding> results;
    std::vector<std::size_t> index(patterns.size(), 0);
    if (patterns.empty())
        return {Binding{}};
    for (const auto& c : candidates)
        if (c.empty())
            return results;
    while (true) {
        Binding binding;
        bool ok = true;
        for (std::size_t i = 0; ok && i < patterns.size(); ++i) {
            const Quad& q = candidates[i][index[i]];
            ok = unify_one(patterns[i].subject, Term::iri(q.subject), binding) &&
                 unify_one(patterns[i].predicate, Term::iri(q.predicate), binding) &&
                 unify_one(patterns[i].object, q.object, binding) &&
                 unify_one(patterns[i].graph, Term::iri(q.graph), binding);
        }
        if (ok)
            results.insert(binding);
        std::size_t pos = 0;
        while (pos < patterns.size() && ++index[pos] == candidates[pos].size()) {
            index[pos] = 0;
            ++pos;
        }
        if (pos == patterns.size())
            break;
    }
    return results;
}

} // namespace

TEST_CASE("insert has set semantics") {
    QuadStore store;
    Quad q = quad("s", "p", Term::iri(ex + "o"));
    store.insert(q);
    store.insert(q);
    CHECK(store.size() == 1);

    Quad in_graph = q;
    in_graph.graph = ex + "g";
    store.insert(in_graph);
    CHECK(store.size() == 2);
    CHECK(store.contains(q));
    CHECK(store.contains(in_graph));
}

TEST_CASE("membership of 10k random quads agrees with a linear scan") {
    gen::Rng rng(0x5EED);
    QuadStore store;
    std::vector<Quad> inserted;
    for (int i = 0; i < 10000; ++i) {
        Quad q = quad("s" + std::to_string(rng.below(80)), "p" + std::to_string(rng.below(10)),
                      Term::integer(static_cast<std::int64_t>(rng.below(50))),
                      rng.coin(0.2) ? "g" + std::to_string(rng.below(3)) : "");
        store.insert(q);
        inserted.push_back(q);
    }
    for (const auto& q : inserted) {
        bool linear = false;
        for (const auto& other : store.quads())
            if (other == q)
                linear = true;
        REQUIRE(linear);
        REQUIRE(store.contains(q));
    }
}

TEST_CASE("match binds variables and no-variable patterns are membership") {
    QuadStore store;
    store.insert(quad("rel1", "t", Term::iri(ex + "qua")));
    store.insert(quad("rel2", "t", Term::iri(ex + "agt")));

    QuadPattern pattern{PatternTerm::variable("x"), PatternTerm::iri(ex + "t"),
                        PatternTerm::of(Term::iri(ex + "qua")), PatternTerm::default_graph()};
    auto bindings = store.match(pattern);
    REQUIRE(bindings.size() == 1);
    CHECK(bindings[0].at("x").value == ex + "rel1");

    QuadPattern ground{PatternTerm::iri(ex + "rel2"), PatternTerm::iri(ex + "t"),
                       PatternTerm::of(Term::iri(ex + "agt")), PatternTerm::default_graph()};
    CHECK(store.match(ground).size() == 1);
    ground.subject = PatternTerm::iri(ex + "nope");
    CHECK(store.match(ground).empty());
}

TEST_CASE("match_all equals the nested-loop oracle on random stores") {
    gen::Rng rng(0x1234);
    for (int round = 0; round < 100; ++round) {
        QuadStore store = gen::quad_store(rng, /*with_graphs=*/true);

        auto pattern_term = [&](int which) -> PatternTerm {
            switch (rng.below(3)) {
            case 0:
                return PatternTerm::variable("v" + std::to_string(rng.below(3)));
            case 1:
                return PatternTerm::any();
            default:
                if (which == 2)
                    return PatternTerm::of(gen::term(rng));
                return PatternTerm::iri(
                    ex + (which == 1 ? "p" : "s") + std::to_string(rng.below(4)));
            }
        };
        std::vector<QuadPattern> patterns;
        std::size_t n = rng.range(1, 3);
        for (std::size_t i = 0; i < n; ++i)
            patterns.push_back(QuadPattern{pattern_term(0), pattern_term(1), pattern_term(2),
                                           PatternTerm::any()});

        auto got = store.match_all(patterns);
        std::set<Binding> got_set(got.begin(), got.end());
        CHECK(got.size() == got_set.size()); // no duplicates
        CHECK(got_set == nested_loop_oracle(store, patterns));
    }
}

TEST_CASE("emit_turtle reproduces the lexeme block of the volume linkage") {
    QuadStore store;
    store.add_prefix("example", ex);
    store.add_prefix("rdfs", std::string(ns::rdfs));
    std::string lex = ex + "broadcast(icl--message)";
    store.insert(lex, ns::rdf_("type"), Term::iri(ns::unl_("UW_Lexeme")));
    store.insert(lex, ns::rdf_("type"), Term::iri(ex + "Test_UW_Volume"));
    store.insert(lex, ns::rdfs_("label"), Term::str("broadcast(icl>message)"));
    store.insert(lex, ns::unl_("has_master_definition"),
                 Term::str("broadcast{icl>message(icl>thing)}"));
    store.insert(lex, ns::unl_("has_id"), Term::str("202004223698"));
    store.insert(lex, ns::unl_("has_occurrence"),
                 Term::iri(ex + "broadcast(icl--message)_00000016"));
    store.insert(lex, ns::unl_("icl"), Term::iri(ex + "message(icl--thing)"));

    std::string text = emit_turtle(store);
    CHECK(text.find("unl:has_id \"202004223698\"") != std::string::npos);
    CHECK(text.find("example:broadcast(icl--message)") != std::string::npos);
    CHECK(text.find("a example:Test_UW_Volume , unl:UW_Lexeme") != std::string::npos);
    CHECK(text.find("unl:icl example:message(icl--thing)") != std::string::npos);
}

TEST_CASE("empty store emits the prefix header only") {
    QuadStore store;
    std::string text = emit_turtle(store);
    CHECK(text == "@prefix unl: <https://unl.tetras-libre.fr/rdf/schema#> .\n");
    CHECK(emit_trig(store) == text);
}

TEST_CASE("emit_turtle refuses named graphs") {
    QuadStore store;
    store.insert(quad("s", "p", Term::iri(ex + "o"), "g"));
    CHECK_THROWS_AS(emit_turtle(store), StoreModeError);
    CHECK_NOTHROW(emit_trig(store));
}

TEST_CASE("the scope listing loads with three quads in the scope graph") {
    std::string text =
        "@prefix unl: <https://unl.tetras-libre.fr/rdf/schema#> .\n"
        "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "@prefix example: <https://unl.tetras-libre.fr/rdf/example#> .\n"
        "example:R2 rdf:type unl:UNL_Sentence ;\n"
        "  rdfs:label \"The system displays a channel in green when it is in broadcast "
        "state\"@en .\n"
        "example:UNL_Scope_00000017 rdf:type unl:UNL_Scope ;\n"
        "  rdfs:label \"01\" ;\n"
        "  unl:is_substructure_of example:R2 .\n"
        "example:when_00000012 rdf:type unl:UW_Occurrence ;\n"
        "  rdfs:label \"when(icl>how,com>always,tim>uw,obj>uw)\" ;\n"
        "  unl:obj example:UNL_Scope_00000017 .\n"
        "example:UNL_Scope_00000017 {\n"
        "  example:be_in_a_state_00000013 unl:aoj example:channel_00000014 ;\n"
        "    unl:obj example:state_00000015 .\n"
        "  example:state_00000015 unl:mod example:broadcast_00000016 .\n"
        "}\n";
    QuadStore store = load_trig(text);
    std::size_t in_scope = 0;
    for (const auto& q : store.quads())
        if (q.graph == ex + "UNL_Scope_00000017")
            ++in_scope;
    CHECK(in_scope == 3);
    CHECK(store.contains({ex + "be_in_a_state_00000013", ns::unl_("aoj"),
                          Term::iri(ex + "channel_00000014"), ex + "UNL_Scope_00000017"}));
}

TEST_CASE("empty text loads to an empty store") {
    CHECK(load_turtle("").empty());
    CHECK(load_trig("# just a comment\n").empty());
}

TEST_CASE("emit/load fixpoint, byte-identical") {
    gen::Rng rng(0xFEED);
    for (int round = 0; round < 100; ++round) {
        QuadStore store = gen::quad_store(rng, /*with_graphs=*/false);
        std::string first = emit_turtle(store);
        QuadStore reloaded = load_turtle(first);
        CHECK(canonical_equal(store, reloaded));
        CHECK(emit_turtle(reloaded) == first);
    }
    for (int round = 0; round < 100; ++round) {
        QuadStore store = gen::quad_store(rng, /*with_graphs=*/true);
        std::string first = emit_trig(store);
        QuadStore reloaded = load_trig(first);
        CHECK(canonical_equal(store, reloaded));
        CHECK(emit_trig(reloaded) == first);
    }
}

TEST_CASE("collections round-trip as first-class lists") {
    QuadStore store;
    store.add_prefix("example", ex);
    store.add_prefix("owl", std::string(ns::owl));
    store.insert(ex + "state(icl--attribute)", ns::owl_("oneOf"),
                 Term::list({Term::str("listening(icl>sensing)"),
                             Term::str("traffic(icl>communication)")}));
    std::string text = emit_turtle(store);
    CHECK(text.find("( \"listening(icl>sensing)\" \"traffic(icl>communication)\" )") !=
          std::string::npos);
    QuadStore reloaded = load_turtle(text);
    CHECK(canonical_equal(store, reloaded));
}

TEST_CASE("canonical_equal ignores prefix spellings, not graph tags") {
    QuadStore a;
    a.add_prefix("example", ex);
    a.insert(quad("s", "p", Term::iri(ex + "o")));
    QuadStore b;
    b.add_prefix("zz", ex); // different spelling for the same namespace
    b.insert(quad("s", "p", Term::iri(ex + "o")));
    CHECK(canonical_equal(a, a));
    CHECK(canonical_equal(a, b));

    QuadStore c;
    c.insert(quad("s", "p", Term::iri(ex + "o"), "g"));
    CHECK_FALSE(canonical_equal(a, c));
}

TEST_CASE("unsupported constructs error loudly by name") {
    auto message_of = [](const std::string& text) {
        try {
            load_trig(text);
        } catch (const UnsupportedConstructError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("_:b0 <http://x/p> <http://x/o> .").find("blank node") !=
          std::string::npos);
    CHECK(message_of("<http://x/s> <http://x/p> [ ] .").find("anonymous") !=
          std::string::npos);
    CHECK(message_of("@base <http://x/> .").find("@base") != std::string::npos);
    CHECK(message_of("<http://x/s> <http://x/p> 1.5 .").find("decimal") != std::string::npos);
    CHECK(message_of("<http://x/s> <http://x/p> true .").find("true") != std::string::npos);

    QuadStore graphs;
    graphs.insert(quad("s", "p", Term::iri(ex + "o"), "g"));
    CHECK_THROWS_AS(load_turtle(emit_trig(graphs)), UnsupportedConstructError);
}

TEST_CASE("load errors carry the line number") {
    try {
        load_turtle("@prefix unl: <https://unl.tetras-libre.fr/rdf/schema#> .\nunl:a unl:b\n");
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(e.line() >= 2);
    }
    CHECK_THROWS_AS(load_turtle("nope:s nope:p nope:o ."), LoadError);
}
