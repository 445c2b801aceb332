#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "unlrdf/axioms.hpp"
#include "unlrdf/parser.hpp"
#include "unlrdf/rdf_unl.hpp"
#include "unlrdf/turtle.hpp"

using namespace unlrdf;

namespace {

const std::filesystem::path data_dir = UNLRDF_DATA_DIR;
const std::string ex = "https://unl.tetras-libre.fr/rdf/example#";

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

QuadStore reified_store(const std::string& unl_text, std::uint64_t base = 1) {
    return to_rdf(parse_unl_document(unl_text, {base}), ScopeMode::reified);
}

// R1 and R2 serialized the way the pipeline does it: one counter sequence.
QuadStore fixture_union() {
    UnlDocument r1 = parse_unl_document(read_file(data_dir / "R1.unl"), {1});
    UnlDocument r2 = parse_unl_document(read_file(data_dir / "R2.unl"), {r1.next_counter});
    QuadStore store = to_rdf(r1, ScopeMode::reified);
    store.merge(to_rdf(r2, ScopeMode::reified));
    return store;
}

const std::string state_lex = ex + "state(icl--attribute)";
const std::string channel_lex = ex + "channel(icl--radiowave)";
const std::string be_lex = ex + "be_in_a_state(aoj--thing,icl--be,obj--state)";
const std::string channel_inst = ex + "channel(icl--radiowave)_00000014";

} // namespace

TEST_CASE("rule 1 extracts owl:cardinality 2 from the R1 graph") {
    RuleResult result = rule_cardinality(to_rdf(
        parse_unl_document(read_file(data_dir / "R1.unl"), {1}), ScopeMode::reified));
    REQUIRE(result.axioms.size() == 1);
    CHECK(result.axioms[0] == ExtractedAxiom::make_cardinality(state_lex, 2));
    CHECK(result.warnings.empty());
}

TEST_CASE("rule 1: no qua relations, no output") {
    QuadStore store = reified_store("[S:N]{unl}agt(a.@entry,b){/unl}[/S]");
    CHECK(rule_cardinality(store).axioms.empty());
}

TEST_CASE("rule 1: a non-integer target label is skipped with a warning") {
    // mirrors the SPARQL semantics: BIND(xsd:integer("two")) fails, row dropped
    QuadStore store =
        reified_store("[S:Q]{unl}agt(s(icl>attribute).@entry,x)qua(s(icl>attribute),two){/unl}[/S]");
    RuleResult result = rule_cardinality(store);
    CHECK(result.axioms.empty());
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("two") != std::string::npos);
}

TEST_CASE("rule 2 extracts the ordered R1 enumeration") {
    RuleResult result = rule_enumeration(to_rdf(
        parse_unl_document(read_file(data_dir / "R1.unl"), {1}), ScopeMode::reified));
    std::vector<std::string> expected_members{"listening(icl>sensing)",
                                              "traffic(icl>communication)"};
    REQUIRE(result.axioms.size() == 2);
    CHECK(result.axioms[0] == ExtractedAxiom::make_enumeration(state_lex, expected_members));
    CHECK(result.axioms[1] == ExtractedAxiom::make_datatype_decl(state_lex));
}

TEST_CASE("rule 2: the icl>attribute guard filters other heads") {
    QuadStore store = reified_store(
        "[S:G]{unl}agt(s(icl>thing).@entry,x)cnt(s(icl>thing),a(icl>p))and(a(icl>p),b(icl>q)){/unl}[/S]");
    CHECK(rule_enumeration(store).axioms.empty());
}

TEST_CASE("rule 2: a cnt without an and-continuation yields nothing") {
    QuadStore store = reified_store(
        "[S:G]{unl}agt(s(icl>attribute).@entry,x)cnt(s(icl>attribute),a(icl>p)){/unl}[/S]");
    CHECK(rule_enumeration(store).axioms.empty());
}

TEST_CASE("rule 2: n-ary chains match a DFS oracle for n in 2..6") {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::string text = "[S:C]{unl}agt(head(icl>attribute).@entry,x)"
                           "cnt(head(icl>attribute),m1(icl>t1))";
        for (std::size_t i = 1; i < n; ++i)
            text += "and(m" + std::to_string(i) + "(icl>t" + std::to_string(i) + "),m" +
                    std::to_string(i + 1) + "(icl>t" + std::to_string(i + 1) + "))";
        text += "{/unl}[/S]";
        QuadStore store = reified_store(text);

        // oracle: DFS over reified and-edges starting from the cnt target
        std::map<std::string, std::string> next;
        std::string cnt_target;
        for (const auto& q : store.quads()) {
            if (q.predicate != ns::rdf_("type"))
                continue;
            if (q.object == Term::iri(ns::unl_("and"))) {
                auto src = store.object_of(q.subject, ns::unl_("has_source"));
                auto tgt = store.object_of(q.subject, ns::unl_("has_target"));
                next[src->value] = tgt->value;
            } else if (q.object == Term::iri(ns::unl_("cnt"))) {
                cnt_target = store.object_of(q.subject, ns::unl_("has_target"))->value;
            }
        }
        std::vector<std::string> expected;
        for (std::string node = cnt_target; !node.empty();) {
            expected.push_back(store.object_of(node, ns::rdfs_("label"))->value);
            auto it = next.find(node);
            node = it == next.end() ? std::string{} : it->second;
        }
        REQUIRE(expected.size() == n);

        RuleResult result = rule_enumeration(store);
        REQUIRE(result.axioms.size() == 2);
        CHECK(result.axioms[0].members == expected);
    }
}

TEST_CASE("rule 2: a cyclic and-chain is a rule error") {
    QuadStore store = reified_store(
        "[S:Y]{unl}agt(s(icl>attribute).@entry,x)cnt(s(icl>attribute),a(icl>p))"
        "and(a(icl>p),b(icl>q))and(b(icl>q),a(icl>p)){/unl}[/S]");
    CHECK_THROWS_AS(rule_enumeration(store), RuleError);
}

TEST_CASE("rule 3 extracts the R2 datatype property declaration") {
    QuadStore store = to_rdf(parse_unl_document(read_file(data_dir / "R2.unl"), {9}),
                             ScopeMode::reified);
    RuleResult result = rule_datatype_property(store);
    REQUIRE(result.axioms.size() == 4);
    CHECK(result.axioms[0] ==
          ExtractedAxiom::make_datatype_property(be_lex, channel_lex, state_lex));
    CHECK(result.axioms[1] == ExtractedAxiom::make_class_decl(channel_lex));
    CHECK(result.axioms[2] == ExtractedAxiom::make_datatype_decl(state_lex));
    CHECK(result.axioms[3] == ExtractedAxiom::make_assertion(channel_inst, channel_lex));
}

TEST_CASE("rule 3 guard truth table: aoj+obj with a copular lexeme only") {
    auto count_for = [&](bool with_aoj, bool with_obj, bool copular) {
        std::string x = copular ? "x(icl>be)" : "x(icl>thing)";
        std::string text = "[S:T]{unl}man(" + x + ".@entry,pad(icl>p))";
        if (with_aoj)
            text += "aoj(" + x + ",y(icl>u))";
        if (with_obj)
            text += "obj(" + x + ",z(icl>v))";
        text += "{/unl}[/S]";
        return rule_datatype_property(reified_store(text)).axioms.size();
    };
    CHECK(count_for(true, true, true) == 4);
    CHECK(count_for(true, true, false) == 0);
    CHECK(count_for(true, false, true) == 0);
    CHECK(count_for(false, true, true) == 0);
}

TEST_CASE("rule 3 requires aoj and obj to share a scope") {
    std::string text = "[S:SC]{unl}"
                       "aoj(x(icl>be).@entry,y(icl>u))"
                       "obj:01(x(icl>be),z(icl>v))"
                       "man:01(x(icl>be),w(icl>t))"
                       "{/unl}[/S]";
    CHECK(rule_datatype_property(reified_store(text)).axioms.empty());
}

TEST_CASE("rule 4 instantiates the property with the modifier label") {
    QuadStore store = to_rdf(parse_unl_document(read_file(data_dir / "R2.unl"), {9}),
                             ScopeMode::reified);
    RuleResult result = rule_instantiate_property(store);
    REQUIRE(result.axioms.size() == 1);
    CHECK(result.axioms[0] == ExtractedAxiom::make_assertion(channel_inst, channel_lex, be_lex,
                                                             "broadcast(icl>message)"));
}

TEST_CASE("rule 4: no mod edge, no valued assertion; two mods, two assertions") {
    std::string base_text = "[S:M]{unl}"
                            "aoj:01(x(icl>be).@entry,y(icl>u))"
                            "obj:01(x(icl>be),z(icl>v))"
                            "tim(t.@entry,:01)";
    CHECK(rule_instantiate_property(reified_store(base_text + "{/unl}[/S]")).axioms.empty());

    std::string two_mods = base_text + "mod:01(z(icl>v),w1(icl>a))mod:01(z(icl>v),w2(icl>b)){/unl}[/S]";
    QuadStore store = reified_store(two_mods);
    // oracle: |matches| x |mod edges off z| = 1 x 2
    RuleResult result = rule_instantiate_property(store);
    CHECK(result.axioms.size() == 2);
}

TEST_CASE("run_all on R1 and R2 produces the expected fact set") {
    ExtractionResult result = run_all(fixture_union());

    std::vector<ExtractedAxiom> expected = {
        ExtractedAxiom::make_cardinality(state_lex, 2),
        ExtractedAxiom::make_enumeration(
            state_lex, {"listening(icl>sensing)", "traffic(icl>communication)"}),
        ExtractedAxiom::make_datatype_decl(state_lex),
        ExtractedAxiom::make_datatype_property(be_lex, channel_lex, state_lex),
        ExtractedAxiom::make_class_decl(channel_lex),
        ExtractedAxiom::make_assertion(channel_inst, channel_lex),
        ExtractedAxiom::make_assertion(channel_inst, channel_lex, be_lex,
                                       "broadcast(icl>message)"),
    };
    CHECK(result.axioms == expected);

    // materialized triples carry the expected shapes
    std::string turtle = emit_turtle(result.constructed);
    CHECK(turtle.find("owl:cardinality 2") != std::string::npos);
    CHECK(turtle.find("( \"listening(icl>sensing)\" \"traffic(icl>communication)\" )") !=
          std::string::npos);
    CHECK(turtle.find("a owl:DatatypeProperty") != std::string::npos);
    CHECK(turtle.find("rdfs:domain example:channel(icl--radiowave)") != std::string::npos);
    CHECK(turtle.find("rdfs:range example:state(icl--attribute)") != std::string::npos);
    CHECK(turtle.find("example:be_in_a_state(aoj--thing,icl--be,obj--state) "
                      "\"broadcast(icl>message)\"") != std::string::npos);
}

TEST_CASE("run_all: empty store yields nothing") {
    QuadStore store;
    ExtractionResult result = run_all(store);
    CHECK(result.axioms.empty());
    CHECK(result.constructed.empty());
}

TEST_CASE("run_all is idempotent") {
    QuadStore store = fixture_union();
    ExtractionResult first = run_all(store);
    ExtractionResult second = run_all(store);
    CHECK(first.axioms == second.axioms); // deterministic

    QuadStore with_output = store;
    with_output.merge(first.constructed);
    ExtractionResult over_union = run_all(with_output);
    CHECK(over_union.axioms == first.axioms);
}

TEST_CASE("rules fire independently per relation type") {
    QuadStore store = fixture_union();
    QuadStore without_qua;
    for (const auto& q : store.quads()) {
        if (q.predicate == ns::rdf_("type") && q.object == Term::iri(ns::unl_("qua")))
            continue;
        if (q.subject.find("--qua--") != std::string::npos)
            continue;
        without_qua.insert(q);
    }
    for (const auto& [prefix, iri] : store.prefixes())
        without_qua.add_prefix(prefix, iri);

    CHECK(rule_cardinality(without_qua).axioms.empty());
    CHECK(rule_enumeration(without_qua).axioms == rule_enumeration(store).axioms);
    CHECK(rule_datatype_property(without_qua).axioms == rule_datatype_property(store).axioms);
    CHECK(rule_instantiate_property(without_qua).axioms ==
          rule_instantiate_property(store).axioms);
}

TEST_CASE("axioms_from_store inverts materialize") {
    ExtractionResult extraction = run_all(fixture_union());
    std::vector<ExtractedAxiom> recovered = axioms_from_store(extraction.constructed);
    for (const auto& axiom : extraction.axioms) {
        CAPTURE(axiom.to_line());
        CHECK(std::find(recovered.begin(), recovered.end(), axiom) != recovered.end());
    }
}

TEST_CASE("axiom report lines use the documented formats") {
    ExtractionResult extraction = run_all(fixture_union());
    std::string report = axioms_report(extraction.axioms);
    CHECK(report.find("CARD " + state_lex + " 2") != std::string::npos);
    CHECK(report.find("ENUM " + state_lex +
                      " [\"listening(icl>sensing)\",\"traffic(icl>communication)\"]") !=
          std::string::npos);
    CHECK(report.find("DTPROP " + be_lex + " " + channel_lex + " " + state_lex) !=
          std::string::npos);
    CHECK(report.find("ASSERT " + channel_inst + " " + channel_lex + " " + be_lex +
                      " \"broadcast(icl>message)\"") != std::string::npos);
}

TEST_CASE("a type pattern with variables finds the single qua instance in R1") {
    QuadStore store = to_rdf(parse_unl_document(read_file(data_dir / "R1.unl"), {1}),
                             ScopeMode::reified);
    QuadPattern pattern{PatternTerm::variable("x"), PatternTerm::iri(ns::rdf_("type")),
                        PatternTerm::of(Term::iri(ns::unl_("qua"))),
                        PatternTerm::variable("g")};
    auto bindings = store.match(pattern);
    REQUIRE(bindings.size() == 1);
    CHECK(bindings[0].at("x").value.find("--qua--") != std::string::npos);
    CHECK(bindings[0].at("g").value.empty()); // default graph
}
