// Seeded random generators for property tests. Documents are valid by
// construction (entry uniqueness per scope, no dangling references).
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unlrdf/document.hpp"
#include "unlrdf/parser.hpp"
#include "unlrdf/quad_store.hpp"
#include "unlrdf/uw.hpp"

namespace gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }
    std::size_t range(std::size_t lo, std::size_t hi) { // inclusive
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

private:
    std::mt19937_64 engine_;
};

inline const std::vector<std::string> relation_labels = {
    "agt", "obj", "aoj", "mod", "and", "man", "tim", "qua", "cnt", "ben", "ins",
};
inline const std::vector<std::string> restriction_labels = {"icl", "agt", "obj", "equ"};
inline const std::vector<std::string> plain_attributes = {
    "pl", "past", "present", "future", "def", "indef", "not", "topic",
};

inline std::string identifier(Rng& rng, bool allow_odd_chars = true) {
    static const std::string plain = "abcdefghijklmnopqrstuvwxyz_0123456789";
    static const std::string odd = "(),:><.@ -%";
    std::string out;
    std::size_t len = rng.range(1, 8);
    for (std::size_t i = 0; i < len; ++i) {
        if (allow_odd_chars && rng.coin(0.06))
            out.push_back(odd[rng.below(odd.size())]);
        else
            out.push_back(plain[rng.below(plain.size())]);
    }
    return out;
}

inline unlrdf::UwExpression uw_expression(Rng& rng, bool allow_odd_chars = true) {
    unlrdf::UwExpression expr;
    expr.headword = identifier(rng, allow_odd_chars);
    std::size_t restrictions = rng.range(0, 3);
    for (std::size_t i = 0; i < restrictions; ++i) {
        unlrdf::Restriction r;
        r.relation = rng.pick(restriction_labels);
        r.direction = rng.coin(0.9) ? '>' : '<';
        std::size_t chain = rng.range(1, 3);
        for (std::size_t k = 0; k < chain; ++k)
            r.targets.push_back(identifier(rng, allow_odd_chars));
        expr.restrictions.push_back(std::move(r));
    }
    if (rng.coin(0.25))
        expr.instance_id = "0" + std::to_string(rng.range(1, 9));
    std::size_t attrs = rng.range(0, 2);
    for (std::size_t i = 0; i < attrs; ++i)
        expr.add_attribute(rng.pick(plain_attributes));
    return expr;
}

// A parseable, valid document: every occurrence is incident to a relation,
// each scope carries exactly one .@entry member.
inline unlrdf::UnlDocument document(Rng& rng, std::uint64_t counter_base = 1) {
    auto fresh_occurrence = [&](unlrdf::Sentence& sentence, std::uint64_t& counter,
                                bool entry) {
        unlrdf::UwExpression expr;
        // unique headwords keep occurrence keys distinct
        expr.headword = "w" + std::to_string(sentence.occurrence_order.size()) + "_" +
                        identifier(rng, false);
        if (rng.coin(0.4)) {
            unlrdf::Restriction r;
            r.relation = rng.pick(restriction_labels);
            r.direction = '>';
            r.targets.push_back(identifier(rng, false));
            expr.restrictions.push_back(std::move(r));
        }
        if (entry)
            expr.add_attribute("entry");
        if (rng.coin(0.3))
            expr.add_attribute(rng.pick(plain_attributes));
        return sentence.add_occurrence(expr, counter);
    };

    unlrdf::UnlDocument doc;
    doc.counter_base = counter_base;
    std::uint64_t counter = counter_base;
    doc.explicit_structure = rng.coin(0.3);
    std::size_t paragraphs = doc.explicit_structure ? rng.range(1, 2) : 1;
    std::size_t sentence_no = 0;
    for (std::size_t p = 0; p < paragraphs; ++p) {
        unlrdf::Paragraph para;
        std::size_t sentences = rng.range(1, 2);
        for (std::size_t s = 0; s < sentences; ++s) {
            unlrdf::Sentence sentence;
            sentence.id = "G" + std::to_string(++sentence_no);
            sentence.explicit_id = true;
            if (rng.coin(0.7)) {
                sentence.original_text = "generated sentence " + std::to_string(sentence_no);
                if (rng.coin(0.5))
                    sentence.org_tag = "en";
            }

            std::vector<std::string> main_keys;
            main_keys.push_back(fresh_occurrence(sentence, counter, true));
            std::size_t extra = rng.range(1, 3);
            for (std::size_t i = 0; i < extra; ++i)
                main_keys.push_back(fresh_occurrence(sentence, counter, false));
            for (std::size_t i = 1; i < main_keys.size(); ++i)
                sentence.relations.push_back({rng.pick(relation_labels),
                                              unlrdf::NodeRef::occurrence(main_keys[0]),
                                              unlrdf::NodeRef::occurrence(main_keys[i]),
                                              sentence.id});

            std::size_t scopes = rng.range(0, 2);
            for (std::size_t sc = 0; sc < scopes; ++sc) {
                std::string scope_id = "0" + std::to_string(sc + 1);
                sentence.add_scope(scope_id, counter);
                std::vector<std::string> scope_keys;
                scope_keys.push_back(fresh_occurrence(sentence, counter, true));
                std::size_t members = rng.range(1, 2);
                for (std::size_t i = 0; i < members; ++i) {
                    // occasionally reuse a non-entry main occurrence
                    if (rng.coin(0.3) && main_keys.size() > 1)
                        scope_keys.push_back(main_keys[1 + rng.below(main_keys.size() - 1)]);
                    else
                        scope_keys.push_back(fresh_occurrence(sentence, counter, false));
                }
                for (std::size_t i = 1; i < scope_keys.size(); ++i)
                    sentence.relations.push_back({rng.pick(relation_labels),
                                                  unlrdf::NodeRef::occurrence(scope_keys[0]),
                                                  unlrdf::NodeRef::occurrence(scope_keys[i]),
                                                  scope_id});
                sentence.relations.push_back({rng.pick(relation_labels),
                                              unlrdf::NodeRef::occurrence(main_keys[0]),
                                              unlrdf::NodeRef::scope(scope_id),
                                              sentence.id});
            }
            // scopes are numbered after occurrences, as the parser does
            for (const auto& scope_id : sentence.scope_order)
                sentence.scope_counters[scope_id] = counter++;
            para.sentences.push_back(std::move(sentence));
        }
        doc.paragraphs.push_back(std::move(para));
    }
    doc.next_counter = counter;
    return doc;
}

inline unlrdf::Term term(Rng& rng, bool allow_list = true) {
    switch (rng.below(allow_list ? 5u : 4u)) {
    case 0:
        return unlrdf::Term::iri("https://unl.tetras-libre.fr/rdf/example#n" +
                                 std::to_string(rng.below(6)));
    case 1:
        return unlrdf::Term::str("lit " + std::to_string(rng.below(6)));
    case 2:
        return unlrdf::Term::lang_str("texte " + std::to_string(rng.below(4)), "fr");
    case 3:
        return unlrdf::Term::integer(static_cast<std::int64_t>(rng.below(100)) - 50);
    default: {
        std::vector<unlrdf::Term> items;
        std::size_t n = rng.range(0, 3);
        for (std::size_t i = 0; i < n; ++i)
            items.push_back(term(rng, false));
        return unlrdf::Term::list(std::move(items));
    }
    }
}

inline unlrdf::QuadStore quad_store(Rng& rng, bool with_graphs) {
    unlrdf::QuadStore store;
    store.add_prefix("example", "https://unl.tetras-libre.fr/rdf/example#");
    std::size_t quads = rng.range(1, 14);
    for (std::size_t i = 0; i < quads; ++i) {
        std::string s =
            "https://unl.tetras-libre.fr/rdf/example#s" + std::to_string(rng.below(4));
        std::string p =
            "https://unl.tetras-libre.fr/rdf/example#p" + std::to_string(rng.below(3));
        std::string g;
        if (with_graphs && rng.coin(0.4))
            g = "https://unl.tetras-libre.fr/rdf/example#g" + std::to_string(rng.below(2));
        store.insert(s, p, term(rng), g);
    }
    return store;
}

} // namespace gen
