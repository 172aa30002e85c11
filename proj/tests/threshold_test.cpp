#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "annigraph/ann_graph.hpp"
#include "annigraph/threshold.hpp"

using namespace annigraph;

namespace {

SimpleGraph path4() {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

SimpleGraph cycle4() {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
}

SimpleGraph two_k2() {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

bool witness_is_valid(const SimpleGraph& g, const std::array<std::int64_t, 4>& w) {
    auto [a, b, c, d] = w;
    std::set<std::int64_t> distinct{a, b, c, d};
    return distinct.size() == 4 && g.has_edge(a, b) && g.has_edge(c, d) && !g.has_edge(a, c) &&
           !g.has_edge(b, d);
}

SimpleGraph random_graph(std::int64_t n, double p, std::mt19937_64& rng) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

bool threshold_via_peel(const SimpleGraph& g) {
    try {
        peel_creation_sequence(g);
        return true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotThreshold) throw;
        return false;
    }
}

}  // namespace

TEST_CASE("alternating 4-cycles: the three witness shapes, none in Gamma(Z/p^alpha)") {
    CHECK(!find_alternating_4cycle(build_graph(FiniteAbelianGroup({8})).graph).has_value());
    CHECK(!find_alternating_4cycle(build_graph(FiniteAbelianGroup({81})).graph).has_value());

    for (const SimpleGraph& g : {path4(), cycle4(), two_k2()}) {
        auto w = find_alternating_4cycle(g);
        REQUIRE(w.has_value());
        CHECK(witness_is_valid(g, *w));
    }
}

TEST_CASE("peeling recovers creation sequences") {
    SimpleGraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(peel_creation_sequence(k4).str() == "0111");

    SimpleGraph star5(5);  // K_{1,4}, center 0
    for (int v = 1; v < 5; ++v) star5.add_edge(0, v);
    CHECK(peel_creation_sequence(star5).str() == "00001");

    CHECK_THROWS_AS(peel_creation_sequence(path4()), Error);
}

TEST_CASE("creation words rebuild graphs with the same degree sequence and shape") {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 50; ++trial) {
        CreationSequence word;
        word.bits.push_back(0);
        std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 10);
        for (std::int64_t i = 1; i < n; ++i) word.bits.push_back(coin(rng));
        SimpleGraph g = graph_from_creation_sequence(word);
        CreationSequence peeled = peel_creation_sequence(g);
        SimpleGraph rebuilt = graph_from_creation_sequence(peeled);
        CHECK(degree_sequence(g) == degree_sequence(rebuilt));
        CHECK(twin_collapse_signature(g) == twin_collapse_signature(rebuilt));
    }
}

TEST_CASE("closed-form creation words") {
    CHECK(closed_form_creation_sequence(2, 1).str() == "01");
    CHECK(closed_form_creation_sequence(5, 2).str() ==
          "0" + std::string(3, '1') + std::string(20, '0') + "1");

    CreationSequence w23 = closed_form_creation_sequence(2, 3);
    CHECK(w23.bits.size() == 8);
    SimpleGraph g23 = graph_from_creation_sequence(w23);
    CHECK(degree_sequence(g23).parts == std::vector<std::int64_t>{7, 3, 2, 2, 1, 1, 1, 1});

    for (std::int64_t p : {2, 3, 5}) {
        std::int64_t n = 1;
        for (int alpha = 1; alpha <= 4; ++alpha) {
            n *= p;
            if (n > 700) break;
            SimpleGraph from_word =
                graph_from_creation_sequence(closed_form_creation_sequence(p, alpha));
            SimpleGraph from_group = build_graph(FiniteAbelianGroup({n})).graph;
            CHECK(degree_sequence(from_word) == degree_sequence(from_group));
        }
    }
}

TEST_CASE("creation sequence string round-trip") {
    CreationSequence w = CreationSequence::from_string("010011");
    CHECK(w.str() == "010011");
    CHECK_THROWS_AS(CreationSequence::from_string("01x"), Error);
}

TEST_CASE("Ferrers conjugation") {
    IntPartition pi16({15, 7, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(conjugate(pi16).parts ==
          std::vector<std::int64_t>{16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1});

    IntPartition staircase({3, 2, 1});
    CHECK(conjugate(staircase).parts == std::vector<std::int64_t>{3, 2, 1});
    CHECK(conjugate(IntPartition(std::vector<std::int64_t>{})).parts.empty());

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::int64_t> parts(1 + rng() % 12);
        for (auto& x : parts) x = static_cast<std::int64_t>(rng() % 15);
        IntPartition p = IntPartition::from_unsorted(std::move(parts));
        IntPartition cc = conjugate(conjugate(p));
        // Involution up to trailing zeros.
        std::vector<std::int64_t> nz;
        for (std::int64_t x : p.parts)
            if (x > 0) nz.push_back(x);
        CHECK(cc.parts == nz);
        CHECK(conjugate(p).box_count() == p.box_count());
    }
}

TEST_CASE("threshold Laplacian spectra via conjugation") {
    SimpleGraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(laplacian_spectrum_threshold(k4) == std::vector<std::int64_t>{4, 4, 4, 0});

    SimpleGraph star3(3);
    star3.add_edge(0, 1);
    star3.add_edge(0, 2);
    CHECK(laplacian_spectrum_threshold(star3) == std::vector<std::int64_t>{3, 1, 0});

    CHECK(laplacian_spectrum_threshold(build_graph(FiniteAbelianGroup({16})).graph) ==
          std::vector<std::int64_t>{16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0});

    CHECK_THROWS_AS(laplacian_spectrum_threshold(cycle4()), Error);
}

TEST_CASE("closed-form Laplacian multiplicity tables") {
    std::map<std::int64_t, std::int64_t> t24{{16, 1}, {8, 1}, {4, 1}, {2, 4}, {1, 8}, {0, 1}};
    CHECK(laplacian_multiplicity_table(2, 4) == t24);

    std::map<std::int64_t, std::int64_t> t71{{7, 1}, {1, 5}, {0, 1}};
    CHECK(laplacian_multiplicity_table(7, 1) == t71);

    for (auto [p, alpha] : std::vector<std::pair<std::int64_t, int>>{
             {2, 1}, {2, 2}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        auto table = laplacian_multiplicity_table(p, alpha);
        std::int64_t n = 1;
        for (int t = 0; t < alpha; ++t) n *= p;
        std::int64_t count = 0, weighted = 0;
        for (auto [eig, mult] : table) {
            count += mult;
            weighted += eig * mult;
        }
        CHECK(count == n);
        AnnGraph ag = build_graph(FiniteAbelianGroup({n}));
        CHECK(weighted == 2 * ag.graph.edge_count());
        // And the table is exactly the multiset the conjugation route gives.
        std::map<std::int64_t, std::int64_t> from_graph;
        for (std::int64_t v : laplacian_spectrum_threshold(ag.graph)) ++from_graph[v];
        CHECK(table == from_graph);
    }
}

TEST_CASE("threshold recognition: peel and alternating-4-cycle search agree") {
    std::mt19937_64 rng(20240818);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SimpleGraph g;
        if (trial % 2 == 0) {
            g = random_graph(4 + rng() % 9, 0.4, rng);
        } else {
            CreationSequence word;
            word.bits.push_back(0);
            std::int64_t n = 4 + static_cast<std::int64_t>(rng() % 9);
            for (std::int64_t i = 1; i < n; ++i) word.bits.push_back(rng() % 2);
            g = graph_from_creation_sequence(word);
        }
        bool by_peel = threshold_via_peel(g);
        bool by_witness = !find_alternating_4cycle(g).has_value();
        CHECK(by_peel == by_witness);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("independent and complete parts split at half the exponent") {
    for (std::int64_t n : {4, 8, 16, 32, 64, 128, 9, 27, 81, 243, 25, 125, 49}) {
        FiniteAbelianGroup g({n});
        std::int64_t p = g.p_group_view()->prime;
        int alpha = g.p_group_view()->factor_exponents[0];
        AnnGraph ag = build_graph(g);
        for (std::int64_t x = 0; x < n; ++x) {
            for (std::int64_t y = x + 1; y < n; ++y) {
                int vx = residue_valuation(x, p, alpha);
                int vy = residue_valuation(y, p, alpha);
                if (2 * vx < alpha && 2 * vy < alpha) CHECK(!ag.graph.has_edge(x, y));
                if (2 * vx >= alpha && 2 * vy >= alpha) CHECK(ag.graph.has_edge(x, y));
            }
        }
    }
}
