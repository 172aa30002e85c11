#include <doctest.h>

#include <set>

#include "annigraph/group.hpp"

using namespace annigraph;

namespace {

std::vector<FiniteAbelianGroup> assorted_groups() {
    return {
        FiniteAbelianGroup({8}),        FiniteAbelianGroup({2, 4, 8}),
        FiniteAbelianGroup({3, 3}),     FiniteAbelianGroup({6, 10}),
        FiniteAbelianGroup({2, 4}),     FiniteAbelianGroup({2, 2, 4}),
        FiniteAbelianGroup({12}),       FiniteAbelianGroup({5}),
        FiniteAbelianGroup({9, 3}),     FiniteAbelianGroup({4, 4}),
    };
}

}  // namespace

TEST_CASE("group construction caches order, exponent, p-view") {
    FiniteAbelianGroup g({8});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 8);
    REQUIRE(g.p_group_view().has_value());
    CHECK(g.p_group_view()->prime == 2);
    CHECK(g.p_group_view()->factor_exponents == std::vector<int>{3});

    FiniteAbelianGroup h({2, 4, 8});
    CHECK(h.order() == 64);
    CHECK(h.exponent() == 8);
    REQUIRE(h.p_group_view().has_value());
    CHECK(h.p_group_view()->factor_exponents == std::vector<int>{1, 2, 3});
    CHECK(h.p_group_view()->partition() == std::vector<int>{3, 2, 1});
    CHECK(h.is_rank3_strict_p_group());

    FiniteAbelianGroup k({6});
    CHECK(k.order() == 6);
    CHECK(k.exponent() == 6);
    CHECK(!k.p_group_view().has_value());

    CHECK_THROWS_AS(FiniteAbelianGroup({1}), Error);
    CHECK_THROWS_AS(FiniteAbelianGroup({4, 0}), Error);
}

TEST_CASE("element indexing round-trips and reduces coordinates") {
    FiniteAbelianGroup g({2, 4, 8});
    for (std::int64_t idx = 0; idx < g.order(); ++idx)
        CHECK(g.index_of(g.coords_of(idx)) == idx);
    GroupElement e = g.element({5, -1, 11});
    CHECK(e.coords() == std::vector<std::int64_t>{1, 3, 3});
    CHECK(g.element({0, 0, 0}).is_zero());
    CHECK(g.element({0, 2, 0}).order() == 2);
    CHECK(g.element({1, 1, 1}).order() == 8);
}

TEST_CASE("p_valuation on cyclic p-groups") {
    FiniteAbelianGroup z8({8});
    CHECK(p_valuation(z8.element({6})) == 1);
    CHECK(p_valuation(z8.element({0})) == 3);
    CHECK(p_valuation(z8.element({5})) == 0);
    FiniteAbelianGroup z27({27});
    CHECK(p_valuation(z27.element({9})) == 2);

    CHECK_THROWS_AS(p_valuation(FiniteAbelianGroup({6}).element(std::int64_t{1})), Error);
    CHECK_THROWS_AS(p_valuation(FiniteAbelianGroup({3, 3}).element(std::int64_t{1})), Error);
}

TEST_CASE("brute-force annihilator oracle") {
    FiniteAbelianGroup z8({8});
    CHECK(annihilator_bruteforce(z8.element({2})).generator == 2);
    CHECK(annihilator_bruteforce(z8.element({0})).generator == 8);

    FiniteAbelianGroup z33({3, 3});
    CHECK(annihilator_bruteforce(z33.element({1, 0})).generator == 3);

    CHECK_THROWS_AS(annihilator_bruteforce(z8.element({1}), /*cap=*/4), Error);
    try {
        annihilator_bruteforce(z8.element({1}), 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OracleCapExceeded);
    }
}

TEST_CASE("cyclic closed form equals the oracle exhaustively (small)") {
    FiniteAbelianGroup z8({8});
    CHECK(annihilator_cyclic(z8.element({4})).generator == 4);
    CHECK(annihilator_cyclic(z8.element({5})).generator == 1);
    CHECK(annihilator_cyclic(FiniteAbelianGroup({81}).element({18})).generator == 9);

    for (std::int64_t p : {2, 3}) {
        std::int64_t n = 1;
        for (int alpha = 1; alpha <= 3; ++alpha) {
            n *= p;
            FiniteAbelianGroup g({n});
            for (std::int64_t x = 0; x < n; ++x)
                CHECK(annihilator_cyclic(g.element(x)).generator ==
                      annihilator_bruteforce(g.element(x)).generator);
        }
    }
    CHECK_THROWS_AS(annihilator_cyclic(FiniteAbelianGroup({6}).element(std::int64_t{2})), Error);
}

TEST_CASE("homogeneous closed form: p^alpha for every element") {
    FiniteAbelianGroup g33({3, 3});
    CHECK(annihilator_homogeneous(g33.element({1, 0})).generator == 3);
    FiniteAbelianGroup g444({4, 4, 4});
    CHECK(annihilator_homogeneous(g444.element({0, 0, 0})).generator == 4);
    FiniteAbelianGroup g99({9, 9});
    CHECK(annihilator_homogeneous(g99.element({3, 6})).generator == 9);

    for (const auto& moduli : std::vector<std::vector<std::int64_t>>{
             {2, 2}, {2, 2, 2}, {4, 4}, {3, 3}, {9, 9}, {5, 5}}) {
        FiniteAbelianGroup g(moduli);
        for (std::int64_t x = 0; x < g.order(); ++x)
            CHECK(annihilator_homogeneous(g.element(x)).generator ==
                  annihilator_bruteforce(g.element(x)).generator);
    }
    CHECK_THROWS_AS(annihilator_homogeneous(FiniteAbelianGroup({2, 4}).element(std::int64_t{0})),
                    Error);
}

TEST_CASE("rank-3 case dispatch equals the oracle, including the fallback clause") {
    FiniteAbelianGroup g({2, 4, 8});
    CHECK(annihilator_rank3(g.element({0, 0, 0})).generator == 8);
    CHECK(annihilator_rank3(g.element({0, 0, 1})).generator == 4);
    // (1,1,1): trust only the oracle.
    CHECK(annihilator_rank3(g.element({1, 1, 1})).generator ==
          annihilator_bruteforce(g.element({1, 1, 1})).generator);

    std::set<std::string> labels_123, labels_124;
    for (std::int64_t x = 0; x < g.order(); ++x) {
        auto r = annihilator_rank3_labeled(g.element(x));
        labels_123.insert(std::string(r.case_label));
        CHECK(r.ideal.generator == annihilator_bruteforce(g.element(x)).generator);
    }
    CHECK(labels_123.count("appendix-fallback") == 0);

    FiniteAbelianGroup g2({2, 4, 16});
    for (std::int64_t x = 0; x < g2.order(); ++x) {
        auto r = annihilator_rank3_labeled(g2.element(x));
        labels_124.insert(std::string(r.case_label));
        CHECK(r.ideal.generator == annihilator_bruteforce(g2.element(x)).generator);
    }
    // The written guards miss the valuation triples (k=0, j=1, i=2) here; the
    // generator-condition fallback covers them.
    CHECK(labels_124.count("appendix-fallback") == 1);

    CHECK_THROWS_AS(annihilator_rank3(FiniteAbelianGroup({2, 4, 4}).element(std::int64_t{0})),
                    Error);
    CHECK_THROWS_AS(annihilator_rank3(FiniteAbelianGroup({4, 2, 8}).element(std::int64_t{0})),
                    Error);
}

TEST_CASE("dispatcher picks the right route and always agrees with the oracle") {
    CHECK(annihilator_route(FiniteAbelianGroup({8})) == AnnihilatorRoute::Cyclic);
    CHECK(annihilator_route(FiniteAbelianGroup({3, 3})) == AnnihilatorRoute::Homogeneous);
    CHECK(annihilator_route(FiniteAbelianGroup({2, 4, 8})) == AnnihilatorRoute::Rank3);
    CHECK(annihilator_route(FiniteAbelianGroup({6, 10})) == AnnihilatorRoute::BruteForce);
    CHECK(annihilator_route(FiniteAbelianGroup({2, 2, 4})) == AnnihilatorRoute::BruteForce);

    FiniteAbelianGroup z8({8});
    CHECK(annihilator(z8.element({6})).generator == 2);
    FiniteAbelianGroup g55({5, 5});
    CHECK(annihilator(g55.element({2, 3})).generator == 5);

    for (const auto& g : assorted_groups())
        for (std::int64_t x = 0; x < g.order(); ++x)
            CHECK(annihilator(g.element(x)).generator ==
                  annihilator_bruteforce(g.element(x)).generator);
}

TEST_CASE("[0:G] is exp(G)Z and every generator divides exp(G)") {
    for (const auto& g : assorted_groups()) {
        CHECK(annihilator(g.zero()).generator == g.exponent());
        for (std::int64_t x = 0; x < g.order(); ++x) {
            IdealZ d = annihilator(g.element(x));
            CHECK(g.exponent() % d.generator == 0);
        }
    }
}

TEST_CASE("IdealZ validates its divisibility invariant") {
    CHECK_THROWS_AS(IdealZ(3, 8), Error);
    CHECK_THROWS_AS(IdealZ(0, 8), Error);
    CHECK(IdealZ(4, 8).generator == 4);
}

TEST_CASE("divisor enumeration is sorted and complete") {
    CHECK(divisors_ascending(1) == std::vector<std::int64_t>{1});
    CHECK(divisors_ascending(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_ascending(49) == std::vector<std::int64_t>{1, 7, 49});
}
