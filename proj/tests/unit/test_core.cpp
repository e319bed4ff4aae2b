#include "doctest.h"

#include "../oracles.hpp"
#include "invpoly/core.hpp"
#include "invpoly/enumeration.hpp"
#include "invpoly/errors.hpp"

using namespace invpoly;

namespace {

const HSequence kTail2 = HSequence::tail(2);

std::vector<HSequence> family() {
    return {HSequence::tail(1), HSequence::tail(2), HSequence::tail(3), HSequence({2, 4, 4, 5}, 1),
            HSequence({3, 4, 6, 7, 7}, 2), HSequence({5, 5, 6, 6}, 1)};
}

}  // namespace

TEST_CASE("h-sequence values") {
    const HSequence h({2, 4, 4, 5}, 1);
    CHECK(h(1) == 2);
    CHECK(h(2) == 4);
    CHECK(h(4) == 5);
    CHECK(h(5) == 6);
    CHECK(h(9) == 10);
    CHECK(HSequence::tail(3)(5) == 8);
    CHECK(h.table(5) == std::vector<int>{0, 2, 4, 4, 5, 6});
}

TEST_CASE("h-sequence validation") {
    CHECK_THROWS_AS(HSequence({1}, 1), DomainError);        // h(1) = 1 is not > 1
    CHECK_THROWS_AS(HSequence({3, 2}, 1), DomainError);     // decreasing
    CHECK_THROWS_AS(HSequence({}, 0), DomainError);         // h(i) = i
    CHECK_THROWS_AS(HSequence({2, 9}, 1), DomainError);     // tail drops below the prefix
    CHECK_THROWS_AS(HSequence::tail(1)(0), DomainError);
    CHECK_NOTHROW(HSequence({3, 4, 6, 7, 7}, 2));
}

TEST_CASE("pair sets are sorted, deduplicated and checked") {
    const PairSet S{{2, 4}, {1, 3}, {2, 4}};
    REQUIRE(S.size() == 2);
    CHECK(S.pairs().front() == Pair{1, 3});
    CHECK(S.contains(2, 4));
    CHECK_FALSE(S.contains(1, 2));
    CHECK_THROWS_AS((PairSet{{3, 3}}), DomainError);
    CHECK_THROWS_AS((PairSet{{0, 2}}), DomainError);
    CHECK(PairSet{{1, 3}, {2, 5}, {4, 5}}.restricted(4) == PairSet{{1, 3}});
}

TEST_CASE("permutations") {
    const auto pi = Permutation::parse("45231");
    CHECK(pi.at(1) == 4);
    CHECK(pi.str() == "45231");
    CHECK(pi.inverse().str() == "53412");
    CHECK(pi.inverse().inverse() == pi);
    CHECK(Permutation::identity(3).str() == "123");
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation::parse("102"), ParseError);
}

TEST_CASE("restricted inversions of 45231") {
    const auto pi = Permutation::parse("45231");
    CHECK(inv_h(kTail2, pi) == PairSet{{1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
    CHECK(length(pi) == 8);
    CHECK(length(Permutation::parse("34215")) == 5);
    // h(i) >= n makes every inversion count.
    CHECK(inv_h(HSequence::tail(5), pi).size() == 8);
}

TEST_CASE("inv_h matches the naive definition") {
    for (const auto& h : family()) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& w : oracle::all_words(n)) {
                REQUIRE(oracle::as_set(inv_h(h, Permutation(w))) == oracle::inversions(w, h));
            }
        }
    }
}

TEST_CASE("tail 1 recovers descents") {
    const auto h = HSequence::tail(1);
    for (const auto& w : oracle::all_words(5)) {
        std::set<std::pair<int, int>> descents;
        for (int i = 1; i < 5; ++i) {
            if (w[i - 1] > w[i]) {
                descents.insert({i, i + 1});
            }
        }
        CHECK(oracle::as_set(inv_h(h, Permutation(w))) == descents);
    }
}

TEST_CASE("possible pairs") {
    CHECK(possible_pairs(HSequence::tail(1), 4) == PairSet{{1, 2}, {2, 3}, {3, 4}});
    CHECK(possible_pairs(HSequence({2, 4, 4, 5}, 1), 4) == PairSet{{1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("j and m") {
    const PairSet a{{3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}};
    CHECK(j_of(a) == 6);
    CHECK(m_of(a) == 5);
    const PairSet b{{1, 3}, {2, 3}, {2, 4}};
    CHECK(j_of(b) == 4);
    CHECK(m_of(b) == 2);
    CHECK(m_of(PairSet{{1, 3}, {2, 3}, {2, 4}, {3, 4}}) == 3);
    CHECK_THROWS_AS(j_of(PairSet{}), DomainError);
    CHECK_THROWS_AS(m_of(PairSet{{1, 3}}), DomainError);
}

TEST_CASE("flatten") {
    CHECK(flatten(Permutation::parse("2413"), 4).str() == "2413");
    CHECK(flatten(Permutation::parse("25134"), 4).str() == "2413");
    CHECK(flatten(Permutation::parse("45123"), 2).str() == "12");
    CHECK_THROWS_AS(flatten(Permutation::parse("123"), 4), DomainError);
}

TEST_CASE("admissibility examples") {
    CHECK(is_admissible(kTail2, PairSet{{1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}));
    CHECK(is_admissible(kTail2, PairSet{}));
    // (1,2),(2,3) without (1,3): S is not closed.
    CHECK_FALSE(is_admissible(kTail2, PairSet{{1, 2}, {2, 3}}));
    // (1,3) alone: complement (1,2),(2,3) is not closed.
    CHECK_FALSE(is_admissible(kTail2, PairSet{{1, 3}}));
    // not a subset of the possible pairs
    CHECK_FALSE(is_admissible(HSequence::tail(1), PairSet{{1, 3}}));
    CHECK(is_h_closed(kTail2, PairSet{{1, 2}, {2, 3}, {1, 3}}, 3));
    CHECK_FALSE(is_h_closed(kTail2, PairSet{{1, 2}, {2, 3}}, 3));
}

TEST_CASE("admissible sets are exactly the realized classes") {
    for (const auto& h : family()) {
        for (int n = 2; n <= 6; ++n) {
            const auto classes = oracle::all_classes(h, n);
            for (const auto& [s, count] : classes) {
                REQUIRE(is_admissible(h, oracle::as_pairset(s)));
            }
            const auto pairs = possible_pairs(h, n).pairs();
            REQUIRE(pairs.size() < 20);
            for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
                std::vector<Pair> chosen;
                for (std::size_t b = 0; b < pairs.size(); ++b) {
                    if ((mask >> b) & 1u) {
                        chosen.push_back(pairs[b]);
                    }
                }
                const PairSet S(chosen);
                const bool realized = classes.count(oracle::as_set(S)) > 0;
                REQUIRE(is_admissible(h, S) == realized);
                // Closure inside j(S) decides it; two extra columns change nothing.
                REQUIRE(is_admissible_in_window(h, S, j_of(S) + 2) == realized);
            }
        }
    }
}
