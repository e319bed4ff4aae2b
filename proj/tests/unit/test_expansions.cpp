#include "doctest.h"

#include "../oracles.hpp"
#include "invpoly/enumeration.hpp"
#include "invpoly/errors.hpp"
#include "invpoly/expansions.hpp"

using namespace invpoly;

namespace {

IntSequence seq(std::initializer_list<long> v, int origin) {
    IntSequence s;
    s.origin = origin;
    for (long x : v) {
        s.values.emplace_back(x);
    }
    return s;
}

std::vector<HSequence> family() {
    return {HSequence::tail(1), HSequence::tail(2), HSequence::tail(3), HSequence({2, 4, 4, 5}, 1),
            HSequence({3, 4, 6, 7, 7}, 2), HSequence({5, 5, 6, 6}, 1)};
}

const HSequence kTail1 = HSequence::tail(1);
const HSequence kTail2 = HSequence::tail(2);
const HSequence kTail3 = HSequence::tail(3);
const PairSet kS211{{3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}};
const PairSet kS212{{1, 3}, {2, 3}, {2, 4}};
const PairSet kPosetS{{1, 3}, {2, 3}, {2, 4}, {3, 4}};
const HSequence kH412({5, 5, 6, 6}, 1);
const PairSet kS412{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}};

}  // namespace

TEST_CASE("fiber expansion") {
    const auto a = fiber_expansion(kTail3, kS211);
    CHECK(a.poly == BinomialPoly({{3, 5, 1}}));
    CHECK(a.validity_floor == 6);
    CHECK(a.coeffs.at(5) == 3);
    CHECK(a.count_at(6) == 3);
    CHECK(a.count_at(7) == 6);
    CHECK(a.monomial() == MonomialPoly({Rational(-15), Rational(3)}));

    const auto b = fiber_expansion(kTail2, kS212);
    CHECK(b.poly == BinomialPoly({{1, 2, 2}, {1, 3, 1}}));

    CHECK(fiber_expansion(kTail1, PairSet{{1, 2}}).poly == BinomialPoly({{1, 1, 1}}));
}

TEST_CASE("b expansion") {
    const auto a = b_expansion(kTail2, kS212);
    CHECK(a.coeffs == seq({1, 1, 0}, 2));
    CHECK(a.poly == BinomialPoly({{1, 2, 2}, {1, 3, 1}}));
    CHECK(a.validity_floor == 4);

    const auto b = b_expansion(kTail3, kS211);
    CHECK(b.coeffs == seq({0, 0, 0, 0, 3, 6}, 3));
    CHECK(b.monomial() == MonomialPoly({Rational(-15), Rational(3)}));

    CHECK(b_expansion(kTail2, kPosetS).coeffs == seq({0, 1, 1, 1}, 2));
    CHECK(b_expansion(kTail1, PairSet{{1, 2}}).coeffs == seq({1, 0}, 1));
}

TEST_CASE("a expansion") {
    const auto a = a_expansion(kTail2, kS212);
    CHECK(a.coeffs == seq({0, 2, 1}, 0));
    CHECK(a.poly == BinomialPoly({{2, 3, 1}, {1, 3, 2}}));
    CHECK(a.count_at(5) == 5);
    CHECK(a_expansion(kTail1, PairSet{{1, 2}}).coeffs == seq({0, 1}, 0));
}

TEST_CASE("the seven-pair example, by brute force") {
    REQUIRE(is_admissible(kH412, kS412));
    CHECK(m_of(kS412) == 3);
    CHECK(kH412(3) == 6);
    const auto b = b_expansion(kH412, kS412);
    const auto a = a_expansion(kH412, kS412);
    CHECK(b.coeffs == seq({0, 1, 1, 1}, 3));
    CHECK(a.coeffs == seq({1, 2, 1, 0}, 0));
    const long truth[] = {1, 3, 6, 10};
    for (int n = 5; n <= 8; ++n) {
        CHECK(enumerate_Ih(kH412, kS412, n).size() == static_cast<std::size_t>(truth[n - 5]));
        CHECK(a.count_at(n) == truth[n - 5]);
        CHECK(fiber_expansion(kH412, kS412).count_at(n) == truth[n - 5]);
    }
    // the coefficients printed alongside this example do not count I_h(S, 6)
    BinomialPoly printed;
    printed.add(12, 5, 0);
    printed.add(15, 5, 1);
    printed.add(6, 5, 2);
    CHECK(eval_binomial_poly(printed, 6) != 3);
}

TEST_CASE("a from b") {
    CHECK(a_from_b(seq({3, 6}, 7), 5, 8) == seq({6, 3, 0, 0, 0, 0}, 0));
    CHECK(a_from_b(seq({0, 0, 0, 0, 3, 6}, 3), 5, 8) == seq({6, 3, 0, 0, 0, 0}, 0));
    CHECK(a_from_b(seq({1, 1, 0}, 2), 2, 4) == seq({0, 2, 1}, 0));
    CHECK(a_from_b(seq({0, 0, 4}, 2), 2, 4) == seq({4, 0, 0}, 0));
    CHECK_THROWS_AS(a_from_b(seq({1, 1}, 0), 2, 4), DomainError);
}

TEST_CASE("degree and constancy") {
    CHECK(degree_of(kTail2, kPosetS) == 2);
    CHECK(degree_of(kTail3, kS211) == 1);
    CHECK(degree_of(kTail1, PairSet{{1, 2}}) == 1);

    const HSequence h26({2, 4, 4, 5}, 1);
    CHECK(is_constant(h26, PairSet{{2, 3}}));
    CHECK(degree_of(h26, PairSet{{2, 3}}) == 0);
    const auto c = b_expansion(h26, PairSet{{2, 3}});
    for (int n = 3; n <= 12; ++n) {
        CHECK(c.raw_eval(n) == 2);
    }

    const HSequence h48({3, 4, 6, 7, 7}, 2);
    const PairSet s48{{2, 4}, {3, 4}, {3, 5}, {3, 6}};
    CHECK_FALSE(is_constant(h48, s48));
    CHECK(fiber_expansion(h48, s48).count_at(6) == 9);
    CHECK(fiber_expansion(h48, s48).count_at(7) == 23);
    CHECK(enumerate_Ih(h48, s48, 6).size() == 9);
    CHECK(enumerate_Ih(h48, s48, 7).size() == 23);

    CHECK_FALSE(is_constant(kTail1, PairSet{{1, 2}}));
}

TEST_CASE("descent polynomials") {
    // d({2}; n) = C(n, 2) - 1
    const auto d = fiber_expansion(kTail1, PairSet{{2, 3}});
    CHECK(d.monomial() == MonomialPoly({Rational(-1), Rational(-1, 2), Rational(1, 2)}));
    // d({1, 2}; n) = C(n - 1, 2)
    const auto e = b_expansion(kTail1, PairSet{{1, 2}, {2, 3}});
    for (int n = 3; n <= 10; ++n) {
        CHECK(e.count_at(n) == oracle::pascal(n - 1, 2));
    }
}

TEST_CASE("validity floor and raw evaluation") {
    const auto f = fiber_expansion(kTail3, kS211);
    CHECK_THROWS_AS(f.count_at(5), BelowFloorError);
    CHECK(f.raw_eval(5) == 0);
    CHECK(f.raw_eval(2) == -9);
    const auto b = b_expansion(kTail3, kS211);
    CHECK(b.validity_floor == 8);
    CHECK_THROWS_AS(b.count_at(7), BelowFloorError);
    // the b-form still counts between j(S) and h(m)
    CHECK(b.raw_eval(6) == 3);
    CHECK(b.raw_eval(7) == 6);
}

TEST_CASE("empty and inadmissible sets") {
    for (Basis basis : {Basis::fiber, Basis::b, Basis::a}) {
        const auto r = expand(kTail2, PairSet{}, basis);
        CHECK(r.raw_eval(7) == 1);
        CHECK(r.monomial() == MonomialPoly({Rational(1)}));
        CHECK_THROWS_AS(expand(kTail2, PairSet{{1, 3}}, basis), InadmissibleError);
    }
    CHECK_THROWS_AS(degree_of(kTail2, PairSet{{1, 2}, {2, 3}}), InadmissibleError);
    CHECK_THROWS_AS(is_constant(kTail2, PairSet{{1, 3}}), InadmissibleError);
    CHECK(parse_basis("fiber") == Basis::fiber);
    CHECK(to_string(Basis::a) == "a");
    CHECK_THROWS_AS(parse_basis("c"), ParseError);
}

TEST_CASE("expansions agree with each other and with counting") {
    for (const auto& h : family()) {
        const auto classes = oracle::all_classes(h, 6);
        std::map<int, std::map<std::set<std::pair<int, int>>, long>> by_n;
        for (int n = 1; n <= 7; ++n) {
            by_n[n] = oracle::all_classes(h, n);
        }
        for (const auto& [s, count] : classes) {
            const auto S = oracle::as_pairset(s);
            if (S.empty()) {
                continue;
            }
            const auto f = fiber_expansion(h, S);
            const auto b = b_expansion(h, S);
            const auto a = a_expansion(h, S);
            REQUIRE(f.monomial() == b.monomial());
            REQUIRE(f.monomial() == a.monomial());
            REQUIRE(a_from_b(b.coeffs, m_of(S), h(m_of(S))) == a.coeffs);
            REQUIRE(degree_of(h, S) == f.monomial().degree());
            REQUIRE(is_constant(h, S) == (f.monomial().degree() == 0));
            for (int n = j_of(S); n <= 7; ++n) {
                const auto it = by_n[n].find(s);
                const long truth = it == by_n[n].end() ? 0 : it->second;
                REQUIRE(f.count_at(n) == truth);
                REQUIRE(a.count_at(n) == truth);
                REQUIRE(b.raw_eval(n) == truth);
            }
            for (const auto* c : {&b.coeffs, &a.coeffs}) {
                for (const auto& x : c->values) {
                    REQUIRE(x >= 0);
                }
                REQUIRE(is_log_concave(*c));
                REQUIRE(has_no_internal_zeros(*c));
            }
        }
    }
}
