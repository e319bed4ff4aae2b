#include "invpoly/json_io.hpp"

#include "invpoly/errors.hpp"

#include <climits>
#include <string>

namespace invpoly {

namespace {

int int_field(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw ParseError(std::string(what) + " must be an integer");
    }
    const auto v = j.get<long long>();
    if (v < INT_MIN || v > INT_MAX) {
        throw ParseError(std::string(what) + " out of range");
    }
    return static_cast<int>(v);
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

const Json& array_of(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be an array");
    }
    return j;
}

/// Rethrow value errors from constructors as parse errors: bad input text.
template <typename F>
auto decoding(F&& f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) {
        return Json(x.get_si());
    }
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            return Integer(std::to_string(j.get<unsigned long long>()));
        }
        return Integer(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("not an integer: " + j.get<std::string>());
        }
    }
    throw ParseError("expected an exact integer");
}

void to_json(Json& j, const HSequence& h) {
    j = Json{{"prefix", h.prefix()}, {"tail_offset", h.tail_offset()}};
}

void to_json(Json& j, const PairSet& S) {
    j = Json::array();
    for (const auto& p : S) {
        j.push_back(Json::array({p.i, p.j}));
    }
}

void to_json(Json& j, const Permutation& pi) {
    j = Json(pi.word());
}

void to_json(Json& j, const BinomialPoly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        terms.push_back(Json{{"c", integer_to_json(t.c)}, {"s", t.s}, {"d", t.d}});
    }
    j = Json{{"terms", terms}};
}

void to_json(Json& j, const MonomialPoly& p) {
    Json num = Json::array();
    Json den = Json::array();
    for (const auto& c : p.coeffs()) {
        num.push_back(integer_to_json(Integer(c.get_num())));
        den.push_back(integer_to_json(Integer(c.get_den())));
    }
    j = Json{{"num", num}, {"den", den}};
}

void to_json(Json& j, const QPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) {
        coeffs.push_back(integer_to_json(c));
    }
    j = Json{{"coeffs", coeffs}};
}

void to_json(Json& j, const IntSequence& s) {
    Json values = Json::array();
    for (const auto& v : s.values) {
        values.push_back(integer_to_json(v));
    }
    j = Json{{"origin", s.origin}, {"values", values}};
}

void to_json(Json& j, const Poset& P) {
    Json covers = Json::array();
    for (const auto& [a, b] : P.covers()) {
        covers.push_back(Json::array({a, b}));
    }
    j = Json{{"n", P.size()}, {"covers", covers}};
}

void to_json(Json& j, const ExpansionResult& r) {
    j = Json{{"basis", std::string(to_string(r.basis))},
             {"coeffs", r.coeffs},
             {"binomial_terms", Json(r.poly).at("terms")},
             {"monomial", r.monomial()},
             {"validity_floor", r.validity_floor}};
}

void to_json(Json& j, const GradedExpansion& ge) {
    Json bq = Json::array();
    for (const auto& p : ge.b_q) {
        bq.push_back(p);
    }
    j = Json{{"hm", ge.hm}, {"m", ge.m}, {"origin", ge.origin()}, {"b_q", bq}};
}

Json conjecture_report_json(const ConjectureReport& report, bool per_set) {
    Json violations = Json::array();
    Json sets = Json::array();
    for (const auto& e : report.entries) {
        if (e.violation) {
            violations.push_back(Json{{"S", e.S},
                                      {"hm", e.hm},
                                      {"i", e.violation->i},
                                      {"j", e.violation->j},
                                      {"exponent", e.violation->exponent},
                                      {"coefficient", integer_to_json(e.violation->coefficient)}});
        }
        if (per_set) {
            sets.push_back(Json{{"S", e.S}, {"hm", e.hm}, {"pass", !e.violation}, {"elapsed_us", e.elapsed_us}});
        }
    }
    Json out{{"checked", report.checked}, {"violations", violations}, {"elapsed_ms", report.elapsed_ms}};
    if (per_set) {
        out["sets"] = sets;
    }
    return out;
}

void to_json(Json& j, const ConjectureReport& report) {
    j = conjecture_report_json(report, false);
}

HSequence hsequence_from_json(const Json& j) {
    std::vector<int> prefix;
    for (const auto& v : array_of(member(j, "prefix"), "prefix")) {
        prefix.push_back(int_field(v, "prefix entry"));
    }
    const int tail = int_field(member(j, "tail_offset"), "tail_offset");
    return decoding([&] { return HSequence(std::move(prefix), tail); });
}

PairSet pairset_from_json(const Json& j) {
    std::vector<Pair> pairs;
    for (const auto& p : array_of(j, "pair set")) {
        if (!p.is_array() || p.size() != 2) {
            throw ParseError("each pair must be a two-element array");
        }
        pairs.push_back({int_field(p[0], "pair entry"), int_field(p[1], "pair entry")});
    }
    return decoding([&] { return PairSet(std::move(pairs)); });
}

Permutation permutation_from_json(const Json& j) {
    std::vector<int> w;
    for (const auto& v : array_of(j, "permutation")) {
        w.push_back(int_field(v, "permutation entry"));
    }
    return decoding([&] { return Permutation(std::move(w)); });
}

BinomialPoly binomial_poly_from_json(const Json& j) {
    std::vector<BinomialTerm> terms;
    for (const auto& t : array_of(member(j, "terms"), "terms")) {
        terms.push_back({integer_from_json(member(t, "c")), int_field(member(t, "s"), "s"),
                         int_field(member(t, "d"), "d")});
    }
    return decoding([&] { return BinomialPoly(std::move(terms)); });
}

MonomialPoly monomial_poly_from_json(const Json& j) {
    const auto& num = array_of(member(j, "num"), "num");
    const auto& den = array_of(member(j, "den"), "den");
    if (num.size() != den.size()) {
        throw ParseError("num and den must have equal length");
    }
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < num.size(); ++k) {
        const Integer d = integer_from_json(den[k]);
        if (d == 0) {
            throw ParseError("zero denominator");
        }
        coeffs.emplace_back(integer_from_json(num[k]), d);
    }
    return MonomialPoly(std::move(coeffs));
}

QPoly qpoly_from_json(const Json& j) {
    std::vector<Integer> coeffs;
    for (const auto& c : array_of(member(j, "coeffs"), "coeffs")) {
        coeffs.push_back(integer_from_json(c));
    }
    return QPoly(std::move(coeffs));
}

IntSequence int_sequence_from_json(const Json& j) {
    IntSequence s;
    s.origin = int_field(member(j, "origin"), "origin");
    for (const auto& v : array_of(member(j, "values"), "values")) {
        s.values.push_back(integer_from_json(v));
    }
    return s;
}

Poset poset_from_json(const Json& j) {
    const int n = int_field(member(j, "n"), "n");
    std::vector<std::pair<int, int>> rel;
    for (const auto& c : array_of(member(j, "covers"), "covers")) {
        if (!c.is_array() || c.size() != 2) {
            throw ParseError("each cover must be a two-element array");
        }
        rel.emplace_back(int_field(c[0], "cover entry"), int_field(c[1], "cover entry"));
    }
    return decoding([&] { return Poset(n, rel); });
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace invpoly
