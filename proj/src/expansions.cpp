#include "invpoly/expansions.hpp"

#include "invpoly/enumeration.hpp"
#include "invpoly/errors.hpp"
#include "invpoly/poset.hpp"

#include <string>

namespace invpoly {

namespace {

void require_admissible(const HSequence& h, const PairSet& S) {
    if (!is_admissible(h, S)) {
        throw InadmissibleError("pair set is not h-admissible");
    }
}

ExpansionResult constant_one(Basis basis) {
    ExpansionResult r;
    r.basis = basis;
    r.poly.add(1, 0, 0);
    r.validity_floor = 1;
    return r;
}

}  // namespace

std::string_view to_string(Basis basis) {
    switch (basis) {
    case Basis::fiber: return "fiber";
    case Basis::b: return "b";
    case Basis::a: return "a";
    }
    return "?";
}

Basis parse_basis(std::string_view text) {
    if (text == "fiber") return Basis::fiber;
    if (text == "b") return Basis::b;
    if (text == "a") return Basis::a;
    throw ParseError("unknown basis '" + std::string(text) + "' (expected fiber, b or a)");
}

Integer ExpansionResult::count_at(long n) const {
    if (n < validity_floor) {
        throw BelowFloorError(n, validity_floor);
    }
    return raw_eval(n);
}

Integer ExpansionResult::raw_eval(long n) const {
    return eval_binomial_poly(poly, Integer(n));
}

ExpansionResult fiber_expansion(const HSequence& h, const PairSet& S) {
    require_admissible(h, S);
    if (S.empty()) {
        return constant_one(Basis::fiber);
    }
    const int j = j_of(S);
    ExpansionResult r;
    r.basis = Basis::fiber;
    r.validity_floor = j;
    r.coeffs.origin = 1;
    r.coeffs.values.assign(static_cast<std::size_t>(j), Integer(0));
    for (const auto& sigma : realize_Ih(h, S, j)) {
        const int t = t_of(sigma, h, S);
        r.poly.add(1, t, j - t);
        r.coeffs.values[static_cast<std::size_t>(t - 1)] += 1;
    }
    return r;
}

ExpansionResult b_expansion(const HSequence& h, const PairSet& S) {
    require_admissible(h, S);
    if (S.empty()) {
        return constant_one(Basis::b);
    }
    const int m = m_of(S);
    const int hm = h(m);
    ExpansionResult r;
    r.basis = Basis::b;
    r.validity_floor = hm;
    r.coeffs.origin = hm - m;
    r.coeffs.values.assign(static_cast<std::size_t>(m) + 1, Integer(0));
    for (const auto& pi : realize_Ih(h, S, hm)) {
        const int k = pi.at(hm);
        if (k < hm - m || k > hm) {
            throw std::logic_error("B_k nonempty outside h(m)-m <= k <= h(m)");
        }
        r.coeffs.values[static_cast<std::size_t>(k - (hm - m))] += 1;
    }
    for (int k = hm - m; k <= hm; ++k) {
        r.poly.add(r.coeffs.at(k), k, hm - k);
    }
    return r;
}

ExpansionResult a_expansion(const HSequence& h, const PairSet& S) {
    require_admissible(h, S);
    if (S.empty()) {
        return constant_one(Basis::a);
    }
    const int m = m_of(S);
    const int hm = h(m);
    ExpansionResult r;
    r.basis = Basis::a;
    r.validity_floor = j_of(S);
    r.coeffs.origin = 0;
    r.coeffs.values.assign(static_cast<std::size_t>(m) + 1, Integer(0));
    // One pass over I_h(S, m + h(m) - 1), bucketing by the block of large
    // values among the first m entries.
    for (const auto& pi : realize_Ih(h, S, m + hm - 1)) {
        int large = 0;
        int top = hm - 1;
        for (int i = 1; i <= m; ++i) {
            if (pi.at(i) >= hm) {
                ++large;
                top = std::max(top, pi.at(i));
            }
        }
        if (top == hm + large - 1) {
            r.coeffs.values[static_cast<std::size_t>(large)] += 1;
        }
    }
    for (int k = 0; k <= m; ++k) {
        r.poly.add(r.coeffs.at(k), hm - 1, k);
    }
    return r;
}

ExpansionResult expand(const HSequence& h, const PairSet& S, Basis basis) {
    switch (basis) {
    case Basis::fiber: return fiber_expansion(h, S);
    case Basis::b: return b_expansion(h, S);
    case Basis::a: return a_expansion(h, S);
    }
    throw std::logic_error("unreachable basis");
}

IntSequence a_from_b(const IntSequence& b, int m, int hm) {
    if (m < 1 || (!b.values.empty() && (b.first_index() < hm - m || b.last_index() > hm))) {
        throw DomainError("b must be indexed within h(m)-m .. h(m)");
    }
    IntSequence a;
    a.origin = 0;
    a.values.assign(static_cast<std::size_t>(m) + 1, Integer(0));
    a.values[0] = b.at(hm);
    for (int k = 1; k <= m; ++k) {
        Integer sum = 0;
        for (int j = k; j <= m; ++j) {
            sum += binom(j - 1, static_cast<unsigned long>(k - 1)) * b.at(hm - j);
        }
        a.values[static_cast<std::size_t>(k)] = sum;
    }
    return a;
}

int degree_of(const HSequence& h, const PairSet& S) {
    require_admissible(h, S);
    if (S.empty()) {
        return 0;
    }
    return h(m_of(S)) - d_S_of(h, S);
}

bool is_constant(const HSequence& h, const PairSet& S) {
    require_admissible(h, S);
    if (S.empty()) {
        return true;
    }
    const int m = m_of(S);
    for (int i = 1; i <= m; ++i) {
        bool all_out = true;
        for (int j = i + 1; j <= h(i) && all_out; ++j) {
            all_out = S.contains(i, j);
        }
        bool none_in = true;
        for (int k = 1; k < i && none_in; ++k) {
            if (i <= h(k)) {
                none_in = !S.contains(k, i);
            }
        }
        if (all_out && none_in) {
            return false;
        }
    }
    return true;
}

}  // namespace invpoly
