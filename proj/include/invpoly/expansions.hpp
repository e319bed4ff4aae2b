#pragma once

// Closed-form expansions of the restricted inversion polynomial I_h(S; n)
// in three binomial bases, plus degree and constancy.

#include "invpoly/core.hpp"
#include "invpoly/polynomial.hpp"

#include <string_view>

namespace invpoly {

enum class Basis { fiber, b, a };

std::string_view to_string(Basis basis);
/// Accepts "fiber", "b", "a". Throws ParseError otherwise.
Basis parse_basis(std::string_view text);

struct ExpansionResult {
    Basis basis = Basis::fiber;
    BinomialPoly poly;
    /// b: indexed h(m)-m .. h(m); a: indexed 0 .. m; fiber: multiplicity of
    /// C(n - t, j - t) indexed by t = 1 .. j(S). Empty for S = {}.
    IntSequence coeffs;
    /// Smallest n at which count_at() is accepted.
    int validity_floor = 1;

    /// The polynomial value, presented as a count. Throws BelowFloorError
    /// for n < validity_floor.
    Integer count_at(long n) const;
    /// The polynomial value with no validity check.
    Integer raw_eval(long n) const;
    MonomialPoly monomial() const { return to_monomial(poly); }
};

/// Sum over sigma in I_h(S, j(S)) of C(n - t(sigma), j(S) - t(sigma)).
ExpansionResult fiber_expansion(const HSequence& h, const PairSet& S);

/// Sum over k of b_k C(n - k, h(m) - k), b_k = #B_k(S, h(m)).
ExpansionResult b_expansion(const HSequence& h, const PairSet& S);

/// Sum over k of a_k C(n - h(m) + 1, k), a_k = #A*_k.
ExpansionResult a_expansion(const HSequence& h, const PairSet& S);

ExpansionResult expand(const HSequence& h, const PairSet& S, Basis basis);

/// a-coefficients from b-coefficients: a_0 = b_{h(m)} and
/// a_k = sum_{j=k}^{m} C(j-1, k-1) b_{h(m)-j}. Indices of `b` must lie in
/// hm-m .. hm (missing ones read as zero); throws DomainError otherwise.
IntSequence a_from_b(const IntSequence& b, int m, int hm);

/// h(m) - d_S.
int degree_of(const HSequence& h, const PairSet& S);

/// True iff no i <= m(S) has both: (i, j) in S for all i < j <= h(i), and
/// (k, i) not in S for all k < i <= h(k).
bool is_constant(const HSequence& h, const PairSet& S);

}  // namespace invpoly
