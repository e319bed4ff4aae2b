#pragma once

// The q-analogue: length generating functions over I_h(S, n), the graded
// b-coefficients, and the exhaustive strong q-log-concavity sweep.

#include "invpoly/core.hpp"
#include "invpoly/enumeration.hpp"
#include "invpoly/polynomial.hpp"

#include <optional>
#include <vector>

namespace invpoly {

struct GradedExpansion {
    int hm = 0;
    int m = 0;
    /// b_q[k - (hm - m)] = sum over B_k(S, hm) of q^{length}, k = hm-m .. hm.
    std::vector<QPoly> b_q;

    int origin() const noexcept { return hm - m; }
    /// b_k(S; q), zero outside the stored range.
    QPoly at(int k) const;
};

/// sum over pi in I_h(S, n) of q^{length(pi)}, by brute force over S_n.
QPoly graded_Ih_oracle(const HSequence& h, const PairSet& S, int n, const Limits& limits = {});

GradedExpansion b_q_coefficients(const HSequence& h, const PairSet& S);

/// sum_k b_k(S; q) [n - k choose h(m) - k]_q. Throws BelowFloorError for n < hm.
QPoly graded_expansion_eval(const GradedExpansion& ge, long n);

/// For every pi in every B_k(S, n): length(pi) equals
/// length(pi|_{h(m)}) + subset length of [k+1, n] minus the tail values.
bool length_split_check(const HSequence& h, const PairSet& S, int n, const Limits& limits = {});

struct ConjectureEntry {
    PairSet S;
    int hm = 0;
    std::optional<QLogConcavityViolation> violation;
    double elapsed_us = 0.0;
};

struct ConjectureReport {
    std::size_t checked = 0;
    std::vector<ConjectureEntry> entries;  // sorted by S
    double elapsed_ms = 0.0;

    std::vector<const ConjectureEntry*> violations() const;
};

/// Check strong q-log-concavity of (b_k(S; q))_k for every admissible S with
/// h(m(S)) <= hm_cap. Each S is checked once, from the pass over S_{h(m)}.
ConjectureReport verify_conjecture(const HSequence& h, int hm_cap, const Limits& limits = {});

/// One h for each weakly increasing (h(1), ..., h(cap-1)) with
/// i < h(i) <= cap, extended by h(i) = i + 1. Together they realize every
/// (h, S) pair with h(m(S)) <= cap, since I_h(S, n) depends only on h(1..m).
std::vector<HSequence> hessenberg_family(int cap);

}  // namespace invpoly
