#pragma once

// Brute-force oracle over S_n and the constructive permutation sets used by
// the expansions.

#include "invpoly/core.hpp"
#include "invpoly/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace invpoly {

/// Caps for brute-force enumeration over S_n and the worker count for
/// partitioned sweeps.
struct Limits {
    int max_n = 10;
    int jobs = 1;

    /// Defaults, with INVPOLY_MAX_N applied when set.
    static Limits from_environment();
    /// Throws BoundExceededError if n > max_n.
    void require(int n) const;
};

/// Visit every permutation of 1..n whose first letter is `first`, in
/// lexicographic order. The callback sees the word by reference.
void for_each_with_first(int n, int first, const std::function<void(const std::vector<int>&)>& visit);

/// Every permutation of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& visit);

/// All pi in S_n with inv_h(pi) = S, sorted. Pure brute force.
std::vector<Permutation> enumerate_Ih(const HSequence& h, const PairSet& S, int n, const Limits& limits = {});

/// I_h(S, n) built from the structure of its members: entries after m(S)
/// increase, so only the first m(S) positions are searched. No size cap.
std::vector<Permutation> realize_Ih(const HSequence& h, const PairSet& S, int n);

/// max{ sigma_k : k < j(S)+1 <= h(k) } for sigma in I_h(S, j(S)).
int t_of(const Permutation& sigma, const HSequence& h, const PairSet& S);

/// {pi in I_h(S, n) : pi_{h(m)} = k}; requires n >= h(m(S)).
std::vector<Permutation> B_k_set(const HSequence& h, const PairSet& S, int n, int k);

/// Members of I_h(S, m + h(m) - 1) whose first m entries meet [h(m), ...]
/// exactly in the interval [h(m), h(m) + k - 1].
std::vector<Permutation> A_star_set(const HSequence& h, const PairSet& S, int k);

/// inv_h classes of S_n with their sizes. Keys are exactly the admissible
/// sets with j(S) <= n; counts sum to n!.
std::map<PairSet, std::uint64_t> enumerate_admissible(const HSequence& h, int n, const Limits& limits = {});

/// Per-class data gathered in one pass over S_n.
struct ClassStats {
    std::uint64_t count = 0;
    /// Length generating function split by last entry: by_last[v] sums
    /// q^{length(pi)} over members with pi_n = v (index 0 unused).
    std::vector<QPoly> by_last;

    QPoly length_gf() const;
};

/// Group S_n by inv_h, tracking lengths and last entries.
std::map<PairSet, ClassStats> classify(const HSequence& h, int n, const Limits& limits = {});

/// sum over pi in S_n of t^{2 #inv_h(pi)}.
QPoly poincare(const HSequence& h, int n, const Limits& limits = {});

}  // namespace invpoly
