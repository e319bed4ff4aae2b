#pragma once

// Finite posets on 1..N, linear extensions, height sequences, and the
// poset P_{h,S} whose linear extensions are the inverses of I_h(S, h(m)).

#include "invpoly/core.hpp"
#include "invpoly/polynomial.hpp"

#include <random>
#include <span>
#include <utility>
#include <vector>

namespace invpoly {

class Poset {
public:
    /// Poset on 1..size generated by the relations a < b (pairs are ordered
    /// (smaller, larger), so a pair may have a > b numerically). The
    /// transitive closure is taken; a cycle throws DomainError.
    Poset(int size, std::span<const std::pair<int, int>> relations);

    int size() const noexcept { return size_; }
    /// a <_P b (strict).
    bool less(int a, int b) const;
    /// Cover relations (a, b): a < b with nothing strictly between, sorted.
    std::vector<std::pair<int, int>> covers() const;
    std::vector<int> maximal_elements() const;
    /// Elements strictly below / above v.
    std::vector<int> down_set(int v) const;
    std::vector<int> up_set(int v) const;

    bool operator==(const Poset&) const = default;

private:
    void check_element(int v) const;

    int size_;
    std::vector<std::vector<char>> less_;  // (size+1)^2, 1-based
};

/// i >_S j for (i, j) in S, i <_S j for possible pairs outside S with
/// j <= h(m), on the ground set 1..h(m(S)).
Poset build_poset(const HSequence& h, const PairSet& S);

/// Every linear extension as a word listing 1..N, in lexicographic order.
std::vector<Permutation> linear_extensions(const Poset& P);

/// (h_k)_{k=0}^{N-1}: number of linear extensions with exactly k elements before v.
IntSequence height_sequence(const Poset& P, int v);

/// (#down(v), N - #up(v) - 1): the index range where the height sequence is nonzero.
std::pair<int, int> height_support_bounds(const Poset& P, int v);

/// b_k(S) = h_{k-1}(P_{h,S}, h(m)), indexed h(m)-m .. h(m).
IntSequence b_from_heights(const HSequence& h, const PairSet& S);

/// #{i in [h(m)] : i <=_S h(m)} via reachability in P_{h,S}.
int d_S_by_reachability(const HSequence& h, const PairSet& S);

/// Same count via increasing chains i = i_1 < ... < i_{l+1} = h(m) whose
/// steps are possible pairs outside S.
int d_S_by_chains(const HSequence& h, const PairSet& S);

/// d_S, computed both ways; throws std::logic_error if they disagree.
int d_S_of(const HSequence& h, const PairSet& S);

/// Random poset on n elements: relations i < j (for a shuffled labelling)
/// each kept with probability p, then closed.
Poset random_poset(int n, double p, std::mt19937_64& rng);

}  // namespace invpoly
