#pragma once

// Value types for restricted inversion sets: h-sequences, permutations in
// one-line notation, and canonical sets of index pairs.
//
// Indices follow the combinatorial convention: positions and values are
// 1-based, a permutation of size n is a word over 1..n.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invpoly {

/// Weakly increasing sequence with h(i) > i for all i, given by an explicit
/// prefix h(1..L) followed by the affine tail h(i) = i + tail_offset.
class HSequence {
public:
    HSequence(std::vector<int> prefix, int tail_offset);

    /// h(i) = i + offset for every i.
    static HSequence tail(int offset) { return HSequence({}, offset); }

    int operator()(int i) const;

    const std::vector<int>& prefix() const noexcept { return prefix_; }
    int tail_offset() const noexcept { return tail_offset_; }

    /// h restricted to 1..n as a vector (index 0 unused).
    std::vector<int> table(int n) const;

    bool operator==(const HSequence&) const = default;

private:
    std::vector<int> prefix_;
    int tail_offset_;
};

/// Evaluate h at a positive integer.
int h_at(const HSequence& h, int i);

struct Pair {
    int i = 0;
    int j = 0;
    auto operator<=>(const Pair&) const = default;
};

/// Finite set of pairs (i, j), i < j, kept sorted lexicographically.
class PairSet {
public:
    PairSet() = default;
    PairSet(std::initializer_list<Pair> pairs);
    explicit PairSet(std::vector<Pair> pairs);

    bool contains(Pair p) const;
    bool contains(int i, int j) const { return contains(Pair{i, j}); }
    bool empty() const noexcept { return pairs_.empty(); }
    std::size_t size() const noexcept { return pairs_.size(); }

    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }
    const std::vector<Pair>& pairs() const noexcept { return pairs_; }

    /// Pairs with both entries in 1..window.
    PairSet restricted(int window) const;

    auto operator<=>(const PairSet&) const = default;
    bool operator==(const PairSet&) const = default;

private:
    std::vector<Pair> pairs_;
};

/// A bijection of 1..n in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    /// Skips the bijection check; for enumerators that construct valid words.
    static Permutation unchecked(std::vector<int> word);
    static Permutation identity(int n);
    /// Digit string such as "45231"; only for n <= 9.
    static Permutation parse(std::string_view digits);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    /// 1-based entry pi_i.
    int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const noexcept { return word_; }

    Permutation inverse() const;
    std::string str() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

/// All (i, j) with 1 <= i < j <= min(n, h(i)).
PairSet possible_pairs(const HSequence& h, int n);

/// The set of h-inversions of pi.
PairSet inv_h(const HSequence& h, const Permutation& pi);

/// Number of ordinary inversions.
int length(const Permutation& pi);
int length(std::span<const int> word);

/// Relabel pi_1..pi_k to a permutation of 1..k with the same relative order.
Permutation flatten(const Permutation& pi, int k);

/// Closure under composition inside the window: (i,j),(j,k) in pairs and
/// (i,k) possible implies (i,k) in pairs.
bool is_h_closed(const HSequence& h, const PairSet& pairs, int window);

/// S is realized as inv_h of some permutation. Checks S and its complement
/// for closure in the window 1..j(S); indices beyond j(S) never break closure
/// of the complement because no pair of S reaches them.
bool is_admissible(const HSequence& h, const PairSet& S);

/// Same criterion with an explicit complement window (>= j(S)).
bool is_admissible_in_window(const HSequence& h, const PairSet& S, int window);

/// Largest second index. Throws DomainError on the empty set.
int j_of(const PairSet& S);

/// Largest i with (i, i+1) in S. Throws DomainError when S has no descent.
int m_of(const PairSet& S);

}  // namespace invpoly
