#include "invpoly/core.hpp"

#include "invpoly/errors.hpp"

#include <algorithm>
#include <numeric>

namespace invpoly {

HSequence::HSequence(std::vector<int> prefix, int tail_offset)
    : prefix_(std::move(prefix)), tail_offset_(tail_offset) {
    if (tail_offset_ < 1) {
        throw DomainError("tail_offset must be positive");
    }
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
        const int i = static_cast<int>(k) + 1;
        if (prefix_[k] <= i) {
            throw DomainError("h(" + std::to_string(i) + ") = " + std::to_string(prefix_[k]) +
                              " must exceed " + std::to_string(i));
        }
        if (k > 0 && prefix_[k] < prefix_[k - 1]) {
            throw DomainError("h must be weakly increasing (position " + std::to_string(i) + ")");
        }
    }
    if (!prefix_.empty()) {
        const int L = static_cast<int>(prefix_.size());
        if (prefix_.back() > L + 1 + tail_offset_) {
            throw DomainError("prefix end exceeds h(L+1) = L+1+tail_offset; h would decrease");
        }
    }
}

int HSequence::operator()(int i) const {
    if (i < 1) {
        throw DomainError("h is indexed from 1");
    }
    if (static_cast<std::size_t>(i) <= prefix_.size()) {
        return prefix_[static_cast<std::size_t>(i - 1)];
    }
    return i + tail_offset_;
}

std::vector<int> HSequence::table(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        out[static_cast<std::size_t>(i)] = (*this)(i);
    }
    return out;
}

int h_at(const HSequence& h, int i) {
    return h(i);
}

PairSet::PairSet(std::initializer_list<Pair> pairs) : PairSet(std::vector<Pair>(pairs)) {}

PairSet::PairSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (const auto& p : pairs_) {
        if (p.i < 1 || p.i >= p.j) {
            throw DomainError("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                              ") must satisfy 1 <= i < j");
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool PairSet::contains(Pair p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

PairSet PairSet::restricted(int window) const {
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
        if (p.j <= window) {
            kept.push_back(p);
        }
    }
    return PairSet(std::move(kept));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const auto n = word_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
            throw DomainError("word is not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::unchecked(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return unchecked(std::move(w));
}

Permutation Permutation::parse(std::string_view digits) {
    std::vector<int> w;
    for (char c : digits) {
        if (c < '1' || c > '9') {
            throw ParseError("permutation digit string must use 1-9");
        }
        w.push_back(c - '0');
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t k = 0; k < word_.size(); ++k) {
        inv[static_cast<std::size_t>(word_[k] - 1)] = static_cast<int>(k) + 1;
    }
    return unchecked(std::move(inv));
}

std::string Permutation::str() const {
    std::string out;
    const bool compact = word_.size() <= 9;
    for (std::size_t k = 0; k < word_.size(); ++k) {
        if (!compact && k > 0) {
            out += ',';
        }
        out += std::to_string(word_[k]);
    }
    return out;
}

PairSet possible_pairs(const HSequence& h, int n) {
    std::vector<Pair> out;
    for (int i = 1; i <= n; ++i) {
        const int top = std::min(n, h(i));
        for (int j = i + 1; j <= top; ++j) {
            out.push_back({i, j});
        }
    }
    return PairSet(std::move(out));
}

PairSet inv_h(const HSequence& h, const Permutation& pi) {
    const int n = pi.size();
    std::vector<Pair> out;
    for (int i = 1; i <= n; ++i) {
        const int top = std::min(n, h(i));
        for (int j = i + 1; j <= top; ++j) {
            if (pi.at(i) > pi.at(j)) {
                out.push_back({i, j});
            }
        }
    }
    return PairSet(std::move(out));
}

int length(std::span<const int> word) {
    int count = 0;
    for (std::size_t a = 0; a < word.size(); ++a) {
        for (std::size_t b = a + 1; b < word.size(); ++b) {
            count += word[a] > word[b] ? 1 : 0;
        }
    }
    return count;
}

int length(const Permutation& pi) {
    return length(std::span<const int>(pi.word()));
}

Permutation flatten(const Permutation& pi, int k) {
    if (k < 1 || k > pi.size()) {
        throw DomainError("flatten window must lie in 1..n");
    }
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int a = 1; a <= k; ++a) {
        int rank = 1;
        for (int b = 1; b <= k; ++b) {
            rank += pi.at(b) < pi.at(a) ? 1 : 0;
        }
        out[static_cast<std::size_t>(a - 1)] = rank;
    }
    return Permutation::unchecked(std::move(out));
}

bool is_h_closed(const HSequence& h, const PairSet& pairs, int window) {
    for (const auto& [i, j] : pairs) {
        if (j > window) {
            continue;
        }
        const int top = std::min(window, h(i));
        for (int k = j + 1; k <= top; ++k) {
            if (pairs.contains(j, k) && !pairs.contains(i, k)) {
                return false;
            }
        }
    }
    return true;
}

bool is_admissible_in_window(const HSequence& h, const PairSet& S, int window) {
    if (S.empty()) {
        return true;
    }
    for (const auto& [i, j] : S) {
        if (j > h(i) || j > window) {
            return false;
        }
    }
    if (!is_h_closed(h, S, window)) {
        return false;
    }
    std::vector<Pair> complement;
    for (const auto& p : possible_pairs(h, window)) {
        if (!S.contains(p)) {
            complement.push_back(p);
        }
    }
    return is_h_closed(h, PairSet(std::move(complement)), window);
}

bool is_admissible(const HSequence& h, const PairSet& S) {
    if (S.empty()) {
        return true;
    }
    return is_admissible_in_window(h, S, j_of(S));
}

int j_of(const PairSet& S) {
    if (S.empty()) {
        throw DomainError("j(S) is undefined for the empty set");
    }
    int best = 0;
    for (const auto& p : S) {
        best = std::max(best, p.j);
    }
    return best;
}

int m_of(const PairSet& S) {
    int best = 0;
    for (const auto& p : S) {
        if (p.j == p.i + 1) {
            best = std::max(best, p.i);
        }
    }
    if (best == 0) {
        throw DomainError("no descent: S contains no pair (i, i+1)");
    }
    return best;
}

}  // namespace invpoly
