#include "invpoly/poset.hpp"

#include "invpoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace invpoly {

Poset::Poset(int size, std::span<const std::pair<int, int>> relations)
    : size_(size),
      less_(static_cast<std::size_t>(size) + 1, std::vector<char>(static_cast<std::size_t>(size) + 1, 0)) {
    if (size < 0) {
        throw DomainError("poset size must be nonnegative");
    }
    for (const auto& [a, b] : relations) {
        check_element(a);
        check_element(b);
        if (a == b) {
            throw DomainError("relation " + std::to_string(a) + " < " + std::to_string(a) + " is reflexive");
        }
        less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    // Floyd-Warshall style closure.
    for (int k = 1; k <= size_; ++k) {
        for (int a = 1; a <= size_; ++a) {
            if (!less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)]) {
                continue;
            }
            for (int b = 1; b <= size_; ++b) {
                if (less_[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)]) {
                    less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
                }
            }
        }
    }
    for (int a = 1; a <= size_; ++a) {
        if (less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)]) {
            throw DomainError("relations contain a cycle through " + std::to_string(a));
        }
    }
}

void Poset::check_element(int v) const {
    if (v < 1 || v > size_) {
        throw DomainError("element " + std::to_string(v) + " outside 1.." + std::to_string(size_));
    }
}

bool Poset::less(int a, int b) const {
    check_element(a);
    check_element(b);
    return less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= size_; ++a) {
        for (int b = 1; b <= size_; ++b) {
            if (!less(a, b)) {
                continue;
            }
            bool between = false;
            for (int c = 1; c <= size_ && !between; ++c) {
                between = less(a, c) && less(c, b);
            }
            if (!between) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int a = 1; a <= size_; ++a) {
        if (up_set(a).empty()) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<int> Poset::down_set(int v) const {
    check_element(v);
    std::vector<int> out;
    for (int a = 1; a <= size_; ++a) {
        if (less(a, v)) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<int> Poset::up_set(int v) const {
    check_element(v);
    std::vector<int> out;
    for (int b = 1; b <= size_; ++b) {
        if (less(v, b)) {
            out.push_back(b);
        }
    }
    return out;
}

Poset build_poset(const HSequence& h, const PairSet& S) {
    if (!is_admissible(h, S)) {
        throw InadmissibleError("pair set is not h-admissible");
    }
    if (S.empty()) {
        throw DomainError("P_{h,S} requires a nonempty pair set");
    }
    const int hm = h(m_of(S));
    std::vector<std::pair<int, int>> relations;
    for (const auto& [i, j] : possible_pairs(h, hm)) {
        if (S.contains(i, j)) {
            relations.emplace_back(j, i);
        } else {
            relations.emplace_back(i, j);
        }
    }
    return Poset(hm, relations);
}

std::vector<Permutation> linear_extensions(const Poset& P) {
    const int N = P.size();
    std::vector<int> below_remaining(static_cast<std::size_t>(N) + 1, 0);
    for (int b = 1; b <= N; ++b) {
        below_remaining[static_cast<std::size_t>(b)] = static_cast<int>(P.down_set(b).size());
    }
    std::vector<std::vector<int>> ups(static_cast<std::size_t>(N) + 1);
    for (int a = 1; a <= N; ++a) {
        ups[static_cast<std::size_t>(a)] = P.up_set(a);
    }
    std::vector<bool> placed(static_cast<std::size_t>(N) + 1, false);
    std::vector<int> word;
    std::vector<Permutation> out;

    std::function<void()> extend = [&]() {
        if (static_cast<int>(word.size()) == N) {
            out.push_back(Permutation::unchecked(word));
            return;
        }
        for (int a = 1; a <= N; ++a) {
            if (placed[static_cast<std::size_t>(a)] || below_remaining[static_cast<std::size_t>(a)] != 0) {
                continue;
            }
            placed[static_cast<std::size_t>(a)] = true;
            word.push_back(a);
            for (int b : ups[static_cast<std::size_t>(a)]) {
                --below_remaining[static_cast<std::size_t>(b)];
            }
            extend();
            for (int b : ups[static_cast<std::size_t>(a)]) {
                ++below_remaining[static_cast<std::size_t>(b)];
            }
            word.pop_back();
            placed[static_cast<std::size_t>(a)] = false;
        }
    };
    extend();
    return out;
}

IntSequence height_sequence(const Poset& P, int v) {
    if (v < 1 || v > P.size()) {
        throw DomainError("element " + std::to_string(v) + " outside the poset");
    }
    IntSequence seq;
    seq.origin = 0;
    seq.values.assign(static_cast<std::size_t>(P.size()), Integer(0));
    for (const auto& phi : linear_extensions(P)) {
        const auto& w = phi.word();
        const auto pos = std::find(w.begin(), w.end(), v) - w.begin();
        seq.values[static_cast<std::size_t>(pos)] += 1;
    }
    return seq;
}

std::pair<int, int> height_support_bounds(const Poset& P, int v) {
    if (v < 1 || v > P.size()) {
        throw DomainError("element " + std::to_string(v) + " outside the poset");
    }
    const int lo = static_cast<int>(P.down_set(v).size());
    const int hi = P.size() - static_cast<int>(P.up_set(v).size()) - 1;
    return {lo, hi};
}

IntSequence b_from_heights(const HSequence& h, const PairSet& S) {
    const Poset P = build_poset(h, S);
    const int m = m_of(S);
    const int hm = h(m);
    const IntSequence heights = height_sequence(P, hm);
    IntSequence b;
    b.origin = hm - m;
    for (int k = hm - m; k <= hm; ++k) {
        b.values.push_back(heights.at(k - 1));
    }
    // Heights below index hm-m-1 must vanish, else b_k would be nonzero outside its range.
    for (int k = 0; k < hm - m - 1; ++k) {
        if (heights.at(k) != 0) {
            throw std::logic_error("height of h(m) nonzero below h(m)-m-1");
        }
    }
    return b;
}

int d_S_by_reachability(const HSequence& h, const PairSet& S) {
    const Poset P = build_poset(h, S);
    const int hm = P.size();
    return static_cast<int>(P.down_set(hm).size()) + 1;
}

int d_S_by_chains(const HSequence& h, const PairSet& S) {
    if (!is_admissible(h, S) || S.empty()) {
        throw InadmissibleError("d_S requires a nonempty admissible set");
    }
    const int hm = h(m_of(S));
    std::vector<bool> reaches(static_cast<std::size_t>(hm) + 1, false);
    reaches[static_cast<std::size_t>(hm)] = true;
    int count = 1;
    for (int i = hm - 1; i >= 1; --i) {
        const int top = std::min(hm, h(i));
        for (int j = i + 1; j <= top; ++j) {
            if (!S.contains(i, j) && reaches[static_cast<std::size_t>(j)]) {
                reaches[static_cast<std::size_t>(i)] = true;
                ++count;
                break;
            }
        }
    }
    return count;
}

int d_S_of(const HSequence& h, const PairSet& S) {
    const int by_poset = d_S_by_reachability(h, S);
    const int by_chain = d_S_by_chains(h, S);
    if (by_poset != by_chain) {
        throw std::logic_error("d_S: reachability gives " + std::to_string(by_poset) + ", chains give " +
                               std::to_string(by_chain));
    }
    return by_poset;
}

Poset random_poset(int n, double p, std::mt19937_64& rng) {
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);
    std::bernoulli_distribution keep(p);
    std::vector<std::pair<int, int>> relations;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (keep(rng)) {
                relations.emplace_back(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
            }
        }
    }
    return Poset(n, relations);
}

}  // namespace invpoly
