#include "invpoly/enumeration.hpp"

#include "invpoly/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

namespace invpoly {

namespace {

using Mask = unsigned __int128;
constexpr int kMaskBits = 128;

/// Bit positions for the possible pairs of a window, row by row.
struct PairIndex {
    std::vector<Pair> pairs;
    std::vector<int> top;  // top[i] = min(n, h(i)), 1-based

    PairIndex(const HSequence& h, int n) : top(static_cast<std::size_t>(n) + 1, 0) {
        for (int i = 1; i <= n; ++i) {
            top[static_cast<std::size_t>(i)] = std::min(n, h(i));
            for (int j = i + 1; j <= top[static_cast<std::size_t>(i)]; ++j) {
                pairs.push_back({i, j});
            }
        }
        if (static_cast<int>(pairs.size()) > kMaskBits) {
            throw DomainError("window too large for inversion masks");
        }
    }

    Mask mask_of(const std::vector<int>& w) const {
        Mask m = 0;
        int bit = 0;
        const int n = static_cast<int>(w.size());
        for (int i = 1; i <= n; ++i) {
            const int vi = w[static_cast<std::size_t>(i - 1)];
            for (int j = i + 1; j <= top[static_cast<std::size_t>(i)]; ++j, ++bit) {
                if (vi > w[static_cast<std::size_t>(j - 1)]) {
                    m |= Mask(1) << bit;
                }
            }
        }
        return m;
    }

    PairSet to_set(Mask m) const {
        std::vector<Pair> out;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if ((m >> b) & 1) {
                out.push_back(pairs[b]);
            }
        }
        return PairSet(std::move(out));
    }
};

struct Accum {
    std::uint64_t count = 0;
    // by_last[v][len] counts, allocated only when tracking.
    std::vector<std::vector<std::uint64_t>> by_last;
};

using AccumMap = std::map<Mask, Accum>;

/// One pass over S_n grouping by inv_h, split over first letters.
AccumMap group_pass(const HSequence& h, int n, const Limits& limits, bool track) {
    limits.require(n);
    const PairIndex index(h, n);
    const int max_len = n * (n - 1) / 2;
    const int workers = std::clamp(limits.jobs, 1, std::max(n, 1));

    auto work = [&](int worker, AccumMap& local) {
        for (int first = 1 + worker; first <= n; first += workers) {
            for_each_with_first(n, first, [&](const std::vector<int>& w) {
                auto& acc = local[index.mask_of(w)];
                ++acc.count;
                if (track) {
                    if (acc.by_last.empty()) {
                        acc.by_last.assign(static_cast<std::size_t>(n) + 1,
                                           std::vector<std::uint64_t>(static_cast<std::size_t>(max_len) + 1, 0));
                    }
                    ++acc.by_last[static_cast<std::size_t>(w.back())][static_cast<std::size_t>(length(w))];
                }
            });
        }
    };

    std::vector<AccumMap> partial(static_cast<std::size_t>(workers));
    if (workers == 1) {
        work(0, partial[0]);
    } else {
        std::vector<std::jthread> threads;
        for (int t = 0; t < workers; ++t) {
            threads.emplace_back(work, t, std::ref(partial[static_cast<std::size_t>(t)]));
        }
    }
    AccumMap merged = std::move(partial[0]);
    for (std::size_t t = 1; t < partial.size(); ++t) {
        for (auto& [key, acc] : partial[t]) {
            auto& dst = merged[key];
            dst.count += acc.count;
            if (track) {
                if (dst.by_last.empty()) {
                    dst.by_last = std::move(acc.by_last);
                } else {
                    for (std::size_t v = 0; v < acc.by_last.size(); ++v) {
                        for (std::size_t l = 0; l < acc.by_last[v].size(); ++l) {
                            dst.by_last[v][l] += acc.by_last[v][l];
                        }
                    }
                }
            }
        }
    }
    return merged;
}

QPoly to_qpoly(const std::vector<std::uint64_t>& counts) {
    std::vector<Integer> c;
    c.reserve(counts.size());
    for (auto x : counts) {
        c.emplace_back(static_cast<unsigned long>(x));
    }
    return QPoly(std::move(c));
}

void require_admissible(const HSequence& h, const PairSet& S) {
    if (!is_admissible(h, S)) {
        throw InadmissibleError("pair set is not h-admissible");
    }
}

}  // namespace

Limits Limits::from_environment() {
    Limits l;
    if (const char* env = std::getenv("INVPOLY_MAX_N"); env != nullptr && *env != '\0') {
        try {
            l.max_n = std::stoi(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("INVPOLY_MAX_N is not an integer: ") + env);
        }
    }
    return l;
}

void Limits::require(int n) const {
    if (n > max_n) {
        throw BoundExceededError(n, max_n);
    }
}

void for_each_with_first(int n, int first, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> w(static_cast<std::size_t>(n));
    w[0] = first;
    int v = 1;
    for (std::size_t k = 1; k < w.size(); ++k, ++v) {
        if (v == first) {
            ++v;
        }
        w[k] = v;
    }
    do {
        visit(w);
    } while (std::next_permutation(w.begin() + 1, w.end()));
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n == 0) {
        visit({});
        return;
    }
    for (int first = 1; first <= n; ++first) {
        for_each_with_first(n, first, visit);
    }
}

std::vector<Permutation> enumerate_Ih(const HSequence& h, const PairSet& S, int n, const Limits& limits) {
    limits.require(n);
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const std::vector<int>& w) {
        auto pi = Permutation::unchecked(w);
        if (inv_h(h, pi) == S) {
            out.push_back(std::move(pi));
        }
    });
    return out;
}

std::vector<Permutation> realize_Ih(const HSequence& h, const PairSet& S, int n) {
    if (S.empty()) {
        return {Permutation::identity(n)};
    }
    if (j_of(S) > n) {
        return {};
    }
    const int m = m_of(S);
    for (const auto& p : S) {
        if (p.i > m || p.j > h(p.i)) {
            return {};
        }
    }
    const auto H = h.table(n);
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<Permutation> out;

    auto consistent_at = [&](int pos) {
        for (int i = 1; i < pos; ++i) {
            if (pos <= H[static_cast<std::size_t>(i)]) {
                const bool inverted = w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(pos - 1)];
                if (inverted != S.contains(i, pos)) {
                    return false;
                }
            }
        }
        return true;
    };

    auto finish = [&]() {
        std::size_t k = static_cast<std::size_t>(m);
        for (int v = 1; v <= n; ++v) {
            if (!used[static_cast<std::size_t>(v)]) {
                w[k++] = v;
            }
        }
        for (int i = 1; i <= m; ++i) {
            const int top = std::min(n, H[static_cast<std::size_t>(i)]);
            for (int j = m + 1; j <= top; ++j) {
                const bool inverted = w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(j - 1)];
                if (inverted != S.contains(i, j)) {
                    return;
                }
            }
        }
        out.push_back(Permutation::unchecked(w));
    };

    std::function<void(int)> place = [&](int pos) {
        if (pos > m) {
            finish();
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) {
                continue;
            }
            w[static_cast<std::size_t>(pos - 1)] = v;
            if (consistent_at(pos)) {
                used[static_cast<std::size_t>(v)] = true;
                place(pos + 1);
                used[static_cast<std::size_t>(v)] = false;
            }
        }
    };
    place(1);
    return out;
}

int t_of(const Permutation& sigma, const HSequence& h, const PairSet& S) {
    const int j = j_of(S);
    int best = 0;
    for (int k = 1; k <= std::min(j, sigma.size()); ++k) {
        if (j + 1 <= h(k)) {
            best = std::max(best, sigma.at(k));
        }
    }
    return best;
}

std::vector<Permutation> B_k_set(const HSequence& h, const PairSet& S, int n, int k) {
    require_admissible(h, S);
    if (S.empty()) {
        throw DomainError("B_k sets require a nonempty pair set");
    }
    const int hm = h(m_of(S));
    if (n < hm) {
        throw DomainError("B_k(S, n) requires n >= h(m(S))");
    }
    std::vector<Permutation> out;
    for (auto& pi : realize_Ih(h, S, n)) {
        if (pi.at(hm) == k) {
            out.push_back(std::move(pi));
        }
    }
    return out;
}

std::vector<Permutation> A_star_set(const HSequence& h, const PairSet& S, int k) {
    require_admissible(h, S);
    if (S.empty()) {
        throw DomainError("A*_k sets require a nonempty pair set");
    }
    const int m = m_of(S);
    if (k < 0 || k > m) {
        throw DomainError("A*_k requires 0 <= k <= m(S)");
    }
    const int hm = h(m);
    const int N = m + hm - 1;
    std::vector<Permutation> out;
    for (auto& pi : realize_Ih(h, S, N)) {
        int large = 0;
        bool interval = true;
        for (int i = 1; i <= m; ++i) {
            const int v = pi.at(i);
            if (v >= hm) {
                ++large;
                interval = interval && v <= hm + k - 1;
            }
        }
        if (interval && large == k) {
            out.push_back(std::move(pi));
        }
    }
    return out;
}

QPoly ClassStats::length_gf() const {
    QPoly total;
    for (const auto& p : by_last) {
        total += p;
    }
    return total;
}

std::map<PairSet, std::uint64_t> enumerate_admissible(const HSequence& h, int n, const Limits& limits) {
    const PairIndex index(h, n);
    std::map<PairSet, std::uint64_t> out;
    for (const auto& [mask, acc] : group_pass(h, n, limits, false)) {
        out.emplace(index.to_set(mask), acc.count);
    }
    return out;
}

std::map<PairSet, ClassStats> classify(const HSequence& h, int n, const Limits& limits) {
    const PairIndex index(h, n);
    std::map<PairSet, ClassStats> out;
    for (auto& [mask, acc] : group_pass(h, n, limits, true)) {
        ClassStats stats;
        stats.count = acc.count;
        stats.by_last.reserve(acc.by_last.size());
        for (const auto& row : acc.by_last) {
            stats.by_last.push_back(to_qpoly(row));
        }
        out.emplace(index.to_set(mask), std::move(stats));
    }
    return out;
}

QPoly poincare(const HSequence& h, int n, const Limits& limits) {
    limits.require(n);
    const PairIndex index(h, n);
    std::vector<std::uint64_t> counts(2 * index.pairs.size() + 1, 0);
    for_each_permutation(n, [&](const std::vector<int>& w) {
        const Mask m = index.mask_of(w);
        int bits = 0;
        for (std::size_t b = 0; b < index.pairs.size(); ++b) {
            bits += static_cast<int>((m >> b) & 1);
        }
        ++counts[static_cast<std::size_t>(2 * bits)];
    });
    return to_qpoly(counts);
}

}  // namespace invpoly
