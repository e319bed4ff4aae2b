#include "invpoly/graded.hpp"

#include "invpoly/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

namespace invpoly {

QPoly GradedExpansion::at(int k) const {
    const int idx = k - origin();
    if (idx < 0 || idx >= static_cast<int>(b_q.size())) {
        return {};
    }
    return b_q[static_cast<std::size_t>(idx)];
}

QPoly graded_Ih_oracle(const HSequence& h, const PairSet& S, int n, const Limits& limits) {
    QPoly total;
    for (const auto& pi : enumerate_Ih(h, S, n, limits)) {
        total += QPoly::monomial(length(pi));
    }
    return total;
}

GradedExpansion b_q_coefficients(const HSequence& h, const PairSet& S) {
    if (!is_admissible(h, S)) {
        throw InadmissibleError("pair set is not h-admissible");
    }
    if (S.empty()) {
        throw DomainError("graded b-coefficients require a nonempty pair set");
    }
    GradedExpansion ge;
    ge.m = m_of(S);
    ge.hm = h(ge.m);
    ge.b_q.assign(static_cast<std::size_t>(ge.m) + 1, QPoly{});
    for (const auto& pi : realize_Ih(h, S, ge.hm)) {
        const int k = pi.at(ge.hm);
        ge.b_q[static_cast<std::size_t>(k - ge.origin())] += QPoly::monomial(length(pi));
    }
    return ge;
}

QPoly graded_expansion_eval(const GradedExpansion& ge, long n) {
    if (n < ge.hm) {
        throw BelowFloorError(n, ge.hm);
    }
    QPoly total;
    for (int k = ge.origin(); k <= ge.hm; ++k) {
        total += ge.at(k) * q_binom(n - k, ge.hm - k);
    }
    return total;
}

bool length_split_check(const HSequence& h, const PairSet& S, int n, const Limits& limits) {
    limits.require(n);
    const int m = m_of(S);
    const int hm = h(m);
    for (int k = hm - m; k <= hm; ++k) {
        for (const auto& pi : B_k_set(h, S, n, k)) {
            std::vector<bool> tail(static_cast<std::size_t>(n) + 1, false);
            for (int p = hm + 1; p <= n; ++p) {
                tail[static_cast<std::size_t>(pi.at(p))] = true;
            }
            std::vector<int> complement;
            for (int v = k + 1; v <= n; ++v) {
                if (!tail[static_cast<std::size_t>(v)]) {
                    complement.push_back(v);
                }
            }
            const int split = length(flatten(pi, hm)) + subset_length(complement, k + 1, n);
            if (split != length(pi)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<const ConjectureEntry*> ConjectureReport::violations() const {
    std::vector<const ConjectureEntry*> out;
    for (const auto& e : entries) {
        if (e.violation) {
            out.push_back(&e);
        }
    }
    return out;
}

ConjectureReport verify_conjecture(const HSequence& h, int hm_cap, const Limits& limits) {
    limits.require(hm_cap);
    const auto start = std::chrono::steady_clock::now();
    ConjectureReport report;

    for (int n = 2; n <= hm_cap; ++n) {
        auto classes = classify(h, n, limits);
        std::vector<std::pair<const PairSet*, const ClassStats*>> todo;
        for (const auto& [S, stats] : classes) {
            if (!S.empty() && h(m_of(S)) == n) {
                todo.emplace_back(&S, &stats);
            }
        }
        std::vector<ConjectureEntry> found(todo.size());
        const int workers = std::max(1, limits.jobs);
        auto work = [&](int worker) {
            for (std::size_t t = static_cast<std::size_t>(worker); t < todo.size(); t += static_cast<std::size_t>(workers)) {
                const auto t0 = std::chrono::steady_clock::now();
                const PairSet& S = *todo[t].first;
                const int m = m_of(S);
                // With n = h(m), B_k(S, n) is the class restricted to last entry k.
                std::vector<QPoly> seq;
                for (int k = n - m; k <= n; ++k) {
                    seq.push_back(todo[t].second->by_last[static_cast<std::size_t>(k)]);
                }
                ConjectureEntry entry;
                entry.S = S;
                entry.hm = n;
                entry.violation = first_q_log_concavity_violation(seq);
                entry.elapsed_us =
                    std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
                found[t] = std::move(entry);
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> threads;
            for (int w = 0; w < workers; ++w) {
                threads.emplace_back(work, w);
            }
        }
        for (auto& e : found) {
            report.entries.push_back(std::move(e));
        }
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const ConjectureEntry& a, const ConjectureEntry& b) { return a.S < b.S; });
    report.checked = report.entries.size();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<HSequence> hessenberg_family(int cap) {
    std::vector<HSequence> out;
    if (cap < 2) {
        return out;
    }
    const int L = cap - 1;
    std::vector<int> prefix(static_cast<std::size_t>(L));
    std::function<void(int, int)> fill = [&](int i, int lo) {
        if (i > L) {
            out.emplace_back(prefix, 1);
            return;
        }
        for (int v = std::max(lo, i + 1); v <= cap; ++v) {
            prefix[static_cast<std::size_t>(i - 1)] = v;
            fill(i + 1, v);
        }
    };
    fill(1, 2);
    return out;
}

}  // namespace invpoly
