#include "invpoly/verify.hpp"

#include "invpoly/expansions.hpp"
#include "invpoly/graded.hpp"
#include "invpoly/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace invpoly {

namespace {

std::string describe(const PairSet& S) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& p : S) {
        os << (first ? "" : ",") << '(' << p.i << ',' << p.j << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures == 0; });
}

VerifyReport verify_invariants(const HSequence& h, const VerifyOptions& options, const Limits& limits) {
    limits.require(options.n_max);
    limits.require(options.j_cap);

    std::map<int, std::map<PairSet, ClassStats>> classes;
    for (int n = 1; n <= std::max(options.n_max, options.j_cap); ++n) {
        classes[n] = classify(h, n, limits);
    }

    CheckResult admissible{"admissibility"};
    CheckResult triple{"triple agreement"};
    CheckResult oracle{"oracle counts"};
    CheckResult logconcave{"log-concavity"};
    CheckResult conversion{"a from b"};
    CheckResult heights{"b from heights"};
    CheckResult bijection{"extension bijection"};
    CheckResult stanley{"height sequences"};
    CheckResult degree{"degree and constancy"};
    CheckResult graded{"graded expansion"};
    CheckResult split{"length split"};

    VerifyReport report;
    for (const auto& [S, stats] : classes[options.j_cap]) {
        if (S.empty()) {
            continue;
        }
        ++report.corpus_size;
        const std::string tag = describe(S);
        const int j = j_of(S);
        const int m = m_of(S);
        const int hm = h(m);

        ++admissible.checked;
        if (!is_admissible(h, S) || !is_admissible_in_window(h, S, j + 2)) {
            admissible.fail(tag);
        }

        const auto fib = fiber_expansion(h, S);
        const auto bex = b_expansion(h, S);
        const auto aex = a_expansion(h, S);
        const auto mono = fib.monomial();

        ++triple.checked;
        if (bex.monomial() != mono || aex.monomial() != mono) {
            triple.fail(tag);
        }

        for (int n = j; n <= options.n_max; ++n) {
            ++oracle.checked;
            const auto it = classes[n].find(S);
            const Integer truth = it == classes[n].end() ? Integer(0) : Integer(static_cast<unsigned long>(it->second.count));
            if (fib.count_at(n) != truth || aex.count_at(n) != truth || bex.raw_eval(n) != truth) {
                oracle.fail(tag + " at n=" + std::to_string(n));
            }
        }

        ++logconcave.checked;
        for (const auto* seq : {&bex.coeffs, &aex.coeffs}) {
            const bool nonneg = std::all_of(seq->values.begin(), seq->values.end(), [](const Integer& x) { return x >= 0; });
            if (!nonneg || !is_log_concave(*seq) || !has_no_internal_zeros(*seq) || !is_pf2(*seq)) {
                logconcave.fail(tag);
            }
        }

        ++conversion.checked;
        if (a_from_b(bex.coeffs, m, hm) != aex.coeffs) {
            conversion.fail(tag);
        }

        const Poset P = build_poset(h, S);
        ++heights.checked;
        if (b_from_heights(h, S) != bex.coeffs) {
            heights.fail(tag);
        }

        ++bijection.checked;
        std::vector<Permutation> inverses;
        for (const auto& pi : realize_Ih(h, S, hm)) {
            inverses.push_back(pi.inverse());
        }
        std::sort(inverses.begin(), inverses.end());
        if (inverses != linear_extensions(P)) {
            bijection.fail(tag);
        }

        for (int v = 1; v <= P.size(); ++v) {
            ++stanley.checked;
            const auto seq = height_sequence(P, v);
            const auto [lo, hi] = height_support_bounds(P, v);
            bool support_ok = true;
            for (int k = 0; k < P.size(); ++k) {
                support_ok = support_ok && ((seq.at(k) != 0) == (lo <= k && k <= hi));
            }
            if (!support_ok || !is_log_concave(seq)) {
                stanley.fail(tag + " v=" + std::to_string(v));
            }
        }

        ++degree.checked;
        const auto maxima = P.maximal_elements();
        const bool unique_top = maxima.size() == 1 && maxima.front() == hm;
        const bool constant = is_constant(h, S);
        if (degree_of(h, S) != mono.degree() || constant != (mono.degree() == 0) || constant != unique_top) {
            degree.fail(tag);
        }

        const auto ge = b_q_coefficients(h, S);
        ++graded.checked;
        for (int k = hm - m; k <= hm; ++k) {
            if (ge.at(k).at_one() != bex.coeffs.at(k)) {
                graded.fail(tag + " q=1 at k=" + std::to_string(k));
            }
        }
        for (int n = hm; n <= options.n_max; ++n) {
            ++graded.checked;
            const auto it = classes[n].find(S);
            const QPoly truth = it == classes[n].end() ? QPoly{} : it->second.length_gf();
            if (graded_expansion_eval(ge, n) != truth) {
                graded.fail(tag + " at n=" + std::to_string(n));
            }
            ++split.checked;
            if (!length_split_check(h, S, n, limits)) {
                split.fail(tag + " at n=" + std::to_string(n));
            }
        }
    }

    CheckResult conjecture{"strong q-log-concavity"};
    if (options.conj_cap >= 2) {
        const auto cr = verify_conjecture(h, options.conj_cap, limits);
        conjecture.checked = cr.checked;
        for (const auto* e : cr.violations()) {
            conjecture.fail(describe(e->S));
        }
    }

    report.checks = {admissible, triple, oracle, logconcave, conversion, heights,
                     bijection, stanley, degree, graded, split, conjecture};
    return report;
}

}  // namespace invpoly
