#pragma once

// Exhaustive invariant sweep over every admissible set of a fixed h.

#include "invpoly/core.hpp"
#include "invpoly/enumeration.hpp"

#include <string>
#include <utility>
#include <vector>

namespace invpoly {

struct CheckResult {
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(std::string what) {
        if (failures++ == 0) {
            first_failure = std::move(what);
        }
    }
};

struct VerifyOptions {
    int j_cap = 6;     // corpus: admissible S with j(S) <= j_cap
    int n_max = 8;     // largest n compared against brute-force counts
    int conj_cap = 6;  // strong q-log-concavity for h(m(S)) <= conj_cap
};

struct VerifyReport {
    std::size_t corpus_size = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

VerifyReport verify_invariants(const HSequence& h, const VerifyOptions& options, const Limits& limits = {});

}  // namespace invpoly
