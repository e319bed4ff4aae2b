#include "invpoly/polynomial.hpp"

#include "invpoly/errors.hpp"

#include <algorithm>
#include <tuple>

namespace invpoly {

Integer binom(const Integer& n, unsigned long k) {
    Integer num = 1;
    for (unsigned long r = 0; r < k; ++r) {
        num *= n - r;
    }
    Integer den;
    mpz_fac_ui(den.get_mpz_t(), k);
    return num / den;
}

Integer binom(long n, unsigned long k) {
    return binom(Integer(n), k);
}

// --- BinomialPoly ---------------------------------------------------------

BinomialPoly::BinomialPoly(std::vector<BinomialTerm> terms) : terms_(std::move(terms)) {
    normalize();
}

void BinomialPoly::add(const Integer& c, long s, int d) {
    terms_.push_back({c, s, d});
    normalize();
}

void BinomialPoly::normalize() {
    for (const auto& t : terms_) {
        if (t.d < 0) {
            throw DomainError("binomial degree must be nonnegative");
        }
    }
    std::sort(terms_.begin(), terms_.end(), [](const BinomialTerm& a, const BinomialTerm& b) {
        return std::tie(a.d, a.s) < std::tie(b.d, b.s);
    });
    std::vector<BinomialTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().d == t.d && merged.back().s == t.s) {
            merged.back().c += t.c;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const BinomialTerm& t) { return t.c == 0; });
    terms_ = std::move(merged);
}

Integer eval_binomial_poly(const BinomialPoly& p, const Integer& n) {
    Integer total = 0;
    for (const auto& t : p.terms()) {
        total += t.c * binom(Integer(n - t.s), static_cast<unsigned long>(t.d));
    }
    return total;
}

// --- MonomialPoly ---------------------------------------------------------

MonomialPoly::MonomialPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
    trim();
}

void MonomialPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational MonomialPoly::eval(const Rational& n) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * n + *it;
    }
    return acc;
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
        for (std::size_t y = 0; y < b.coeffs_.size(); ++y) {
            out[x + y] += a.coeffs_[x] * b.coeffs_[y];
        }
    }
    return MonomialPoly(std::move(out));
}

MonomialPoly to_monomial(const BinomialPoly& p) {
    MonomialPoly total;
    for (const auto& t : p.terms()) {
        // C(n - s, d) = prod_{r<d} (n - s - r) / d!
        MonomialPoly term(std::vector<Rational>{Rational(t.c)});
        for (int r = 0; r < t.d; ++r) {
            term = term * MonomialPoly(std::vector<Rational>{Rational(-(t.s + r)), Rational(1)});
        }
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(t.d));
        std::vector<Rational> scaled = term.coeffs();
        for (auto& c : scaled) {
            c /= fact;
        }
        total += MonomialPoly(std::move(scaled));
    }
    return total;
}

// --- QPoly ----------------------------------------------------------------

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

QPoly QPoly::monomial(int exponent, const Integer& c) {
    std::vector<Integer> v(static_cast<std::size_t>(exponent) + 1, Integer(0));
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Integer QPoly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Integer QPoly::at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs_) {
        s += c;
    }
    return s;
}

bool QPoly::is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Integer(0));
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Integer(0));
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
        if (a.coeffs_[x] == 0) {
            continue;
        }
        for (std::size_t y = 0; y < b.coeffs_.size(); ++y) {
            out[x + y] += a.coeffs_[x] * b.coeffs_[y];
        }
    }
    return QPoly(std::move(out));
}

QPoly QPoly::shifted(int k) const {
    if (is_zero()) {
        return {};
    }
    std::vector<Integer> out(static_cast<std::size_t>(k), Integer(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(out));
}

QPoly q_binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return {};
    }
    // Pascal rows of [r choose c]_q for c = 0..k:
    // [r, c] = [r-1, c-1] + q^c [r-1, c].
    std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPoly::monomial(0);
    for (long r = 1; r <= n; ++r) {
        const long top = std::min(r, k);
        for (long c = top; c >= 1; --c) {
            auto& cell = row[static_cast<std::size_t>(c)];
            cell = row[static_cast<std::size_t>(c - 1)] + cell.shifted(static_cast<int>(c));
        }
    }
    return row[static_cast<std::size_t>(k)];
}

QPoly q_factorial(int n) {
    QPoly acc = QPoly::monomial(0);
    for (int r = 1; r <= n; ++r) {
        acc = acc * QPoly(std::vector<Integer>(static_cast<std::size_t>(r), Integer(1)));
    }
    return acc;
}

int subset_length(std::span<const int> A, int lo, int hi) {
    std::vector<bool> in(static_cast<std::size_t>(std::max(hi - lo + 1, 0)), false);
    for (int a : A) {
        if (a < lo || a > hi) {
            throw DomainError("subset element " + std::to_string(a) + " outside window");
        }
        in[static_cast<std::size_t>(a - lo)] = true;
    }
    int count = 0;
    int outside_below = 0;  // elements b < a with b not in A
    for (int x = lo; x <= hi; ++x) {
        if (in[static_cast<std::size_t>(x - lo)]) {
            count += outside_below;
        } else {
            ++outside_below;
        }
    }
    return count;
}

// --- sequences ------------------------------------------------------------

Integer IntSequence::at(int index) const {
    if (index < origin || index > last_index()) {
        return 0;
    }
    return values[static_cast<std::size_t>(index - origin)];
}

bool is_log_concave(const IntSequence& s) {
    const auto& a = s.values;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) {
            return false;
        }
    }
    return true;
}

bool has_no_internal_zeros(const IntSequence& s) {
    const auto& a = s.values;
    const auto first = std::find_if(a.begin(), a.end(), [](const Integer& x) { return x != 0; });
    if (first == a.end()) {
        return true;
    }
    const auto last = std::find_if(a.rbegin(), a.rend(), [](const Integer& x) { return x != 0; }).base();
    return std::none_of(first, last, [](const Integer& x) { return x == 0; });
}

bool is_pf2(const IntSequence& s) {
    const auto& a = s.values;
    for (const auto& x : a) {
        if (x < 0) {
            throw DomainError("PF2 test requires nonnegative entries");
        }
    }
    const long L = static_cast<long>(a.size());
    auto val = [&](long k) -> Integer { return (k < 0 || k >= L) ? Integer(0) : a[static_cast<std::size_t>(k)]; };
    // Minor of rows r < r+u and columns c < c+v of [a_{col-row}], with p = c - r:
    // a_p a_{p+v-u} - a_{p+v} a_{p-u}. Only p in [0, L) can make it negative.
    for (long p = 0; p < L; ++p) {
        for (long u = 1; u <= L; ++u) {
            for (long v = 1; v <= L; ++v) {
                if (val(p) * val(p + v - u) < val(p + v) * val(p - u)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<QLogConcavityViolation> first_q_log_concavity_violation(std::span<const QPoly> fs) {
    const int L = static_cast<int>(fs.size());
    auto f = [&](int k) -> const QPoly& {
        static const QPoly zero;
        return (k < 0 || k >= L) ? zero : fs[static_cast<std::size_t>(k)];
    };
    for (int i = 0; i < L; ++i) {
        for (int j = i; j < L; ++j) {
            const QPoly diff = f(i) * f(j) - f(i - 1) * f(j + 1);
            for (int e = 0; e <= diff.degree(); ++e) {
                if (diff.coeff(e) < 0) {
                    return QLogConcavityViolation{i, j, e, diff.coeff(e)};
                }
            }
        }
    }
    return std::nullopt;
}

bool q_seq_strongly_log_concave(std::span<const QPoly> fs) {
    return !first_q_log_concavity_violation(fs).has_value();
}

}  // namespace invpoly
