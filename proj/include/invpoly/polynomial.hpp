#pragma once

// Exact polynomial arithmetic: binomial-basis polynomials in n, their monomial
// form over the rationals, integer polynomials in q, Gaussian binomials, and
// analyzers for coefficient sequences.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

namespace invpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// n(n-1)...(n-k+1)/k!, defined for every integer n (zero when 0 <= n < k).
Integer binom(const Integer& n, unsigned long k);
Integer binom(long n, unsigned long k);

/// c * C(n - s, d).
struct BinomialTerm {
    Integer c;
    long s = 0;
    int d = 0;
    bool operator==(const BinomialTerm&) const = default;
};

/// Sum of shifted binomials in the variable n. Terms are kept sorted by
/// (d, s) with like terms merged and zero coefficients removed.
class BinomialPoly {
public:
    BinomialPoly() = default;
    explicit BinomialPoly(std::vector<BinomialTerm> terms);

    void add(const Integer& c, long s, int d);

    const std::vector<BinomialTerm>& terms() const noexcept { return terms_; }
    bool operator==(const BinomialPoly&) const = default;

private:
    void normalize();
    std::vector<BinomialTerm> terms_;
};

/// Polynomial in n with rational coefficients; coeffs()[k] multiplies n^k.
class MonomialPoly {
public:
    MonomialPoly() = default;
    explicit MonomialPoly(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational eval(const Rational& n) const;

    MonomialPoly& operator+=(const MonomialPoly& other);
    friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
    bool operator==(const MonomialPoly&) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Integer eval_binomial_poly(const BinomialPoly& p, const Integer& n);
MonomialPoly to_monomial(const BinomialPoly& p);

/// Integer polynomial in q; coeffs()[k] multiplies q^k. Trailing zeros trimmed.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Integer> coeffs);
    static QPoly monomial(int exponent, const Integer& c = 1);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of q^k, zero outside the stored range.
    Integer coeff(int k) const;
    Integer at_one() const;
    bool is_nonnegative() const;

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    /// Multiply by q^k.
    QPoly shifted(int k) const;

    bool operator==(const QPoly&) const = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Gaussian binomial [n choose k]_q; zero polynomial when k < 0 or k > n.
QPoly q_binom(long n, long k);

/// [n]!_q = (1)(1+q)...(1+...+q^{n-1}).
QPoly q_factorial(int n);

/// #{(a,b) in window^2 : a > b, a in A, b not in A} for A within [lo, hi].
int subset_length(std::span<const int> A, int lo, int hi);

/// Finite integer sequence whose first entry carries index `origin`.
struct IntSequence {
    int origin = 0;
    std::vector<Integer> values;

    int first_index() const noexcept { return origin; }
    int last_index() const noexcept { return origin + static_cast<int>(values.size()) - 1; }
    /// Value at an absolute index, zero outside the stored range.
    Integer at(int index) const;
    bool operator==(const IntSequence&) const = default;
};

/// Weak form a_i^2 >= a_{i-1} a_{i+1} at every interior index.
bool is_log_concave(const IntSequence& s);
/// The nonzero entries occupy a contiguous block of indices.
bool has_no_internal_zeros(const IntSequence& s);
/// Every 2x2 minor of the Toeplitz array [a_{j-i}] is nonnegative.
/// Throws DomainError on a negative entry.
bool is_pf2(const IntSequence& s);

struct QLogConcavityViolation {
    int i = 0;          // position in the polynomial sequence
    int j = 0;
    int exponent = 0;   // first negative coefficient of f_i f_j - f_{i-1} f_{j+1}
    Integer coefficient;
};

/// First (i, j, exponent) where f_i f_j - f_{i-1} f_{j+1} has a negative
/// coefficient, scanning i <= j; entries outside the range are zero.
std::optional<QLogConcavityViolation> first_q_log_concavity_violation(std::span<const QPoly> fs);

/// Strong q-log-concavity: no violation for any i <= j.
bool q_seq_strongly_log_concave(std::span<const QPoly> fs);

}  // namespace invpoly
