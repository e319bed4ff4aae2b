#pragma once

#include <stdexcept>
#include <string>

namespace invpoly {

/// Base of every error the library raises on bad input or misuse.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The pair set is not the h-inversion set of any permutation.
class InadmissibleError : public Error {
public:
    using Error::Error;
};

/// A brute-force routine was asked to enumerate S_n above the configured cap.
class BoundExceededError : public Error {
public:
    BoundExceededError(int n, int max_n)
        : Error("n = " + std::to_string(n) + " exceeds brute-force bound " + std::to_string(max_n)),
          n_(n), max_n_(max_n) {}
    int n() const noexcept { return n_; }
    int max_n() const noexcept { return max_n_; }

private:
    int n_;
    int max_n_;
};

/// A counting formula was evaluated below the smallest n for which it counts.
class BelowFloorError : public Error {
public:
    BelowFloorError(long n, long floor)
        : Error("n = " + std::to_string(n) + " is below the validity floor " + std::to_string(floor)),
          n_(n), floor_(floor) {}
    long n() const noexcept { return n_; }
    long floor() const noexcept { return floor_; }

private:
    long n_;
    long floor_;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Violated precondition on otherwise well-formed values (bad h, no descent, negative entry, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace invpoly
